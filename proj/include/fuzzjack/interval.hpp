#pragma once

#include <iosfwd>

namespace fuzzjack {

// Compact real interval [lo, hi]. Plain double endpoints, no outward
// rounding; lo == hi is a crisp value.
class Interval {
 public:
  constexpr Interval() = default;
  // Throws InvariantError when lo > hi or either endpoint is not finite.
  Interval(double lo, double hi);

  static constexpr Interval point(double r) noexcept { return Interval(r, r, Unchecked{}); }

  constexpr double lo() const noexcept { return lo_; }
  constexpr double hi() const noexcept { return hi_; }

  friend constexpr bool operator==(const Interval&, const Interval&) = default;

 private:
  struct Unchecked {};
  constexpr Interval(double lo, double hi, Unchecked) noexcept : lo_(lo), hi_(hi) {}

  double lo_ = 0.0;
  double hi_ = 0.0;
};

double len(const Interval& a) noexcept;

// Hausdorff distance between compact intervals.
double hausdorff(const Interval& a, const Interval& b) noexcept;

// Interval gH-difference: the unique C with a = b + C or b = a + (-1)C.
Interval gh_diff_interval(const Interval& a, const Interval& b);

Interval minkowski_add(const Interval& a, const Interval& b);

Interval scale_interval(double k, const Interval& a);

// true iff inner ⊆ outer, allowing each endpoint to stick out by tol.
bool contains(const Interval& outer, const Interval& inner, double tol = 0.0) noexcept;

inline Interval operator+(const Interval& a, const Interval& b) { return minkowski_add(a, b); }
inline Interval operator*(double k, const Interval& a) { return scale_interval(k, a); }

std::ostream& operator<<(std::ostream& os, const Interval& a);

}  // namespace fuzzjack
