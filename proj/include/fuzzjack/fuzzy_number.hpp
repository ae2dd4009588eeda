#pragma once

#include <cstddef>
#include <iosfwd>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "fuzzjack/interval.hpp"

namespace fuzzjack {

// Tolerances absorbing floating-point noise in the level-wise checks.
inline constexpr double kMonotoneTol = 1e-9;
inline constexpr double kInclusionTol = 1e-9;
inline constexpr double kNestingTol = 1e-9;

/// Ordered alpha levels 0 = λ_0 < λ_1 < ... < λ_m = 1.
///
/// Copies share the level storage, so grid equality checks are usually a
/// pointer compare.
class AlphaGrid {
 public:
  explicit AlphaGrid(std::vector<double> levels);

  static AlphaGrid uniform(std::size_t m = 100);

  std::span<const double> levels() const noexcept { return *levels_; }
  double level(std::size_t i) const { return (*levels_)[i]; }
  // Number of grid nodes, m + 1.
  std::size_t size() const noexcept { return levels_->size(); }

  // Index of a level within 1e-12, if alpha is one of the grid nodes.
  std::optional<std::size_t> index_of(double alpha) const;

  friend bool operator==(const AlphaGrid& a, const AlphaGrid& b) noexcept;

 private:
  std::shared_ptr<const std::vector<double>> levels_;
};

/// A fuzzy number stored as its alpha-cuts on a grid; cuts[i] = [u⁻(λ_i), u⁺(λ_i)].
///
/// Cuts must be nested (cuts[i+1] ⊆ cuts[i]) up to kNestingTol. Between grid
/// nodes the endpoint functions are read as piecewise linear.
class FuzzyNumber {
 public:
  FuzzyNumber(AlphaGrid grid, std::vector<Interval> cuts);

  static FuzzyNumber crisp(double r, const AlphaGrid& grid);
  static FuzzyNumber triangular(double a, double b, double c, const AlphaGrid& grid);
  static FuzzyNumber trapezoidal(double a, double b, double c, double d, const AlphaGrid& grid);

  const AlphaGrid& grid() const noexcept { return grid_; }
  std::span<const Interval> cuts() const noexcept { return cuts_; }
  const Interval& cut(std::size_t i) const { return cuts_[i]; }
  std::size_t size() const noexcept { return cuts_.size(); }

  const Interval& support() const { return cuts_.front(); }
  const Interval& core() const { return cuts_.back(); }

  // max |endpoint| over all levels, i.e. d_infty(u, crisp(0)).
  double magnitude() const noexcept;

  bool is_crisp(double tol = 0.0) const noexcept;

  friend bool operator==(const FuzzyNumber& a, const FuzzyNumber& b) noexcept;

 private:
  AlphaGrid grid_;
  std::vector<Interval> cuts_;
};

// Index of the first adjacent pair (i, i+1) with cuts[i+1] not inside cuts[i],
// or nullopt when the family is nested within tol.
std::optional<std::size_t> first_nesting_violation(std::span<const Interval> cuts, double tol);

FuzzyNumber add(const FuzzyNumber& u, const FuzzyNumber& v);
FuzzyNumber scale(double k, const FuzzyNumber& u);

inline FuzzyNumber operator+(const FuzzyNumber& u, const FuzzyNumber& v) { return add(u, v); }
inline FuzzyNumber operator*(double k, const FuzzyNumber& u) { return scale(k, u); }

// Supremum metric over the grid levels.
double d_infty(const FuzzyNumber& u, const FuzzyNumber& v);

// "u includes v": every cut of v lies inside the matching cut of u.
bool includes(const FuzzyNumber& u, const FuzzyNumber& v, double tol = kInclusionTol);

// Existence test for u ⊖_gH v: either
//   len(u) >= len(v), u⁻-v⁻ nondecreasing and u⁺-v⁺ nonincreasing in λ, or
//   len(u) <= len(v), u⁺-v⁺ nondecreasing and u⁻-v⁻ nonincreasing in λ.
bool gh_exists(const FuzzyNumber& u, const FuzzyNumber& v, double tol = kMonotoneTol);

// Level-wise gH-difference; throws GHDifferenceUndefined when gh_exists fails.
FuzzyNumber gh_difference(const FuzzyNumber& u, const FuzzyNumber& v);

// g-difference: suffix min/max of the level-wise endpoint differences, so
// the result is nested by construction and always exists.
FuzzyNumber g_difference(const FuzzyNumber& u, const FuzzyNumber& v);

std::ostream& operator<<(std::ostream& os, const FuzzyNumber& u);

}  // namespace fuzzjack
