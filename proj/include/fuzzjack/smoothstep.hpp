#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace fuzzjack {

// Upper limit on the degree m tried by the exponent search.
inline constexpr std::uint64_t kJewettDegreeCap = 10'000'000;

/// p(x) = (1 - x^m)^n on [0,1]; nonincreasing with p(0) = 1 and p(1) = 0.
///
/// The outer exponent can be astronomically large for tight transitions, so
/// it is stored as an integer-valued double and p is evaluated in log space
/// once it exceeds 10^4.
struct JewettPoly {
  std::uint64_t degree = 1;  // m
  double exponent = 1.0;     // n, integer valued

  double operator()(double x) const noexcept;
};

// Smallest m (then smallest n) with p(a) > 1 - ε and p(b) < ε.
// Requires 0 <= a < b <= 1 and 0 < ε < 1/2; throws InvalidParams otherwise
// and SearchExhausted when no exponent pair exists below the caps.
JewettPoly jewett_poly(double a, double b, double eps);

/// n+1 step functions ψ_0..ψ_n around the nodes a_j = j/n:
///   ψ_j(x) < ε      for x >= a_j + δ  (j < n)
///   1 - ψ_j(x) < ε  for x <= a_j - δ  (j > 0)
/// Each ψ_j is the Jewett polynomial for [max(a_j - δ, 0), min(a_j + δ, 1)].
class PsiFamily {
 public:
  PsiFamily(int n, double delta, double eps);

  int n() const noexcept { return n_; }
  double delta() const noexcept { return delta_; }
  double eps() const noexcept { return eps_; }
  std::size_t size() const noexcept { return members_.size(); }
  const JewettPoly& member(std::size_t j) const { return members_[j]; }
  const std::vector<JewettPoly>& members() const noexcept { return members_; }

  double operator()(std::size_t j, double x) const { return members_[j](x); }
  std::vector<double> values(double x) const;

 private:
  int n_;
  double delta_;
  double eps_;
  std::vector<JewettPoly> members_;
};

/// Trapezoidal partition of unity φ_0..φ_n built from the ramps f_j:
/// φ_0 = f_0, φ_j = f_j·Π_{i<j}(1 - f_i), φ_n = Π_{i<n}(1 - f_i).
/// At most two members are nonzero at any x.
class PhiFamily {
 public:
  PhiFamily(int n, double delta);

  int n() const noexcept { return n_; }
  double delta() const noexcept { return delta_; }
  std::size_t size() const noexcept { return static_cast<std::size_t>(n_) + 1; }

  // Ramp f_j: 1 up to a_j - δ, linear across (a_j - δ, a_j + δ), 0 after.
  double ramp(std::size_t j, double x) const;

  double operator()(std::size_t j, double x) const;
  std::vector<double> values(double x) const;

 private:
  int n_;
  double delta_;
};

}  // namespace fuzzjack
