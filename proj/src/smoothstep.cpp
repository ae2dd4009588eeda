#include "fuzzjack/smoothstep.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "fuzzjack/errors.hpp"

namespace fuzzjack {

namespace {

constexpr double kLogSpaceExponent = 1e4;

double node(int j, int n) { return static_cast<double>(j) / static_cast<double>(n); }

void require_family_params(int n, double delta) {
  if (n < 1) throw InvalidParams("step family needs n >= 1");
  if (!(delta > 0.0 && delta < 1.0 / (2.0 * n))) {
    std::ostringstream os;
    os.precision(17);
    os << "delta = " << delta << " outside (0, 1/(2n)) for n = " << n;
    throw InvalidParams(os.str());
  }
}

void require_step_tolerance(double eps) {
  if (!(eps > 0.0 && eps < 0.5)) throw InvalidParams("step tolerance eps must lie in (0, 1/2)");
}

}  // namespace

double JewettPoly::operator()(double x) const noexcept {
  if (x <= 0.0) return 1.0;
  if (x >= 1.0) return 0.0;
  const double xm = std::pow(x, static_cast<double>(degree));
  if (exponent > kLogSpaceExponent) return std::exp(exponent * std::log1p(-xm));
  return std::pow(1.0 - xm, exponent);
}

JewettPoly jewett_poly(double a, double b, double eps) {
  if (!(a >= 0.0 && a < b && b <= 1.0)) throw InvalidParams("jewett_poly needs 0 <= a < b <= 1");
  require_step_tolerance(eps);

  const double log_eps = std::log(eps);
  const double log_keep = std::log1p(-eps);
  constexpr double inf = std::numeric_limits<double>::infinity();

  // p(b) < ε  <=>  n > ln ε / ln(1 - b^m)
  // p(a) > 1-ε <=> n < ln(1-ε) / ln(1 - a^m)
  for (std::uint64_t m = 1; m <= kJewettDegreeCap; ++m) {
    const double md = static_cast<double>(m);
    const double lower = b == 1.0 ? 0.0 : log_eps / std::log1p(-std::pow(b, md));
    if (!std::isfinite(lower)) break;  // grows with m, nothing further can work
    double upper = inf;
    if (a > 0.0) {
      const double am = std::pow(a, md);
      if (am > 0.0) upper = log_keep / std::log1p(-am);
    }
    JewettPoly p{m, std::max(1.0, std::floor(lower) + 1.0)};
    if (!(p.exponent < upper)) continue;

    // The bounds and the evaluator round differently; settle it by evaluation.
    for (int bump = 0; bump < 4 && !(p(b) < eps); ++bump) {
      p.exponent = std::max(p.exponent + 1.0, std::nextafter(p.exponent, inf));
    }
    const double at_a = p(a);
    if (p(b) < eps && at_a > 1.0 - eps && 1.0 - at_a < eps) return p;
  }
  std::ostringstream os;
  os.precision(17);
  os << "no Jewett exponents for a = " << a << ", b = " << b << ", eps = " << eps;
  throw SearchExhausted(os.str());
}

PsiFamily::PsiFamily(int n, double delta, double eps) : n_(n), delta_(delta), eps_(eps) {
  require_family_params(n, delta);
  require_step_tolerance(eps);
  members_.reserve(static_cast<std::size_t>(n) + 1);
  for (int j = 0; j <= n; ++j) {
    const double aj = node(j, n);
    members_.push_back(jewett_poly(std::max(aj - delta, 0.0), std::min(aj + delta, 1.0), eps));
  }
}

std::vector<double> PsiFamily::values(double x) const {
  std::vector<double> out(members_.size());
  for (std::size_t j = 0; j < members_.size(); ++j) out[j] = members_[j](x);
  return out;
}

PhiFamily::PhiFamily(int n, double delta) : n_(n), delta_(delta) {
  require_family_params(n, delta);
}

double PhiFamily::ramp(std::size_t j, double x) const {
  const auto jj = static_cast<int>(j);
  if (jj == 0) return x < delta_ ? (delta_ - x) / delta_ : 0.0;
  if (jj == n_) return x <= 1.0 - delta_ ? 1.0 : (1.0 - x) / delta_;
  const double aj = node(jj, n_);
  if (x <= aj - delta_) return 1.0;
  if (x >= aj + delta_) return 0.0;
  return (aj + delta_ - x) / (2.0 * delta_);
}

std::vector<double> PhiFamily::values(double x) const {
  std::vector<double> out(size());
  double remaining = 1.0;  // Π_{i<j} (1 - f_i)
  for (std::size_t j = 0; j + 1 < out.size(); ++j) {
    const double f = ramp(j, x);
    out[j] = f * remaining;
    remaining *= 1.0 - f;
  }
  out.back() = remaining;
  return out;
}

double PhiFamily::operator()(std::size_t j, double x) const { return values(x).at(j); }

}  // namespace fuzzjack
