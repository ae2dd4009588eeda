#include "fuzzjack/approximants.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <type_traits>

#include "fuzzjack/errors.hpp"
#include "fuzzjack/kernels.hpp"

namespace fuzzjack {

namespace {

void require_build_params(int n, double delta) {
  if (n < 1) throw InvalidParams("approximant needs n >= 1");
  if (!(delta > 0.0 && delta < 1.0 / (2.0 * n))) {
    std::ostringstream os;
    os.precision(17);
    os << "delta = " << delta << " outside (0, 1/(2n)) for n = " << n;
    throw InvalidParams(os.str());
  }
}

void require_eps(double eps) {
  if (!(eps > 0.0)) throw InvalidParams("approximation slack eps must be > 0");
}

std::vector<FuzzyNumber> node_values(const FuzzyFunction& f, int n) {
  const auto nodes = kernels::uniform_points(static_cast<std::size_t>(n));
  return kernels::sample_values([&f](double x) { return f(x); }, nodes);
}

std::vector<Interval> node_values(const IntervalFunction& f, int n) {
  const auto nodes = kernels::uniform_points(static_cast<std::size_t>(n));
  return kernels::sample_values(f.evaluator, nodes);
}

std::shared_ptr<const PsiFamily> psi_for(double diameter, int n, double eps, double delta) {
  require_build_params(n, delta);
  require_eps(eps);
  return std::make_shared<const PsiFamily>(n, delta, step_tolerance(eps, n, diameter));
}

void require_psi(const std::shared_ptr<const PsiFamily>& psi) {
  if (!psi) throw InvalidParams("missing psi family");
}

void require_nested_decreasing(const FuzzyFunction& f) {
  if (!check_nested_decreasing(f)) {
    throw HypothesisViolated("nesting hypothesis failed: f(y) is not inside f(x) for some x <= y");
  }
}

void require_nested_increasing(const FuzzyFunction& f) {
  if (!check_nested_increasing(f)) {
    throw HypothesisViolated("nesting hypothesis failed: f(x) is not inside f(y) for some x <= y");
  }
}

// Level-wise accumulation of base + Σ c_j·deltas[j].
template <class Delta>
void accumulate(std::vector<Interval>& cuts, std::span<const double> coeffs,
                std::span<const Delta> deltas) {
  for (std::size_t j = 0; j < deltas.size(); ++j) {
    const double c = coeffs[j];
    if (c == 0.0) continue;
    if constexpr (std::is_same_v<Delta, FuzzyNumber>) {
      for (std::size_t k = 0; k < cuts.size(); ++k) cuts[k] = cuts[k] + c * deltas[j].cut(k);
    } else {
      cuts[0] = cuts[0] + c * deltas[j];
    }
  }
}

}  // namespace

std::string_view to_string(Method method) noexcept {
  switch (method) {
    case Method::gh_dec:
      return "gh_dec";
    case Method::gh_inc:
      return "gh_inc";
    case Method::g_diff:
      return "g_diff";
    case Method::trapezoid:
      return "trapezoid";
    case Method::interval_gh:
      return "interval_gh";
  }
  return "unknown";
}

std::optional<Method> parse_method(std::string_view name) noexcept {
  for (Method m : {Method::gh_dec, Method::gh_inc, Method::g_diff, Method::trapezoid,
                   Method::interval_gh}) {
    if (to_string(m) == name) return m;
  }
  return std::nullopt;
}

double default_delta(int n) {
  if (n < 1) throw InvalidParams("n must be >= 1");
  return 1.0 / (4.0 * n);
}

double diameter_bound(const FuzzyFunction& f) {
  const auto xs = kernels::uniform_points(kDiameterProbes - 1);
  const auto values = kernels::sample_values([&f](double x) { return f(x); }, xs);
  const double diameter = kernels::max_gap_distance(std::span<const FuzzyNumber>(values), xs.size());
  return 2.0 * std::max(1.0, 0.5 * diameter);
}

double diameter_bound(const IntervalFunction& f) {
  const auto xs = kernels::uniform_points(kDiameterProbes - 1);
  const auto values = kernels::sample_values(f.evaluator, xs);
  const double diameter = kernels::max_gap_distance(std::span<const Interval>(values), xs.size());
  return 2.0 * std::max(1.0, 0.5 * diameter);
}

double step_tolerance(double eps, int n, double diameter) {
  require_eps(eps);
  if (n < 1) throw InvalidParams("n must be >= 1");
  if (!(diameter > 0.0)) throw InvalidParams("diameter bound must be > 0");
  return eps / (2.0 * (n + 1) * diameter);
}

// ---------------------------------------------------------------------------
// Coefficients

Coefficients Coefficients::psi(std::shared_ptr<const PsiFamily> family, std::size_t count) {
  require_psi(family);
  if (count > family->size()) throw InvalidParams("more coefficients than psi members");
  Coefficients c(Kind::psi, count);
  c.psi_ = std::move(family);
  return c;
}

Coefficients Coefficients::one_minus_psi(std::shared_ptr<const PsiFamily> family,
                                         std::size_t count) {
  Coefficients c = psi(std::move(family), count);
  c.kind_ = Kind::one_minus_psi;
  return c;
}

Coefficients Coefficients::phi(std::shared_ptr<const PhiFamily> family) {
  if (!family) throw InvalidParams("missing phi family");
  Coefficients c(Kind::phi, family->size());
  c.phi_ = std::move(family);
  return c;
}

std::vector<double> Coefficients::values(double x) const {
  if (kind_ == Kind::phi) return phi_->values(x);
  std::vector<double> out(count_);
  for (std::size_t j = 0; j < count_; ++j) {
    const double p = (*psi_)(j, x);
    out[j] = kind_ == Kind::psi ? p : 1.0 - p;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Approximant

Approximant::Approximant(Method method, int n, double delta, double eps, FuzzyNumber base,
                         std::vector<FuzzyNumber> deltas, Coefficients coefficients)
    : method_(method),
      n_(n),
      delta_(delta),
      eps_(eps),
      base_(std::move(base)),
      deltas_(std::move(deltas)),
      coefficients_(std::move(coefficients)) {
  if (deltas_.size() != coefficients_.size()) {
    throw InvalidParams("approximant needs one coefficient per term");
  }
  for (const auto& d : deltas_) {
    if (!(d.grid() == base_.grid())) throw GridMismatch();
  }
}

FuzzyNumber Approximant::operator()(double x) const {
  if (!(x >= 0.0 && x <= 1.0)) throw DomainError("approximant evaluated outside [0,1]");
  const auto coeffs = coefficients_.values(x);
  std::vector<Interval> cuts(base_.cuts().begin(), base_.cuts().end());
  accumulate(cuts, coeffs, std::span<const FuzzyNumber>(deltas_));
  return FuzzyNumber(base_.grid(), std::move(cuts));
}

IntervalApproximant::IntervalApproximant(int n, double delta, double eps, Interval base,
                                         std::vector<Interval> deltas, Coefficients coefficients)
    : n_(n),
      delta_(delta),
      eps_(eps),
      base_(base),
      deltas_(std::move(deltas)),
      coefficients_(std::move(coefficients)) {
  if (deltas_.size() != coefficients_.size()) {
    throw InvalidParams("approximant needs one coefficient per term");
  }
}

Interval IntervalApproximant::operator()(double x) const {
  if (!(x >= 0.0 && x <= 1.0)) throw DomainError("approximant evaluated outside [0,1]");
  const auto coeffs = coefficients_.values(x);
  std::vector<Interval> cuts{base_};
  accumulate(cuts, coeffs, std::span<const Interval>(deltas_));
  return cuts[0];
}

// ---------------------------------------------------------------------------
// Interval builders

IntervalApproximant build_interval_gh_dec(const IntervalFunction& f, int n, double eps,
                                          double delta) {
  require_build_params(n, delta);
  return build_interval_gh_dec(f, psi_for(diameter_bound(f), n, eps, delta), eps);
}

IntervalApproximant build_interval_gh_dec(const IntervalFunction& f,
                                          std::shared_ptr<const PsiFamily> psi, double eps) {
  require_psi(psi);
  if (!check_width_nonincreasing(f)) {
    throw HypothesisViolated("width hypothesis failed: len(f(x)) is not nonincreasing");
  }
  const int n = psi->n();
  const auto nodes = node_values(f, n);
  std::vector<Interval> deltas;
  deltas.reserve(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) deltas.push_back(gh_diff_interval(nodes[j], nodes[j + 1]));
  const double delta = psi->delta();
  return IntervalApproximant(n, delta, eps, nodes.back(), std::move(deltas),
                             Coefficients::psi(std::move(psi), static_cast<std::size_t>(n)));
}

IntervalApproximant build_interval_gh_inc(const IntervalFunction& f, int n, double eps,
                                          double delta) {
  require_build_params(n, delta);
  return build_interval_gh_inc(f, psi_for(diameter_bound(f), n, eps, delta), eps);
}

IntervalApproximant build_interval_gh_inc(const IntervalFunction& f,
                                          std::shared_ptr<const PsiFamily> psi, double eps) {
  require_psi(psi);
  if (!check_width_nondecreasing(f)) {
    throw HypothesisViolated("width hypothesis failed: len(f(x)) is not nondecreasing");
  }
  const int n = psi->n();
  const auto nodes = node_values(f, n);
  std::vector<Interval> deltas;
  deltas.reserve(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) deltas.push_back(gh_diff_interval(nodes[j + 1], nodes[j]));
  const double delta = psi->delta();
  return IntervalApproximant(n, delta, eps, nodes.front(), std::move(deltas),
                             Coefficients::one_minus_psi(std::move(psi), static_cast<std::size_t>(n)));
}

// ---------------------------------------------------------------------------
// Fuzzy builders

std::shared_ptr<const PsiFamily> make_psi_family(const FuzzyFunction& f, int n, double eps,
                                                 double delta) {
  require_build_params(n, delta);
  return psi_for(diameter_bound(f), n, eps, delta);
}

Approximant build_gh_dec(const FuzzyFunction& f, int n, double eps, double delta) {
  return build_gh_dec(f, make_psi_family(f, n, eps, delta), eps);
}

Approximant build_gh_dec(const FuzzyFunction& f, std::shared_ptr<const PsiFamily> psi, double eps) {
  require_psi(psi);
  require_nested_decreasing(f);
  const int n = psi->n();
  if (!check_gh_chain(f, n, ChainDirection::forward)) {
    throw GHDifferenceUndefined("gH-difference chain undefined: f(a_j) - f(a_j+1) does not exist");
  }
  const auto nodes = node_values(f, n);
  std::vector<FuzzyNumber> deltas;
  deltas.reserve(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) deltas.push_back(gh_difference(nodes[j], nodes[j + 1]));
  const double delta = psi->delta();
  return Approximant(Method::gh_dec, n, delta, eps, nodes.back(), std::move(deltas),
                     Coefficients::psi(std::move(psi), static_cast<std::size_t>(n)));
}

Approximant build_gh_inc(const FuzzyFunction& f, int n, double eps, double delta) {
  return build_gh_inc(f, make_psi_family(f, n, eps, delta), eps);
}

Approximant build_gh_inc(const FuzzyFunction& f, std::shared_ptr<const PsiFamily> psi, double eps) {
  require_psi(psi);
  require_nested_increasing(f);
  const int n = psi->n();
  if (!check_gh_chain(f, n, ChainDirection::backward)) {
    throw GHDifferenceUndefined("gH-difference chain undefined: f(a_j+1) - f(a_j) does not exist");
  }
  const auto nodes = node_values(f, n);
  std::vector<FuzzyNumber> deltas;
  deltas.reserve(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) deltas.push_back(gh_difference(nodes[j + 1], nodes[j]));
  const double delta = psi->delta();
  return Approximant(Method::gh_inc, n, delta, eps, nodes.front(), std::move(deltas),
                     Coefficients::one_minus_psi(std::move(psi), static_cast<std::size_t>(n)));
}

Approximant build_g(const FuzzyFunction& f, int n, double eps, double delta) {
  return build_g(f, make_psi_family(f, n, eps, delta), eps);
}

Approximant build_g(const FuzzyFunction& f, std::shared_ptr<const PsiFamily> psi, double eps) {
  require_psi(psi);
  require_nested_decreasing(f);
  const int n = psi->n();
  const auto nodes = node_values(f, n);
  std::vector<FuzzyNumber> deltas;
  deltas.reserve(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) deltas.push_back(g_difference(nodes[j], nodes[j + 1]));
  const double delta = psi->delta();
  return Approximant(Method::g_diff, n, delta, eps, nodes.back(), std::move(deltas),
                     Coefficients::psi(std::move(psi), static_cast<std::size_t>(n)));
}

Approximant build_trapezoid(const FuzzyFunction& f, int n, double delta) {
  require_build_params(n, delta);
  auto phi = std::make_shared<const PhiFamily>(n, delta);
  auto nodes = node_values(f, n);
  return Approximant(Method::trapezoid, n, delta, 0.0, FuzzyNumber::crisp(0.0, f.grid()),
                     std::move(nodes), Coefficients::phi(std::move(phi)));
}

// ---------------------------------------------------------------------------
// Reports

std::string ErrorReport::verdict() const {
  if (status == ReportStatus::skipped) return "skipped";
  if (modulus_kind == ModulusKind::lower_estimate) return "indicative";
  return pass ? "true" : "false";
}

ErrorReport skipped_report(Method method, int n, double delta, double eps, std::string reason) {
  ErrorReport r;
  r.method = method;
  r.n = n;
  r.delta = delta;
  r.eps = eps;
  r.status = ReportStatus::skipped;
  r.skip_reason = std::move(reason);
  r.bound_formula = bound_formula(method);
  return r;
}

double bound_value(Method method, int n, double eps, double modulus) {
  switch (method) {
    case Method::gh_dec:
    case Method::gh_inc:
    case Method::interval_gh:
      return 2.0 * modulus + eps;
    case Method::g_diff:
      return (2.0 * n + 2.0) * modulus + eps;
    case Method::trapezoid:
      return 3.0 * modulus;
  }
  return 0.0;
}

std::string bound_formula(Method method) {
  switch (method) {
    case Method::gh_dec:
    case Method::gh_inc:
    case Method::interval_gh:
      return "2*omega(f,1/n) + eps";
    case Method::g_diff:
      return "(2n+2)*omega(f,1/n) + eps";
    case Method::trapezoid:
      return "3*omega(f,1/n)";
  }
  return "";
}

std::vector<double> sample_points(int n, double delta, std::size_t samples) {
  if (samples < 2) throw InvalidParams("sup_distance needs at least two samples");
  std::vector<double> xs = kernels::uniform_points(samples - 1);
  for (int j = 0; j <= n; ++j) {
    const double aj = static_cast<double>(j) / static_cast<double>(n);
    for (double x : {aj - delta, aj, aj + delta}) {
      if (x >= 0.0 && x <= 1.0) xs.push_back(x);
    }
  }
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  return xs;
}

namespace {

ErrorReport finish_report(Method method, int n, double delta, double eps,
                          std::span<const double> xs, const std::vector<double>& distances,
                          ModulusEstimate modulus) {
  ErrorReport r;
  r.method = method;
  r.n = n;
  r.delta = delta;
  r.eps = eps;
  r.per_sample.reserve(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) {
    r.per_sample.push_back({xs[i], distances[i]});
    r.sup_distance = std::max(r.sup_distance, distances[i]);
  }
  r.modulus_value = modulus.value;
  r.modulus_kind = modulus.kind;
  r.bound_value = bound_value(method, n, eps, modulus.value);
  r.bound_formula = bound_formula(method);
  r.pass = r.sup_distance <= r.bound_value + kReportTol;
  return r;
}

}  // namespace

ErrorReport sup_distance(const FuzzyFunction& f, const Approximant& a, std::size_t samples) {
  const auto xs = sample_points(a.n(), a.delta(), samples);
  const auto distances = kernels::pointwise_distances(
      kernels::FuzzyEval([&f](double x) { return f(x); }),
      kernels::FuzzyEval([&a](double x) { return a(x); }), xs);
  const auto modulus = modulus_upper_bound(f, 1.0 / a.n());
  return finish_report(a.method(), a.n(), a.delta(), a.eps(), xs, distances, modulus);
}

ErrorReport sup_distance(const IntervalFunction& f, const IntervalApproximant& a,
                         std::size_t samples) {
  const auto xs = sample_points(a.n(), a.delta(), samples);
  const auto distances = kernels::pointwise_distances(
      kernels::IntervalEval([&f](double x) { return f(x); }),
      kernels::IntervalEval([&a](double x) { return a(x); }), xs);
  const auto modulus = modulus_upper_bound(f, 1.0 / a.n());
  return finish_report(Method::interval_gh, a.n(), a.delta(), a.eps(), xs, distances, modulus);
}

}  // namespace fuzzjack
