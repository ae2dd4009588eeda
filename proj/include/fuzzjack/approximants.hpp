#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fuzzjack/fuzzy_function.hpp"
#include "fuzzjack/fuzzy_number.hpp"
#include "fuzzjack/interval.hpp"
#include "fuzzjack/smoothstep.hpp"

namespace fuzzjack {

enum class Method { gh_dec, gh_inc, g_diff, trapezoid, interval_gh };

std::string_view to_string(Method method) noexcept;
std::optional<Method> parse_method(std::string_view name) noexcept;

// Tolerance added to the bound before a report is judged.
inline constexpr double kReportTol = 1e-12;
// Probe grid used for the diameter bound M.
inline constexpr std::size_t kDiameterProbes = 65;

// δ = 1/(4n), the middle of the admissible range (0, 1/(2n)).
double default_delta(int n);

// 2·max(1, ½·max pairwise distance over the probe grid); twice any M with
// d(f(x), f(y)) <= 2M.
double diameter_bound(const FuzzyFunction& f);
double diameter_bound(const IntervalFunction& f);

// ψ tolerance ε' = ε / (2(n+1)M).
double step_tolerance(double eps, int n, double diameter);

/// Coefficient functions multiplying an approximant's terms.
class Coefficients {
 public:
  enum class Kind { psi, one_minus_psi, phi };

  // ψ_0..ψ_{count-1} (or 1 - ψ_j).
  static Coefficients psi(std::shared_ptr<const PsiFamily> family, std::size_t count);
  static Coefficients one_minus_psi(std::shared_ptr<const PsiFamily> family, std::size_t count);
  // φ_0..φ_n.
  static Coefficients phi(std::shared_ptr<const PhiFamily> family);

  Kind kind() const noexcept { return kind_; }
  std::size_t size() const noexcept { return count_; }
  std::vector<double> values(double x) const;

  const PsiFamily* psi_family() const noexcept { return psi_.get(); }
  const PhiFamily* phi_family() const noexcept { return phi_.get(); }

 private:
  Coefficients(Kind kind, std::size_t count) : kind_(kind), count_(count) {}

  Kind kind_;
  std::size_t count_;
  std::shared_ptr<const PsiFamily> psi_;
  std::shared_ptr<const PhiFamily> phi_;
};

/// base + Σ_j c_j(x)·deltas[j] with nonnegative coefficients, evaluated level-wise.
class Approximant {
 public:
  Approximant(Method method, int n, double delta, double eps, FuzzyNumber base,
              std::vector<FuzzyNumber> deltas, Coefficients coefficients);

  Method method() const noexcept { return method_; }
  int n() const noexcept { return n_; }
  double delta() const noexcept { return delta_; }
  double eps() const noexcept { return eps_; }
  const FuzzyNumber& base() const noexcept { return base_; }
  std::span<const FuzzyNumber> deltas() const noexcept { return deltas_; }
  const Coefficients& coefficients() const noexcept { return coefficients_; }

  // Throws DomainError outside [0,1].
  FuzzyNumber operator()(double x) const;

 private:
  Method method_;
  int n_;
  double delta_;
  double eps_;
  FuzzyNumber base_;
  std::vector<FuzzyNumber> deltas_;
  Coefficients coefficients_;
};

inline FuzzyNumber eval_approximant(const Approximant& a, double x) { return a(x); }

/// Interval counterpart used on a single alpha level.
class IntervalApproximant {
 public:
  IntervalApproximant(int n, double delta, double eps, Interval base, std::vector<Interval> deltas,
                      Coefficients coefficients);

  int n() const noexcept { return n_; }
  double delta() const noexcept { return delta_; }
  double eps() const noexcept { return eps_; }
  const Interval& base() const noexcept { return base_; }
  std::span<const Interval> deltas() const noexcept { return deltas_; }
  const Coefficients& coefficients() const noexcept { return coefficients_; }

  Interval operator()(double x) const;

 private:
  int n_;
  double delta_;
  double eps_;
  Interval base_;
  std::vector<Interval> deltas_;
  Coefficients coefficients_;
};

// ---------------------------------------------------------------------------
// Builders. `eps` is the target slack in the 2ω + ε bounds; the ψ family is
// built with ε' = step_tolerance(eps, n, diameter_bound(f)).

// A_n + Σ_{j<n} ψ_j(x)(A_j ⊖ A_{j+1}); needs len(f(x)) nonincreasing.
IntervalApproximant build_interval_gh_dec(const IntervalFunction& f, int n, double eps,
                                          double delta);
IntervalApproximant build_interval_gh_dec(const IntervalFunction& f,
                                          std::shared_ptr<const PsiFamily> psi, double eps);

// A_0 + Σ_{j<n} (1 - ψ_j(x))(A_{j+1} ⊖ A_j); needs len(f(x)) nondecreasing.
IntervalApproximant build_interval_gh_inc(const IntervalFunction& f, int n, double eps,
                                          double delta);
IntervalApproximant build_interval_gh_inc(const IntervalFunction& f,
                                          std::shared_ptr<const PsiFamily> psi, double eps);

// ψ family with the tolerance rule applied to f.
std::shared_ptr<const PsiFamily> make_psi_family(const FuzzyFunction& f, int n, double eps,
                                                 double delta);

// u_n + Σ_{j<n} ψ_j(x)(u_j ⊖_gH u_{j+1}); needs f(y) ⊆ f(x) for x <= y and a forward gH chain.
Approximant build_gh_dec(const FuzzyFunction& f, int n, double eps, double delta);
Approximant build_gh_dec(const FuzzyFunction& f, std::shared_ptr<const PsiFamily> psi, double eps);

// u_0 + Σ_{j<n} (1 - ψ_j(x))(u_{j+1} ⊖_gH u_j); needs f(x) ⊆ f(y) for x <= y and a backward chain.
Approximant build_gh_inc(const FuzzyFunction& f, int n, double eps, double delta);
Approximant build_gh_inc(const FuzzyFunction& f, std::shared_ptr<const PsiFamily> psi, double eps);

// u_n + Σ_{j<n} ψ_j(x)(u_j ⊖_g u_{j+1}); needs only f(y) ⊆ f(x) for x <= y.
Approximant build_g(const FuzzyFunction& f, int n, double eps, double delta);
Approximant build_g(const FuzzyFunction& f, std::shared_ptr<const PsiFamily> psi, double eps);

// Σ_k φ_k(x)·f(a_k); no hypothesis beyond continuity.
Approximant build_trapezoid(const FuzzyFunction& f, int n, double delta);

// ---------------------------------------------------------------------------
// Error measurement

struct SamplePoint {
  double x = 0.0;
  double distance = 0.0;
};

enum class ReportStatus { completed, skipped };

struct ErrorReport {
  Method method = Method::trapezoid;
  int n = 0;
  double delta = 0.0;
  double eps = 0.0;
  ReportStatus status = ReportStatus::completed;
  std::string skip_reason;
  double sup_distance = 0.0;
  double modulus_value = 0.0;
  ModulusKind modulus_kind = ModulusKind::lower_estimate;
  double bound_value = 0.0;
  std::string bound_formula;
  bool pass = false;
  std::vector<SamplePoint> per_sample;

  // "true", "false", "indicative" (sampled lower-estimate modulus) or "skipped".
  std::string verdict() const;
};

ErrorReport skipped_report(Method method, int n, double delta, double eps, std::string reason);

// Bound attached to each method, given ω(f, 1/n).
double bound_value(Method method, int n, double eps, double modulus);
std::string bound_formula(Method method);

// `samples` uniform points plus every node a_j and band edge a_j ± δ inside [0,1].
std::vector<double> sample_points(int n, double delta, std::size_t samples);

ErrorReport sup_distance(const FuzzyFunction& f, const Approximant& a, std::size_t samples);
ErrorReport sup_distance(const IntervalFunction& f, const IntervalApproximant& a,
                         std::size_t samples);

}  // namespace fuzzjack
