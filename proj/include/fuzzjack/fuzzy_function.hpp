#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fuzzjack/fuzzy_number.hpp"
#include "fuzzjack/interval.hpp"

namespace fuzzjack {

// Subdivisions per δ window used by the sampled modulus estimators.
inline constexpr std::size_t kModulusSubdivisions = 50;
// Probe count for the black-box hypothesis checks.
inline constexpr std::size_t kDefaultProbes = 257;

enum class FunctionKind { catalog, sampled, custom };

/// How much a modulus value can be trusted as an upper bound.
///   analytic        closed form, exact.
///   certified       sampled sup plus a Lipschitz correction; a valid upper bound.
///   lower_estimate  plain sampled sup; may under-estimate the true modulus.
enum class ModulusKind { analytic, certified, lower_estimate };

std::string_view to_string(ModulusKind kind) noexcept;

struct ModulusEstimate {
  double value = 0.0;
  ModulusKind kind = ModulusKind::lower_estimate;
};

using ModulusFn = std::function<double(double)>;

/// Continuous map [0,1] -> E¹ with values on a fixed alpha grid.
///
/// Optional metadata: an analytic modulus of continuity and a Lipschitz
/// constant in d_infty. Either one lets reports certify bounds.
class FuzzyFunction {
 public:
  using Evaluator = std::function<FuzzyNumber(double)>;

  FuzzyFunction(std::string name, AlphaGrid grid, Evaluator evaluator,
                FunctionKind kind = FunctionKind::custom,
                std::optional<ModulusFn> analytic_modulus = std::nullopt,
                std::optional<double> lipschitz = std::nullopt);

  // Throws DomainError outside [0,1].
  FuzzyNumber operator()(double x) const;

  const std::string& name() const noexcept { return name_; }
  const AlphaGrid& grid() const noexcept { return grid_; }
  FunctionKind kind() const noexcept { return kind_; }
  const std::optional<ModulusFn>& analytic_modulus() const noexcept { return analytic_modulus_; }
  const std::optional<double>& lipschitz() const noexcept { return lipschitz_; }

 private:
  std::string name_;
  AlphaGrid grid_;
  Evaluator evaluator_;
  FunctionKind kind_;
  std::optional<ModulusFn> analytic_modulus_;
  std::optional<double> lipschitz_;
};

inline FuzzyNumber eval(const FuzzyFunction& f, double x) { return f(x); }

/// Samples x_0 = 0 < ... < x_N = 1 with a fuzzy value at each; evaluation
/// interpolates every cut endpoint linearly between neighbouring samples.
struct SampledFuzzyFunction {
  std::vector<double> xs;
  std::vector<FuzzyNumber> values;
};

// Validates the sample layout and wraps it as a FuzzyFunction whose
// Lipschitz constant is the largest segment slope in d_infty.
FuzzyFunction make_sampled(SampledFuzzyFunction data, std::string name = "sampled");

/// Interval-valued function [0,1] -> K_C.
struct IntervalFunction {
  std::string name;
  std::function<Interval(double)> evaluator;
  std::optional<ModulusFn> analytic_modulus;
  // A known upper bound for the modulus that is not exact (e.g. inherited
  // from the parent fuzzy function of an alpha slice).
  std::optional<ModulusFn> modulus_upper;
  std::optional<double> lipschitz;

  Interval operator()(double x) const;
};

// x ↦ [f(x)]_α. Throws InvalidParams when α is not a grid level.
IntervalFunction alpha_slice(const FuzzyFunction& f, double alpha);

// Analytic modulus if f has one, otherwise the sampled sup of d_infty over
// grid pairs at most δ apart on a grid of step about δ/K (flagged lower_estimate).
ModulusEstimate modulus_fuzzy(const FuzzyFunction& f, double delta,
                              std::size_t subdivisions = kModulusSubdivisions);

// Sampled modulus of an interval function, same scheme as modulus_fuzzy.
double modulus_interval(const IntervalFunction& f, double delta,
                        std::size_t subdivisions = kModulusSubdivisions);

// Best available upper bound for ω^F(f, δ): analytic, else Lipschitz-certified,
// else the plain sampled value flagged lower_estimate.
ModulusEstimate modulus_upper_bound(const FuzzyFunction& f, double delta,
                                    std::size_t subdivisions = kModulusSubdivisions);
ModulusEstimate modulus_upper_bound(const IntervalFunction& f, double delta,
                                    std::size_t subdivisions = kModulusSubdivisions);

// f(y) ⊆ f(x) for all probe pairs x <= y.
bool check_nested_decreasing(const FuzzyFunction& f, std::size_t probes = kDefaultProbes);
// f(x) ⊆ f(y) for all probe pairs x <= y.
bool check_nested_increasing(const FuzzyFunction& f, std::size_t probes = kDefaultProbes);

enum class ChainDirection { forward, backward };

// forward: f(a_j) ⊖_gH f(a_{j+1}) exists for all j; backward: f(a_{j+1}) ⊖_gH f(a_j).
bool check_gh_chain(const FuzzyFunction& f, int n, ChainDirection direction);

// len(f(x)) monotone over the probes; used by the interval builders.
bool check_width_nonincreasing(const IntervalFunction& f, std::size_t probes = kDefaultProbes);
bool check_width_nondecreasing(const IntervalFunction& f, std::size_t probes = kDefaultProbes);

// ---------------------------------------------------------------------------
// Catalog

/// Optional fuzzy-number parameter for catalog entries; three values give a
/// triangular number, four a trapezoidal one.
struct CatalogParams {
  std::vector<double> u;
};

// Entries: scaled_exp, scaled_linear, translated, bump_width, crisp_ident, constant.
FuzzyFunction catalog(std::string_view name, const CatalogParams& params = {},
                      const AlphaGrid& grid = AlphaGrid::uniform());

std::span<const std::string_view> catalog_names() noexcept;

// Interval test functions: exp_width [0, e^-x], sym_linear [-x, x], shrinking [x, 2-x].
IntervalFunction interval_catalog(std::string_view name);

std::span<const std::string_view> interval_catalog_names() noexcept;

}  // namespace fuzzjack
