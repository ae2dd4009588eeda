#include "fuzzjack/fuzzy_function.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "fuzzjack/errors.hpp"
#include "fuzzjack/kernels.hpp"

namespace fuzzjack {

namespace {

void require_unit_domain(double x) {
  if (!(x >= 0.0 && x <= 1.0)) {
    std::ostringstream os;
    os.precision(17);
    os << "x = " << x << " is outside [0,1]";
    throw DomainError(os.str());
  }
}

// Sampling plan shared by the modulus estimators: a uniform grid of
// `intervals` steps fine enough to put `subdivisions` steps in one δ window.
struct ModulusGrid {
  std::size_t intervals = 1;
  std::size_t max_gap = 1;        // largest index gap k with k/intervals <= δ
  std::size_t certified_gap = 1;  // covers every true pair with |x - y| < δ

  ModulusGrid(double delta, std::size_t subdivisions) {
    if (!(delta > 0.0)) throw InvalidParams("modulus needs delta > 0");
    if (subdivisions == 0) throw InvalidParams("modulus needs at least one subdivision");
    const double window = std::min(delta, 1.0);
    intervals = static_cast<std::size_t>(std::ceil(static_cast<double>(subdivisions) / window - 1e-9));
    intervals = std::max<std::size_t>(intervals, 1);
    const double span = delta * static_cast<double>(intervals);
    max_gap = std::min(intervals, static_cast<std::size_t>(std::floor(span + 1e-9)));
    // Rounding x and y to their nearest nodes changes the gap by less than one step.
    certified_gap = std::min(intervals, max_gap + 1);
  }
  double step() const { return 1.0 / static_cast<double>(intervals); }
};

double sampled_modulus(const FuzzyFunction& f, std::size_t intervals, std::size_t gap) {
  const auto xs = kernels::uniform_points(intervals);
  const auto values = kernels::sample_values([&f](double x) { return f(x); }, xs);
  return kernels::max_gap_distance(std::span<const FuzzyNumber>(values), gap);
}

double sampled_modulus(const IntervalFunction& f, std::size_t intervals, std::size_t gap) {
  const auto xs = kernels::uniform_points(intervals);
  const auto values = kernels::sample_values(f.evaluator, xs);
  return kernels::max_gap_distance(std::span<const Interval>(values), gap);
}

std::vector<FuzzyNumber> probe_values(const FuzzyFunction& f, std::size_t probes) {
  if (probes < 2) throw InvalidParams("hypothesis checks need at least two probes");
  const auto xs = kernels::uniform_points(probes - 1);
  return kernels::sample_values([&f](double x) { return f(x); }, xs);
}

}  // namespace

std::string_view to_string(ModulusKind kind) noexcept {
  switch (kind) {
    case ModulusKind::analytic:
      return "analytic";
    case ModulusKind::certified:
      return "certified";
    case ModulusKind::lower_estimate:
      return "lower_estimate";
  }
  return "lower_estimate";
}

FuzzyFunction::FuzzyFunction(std::string name, AlphaGrid grid, Evaluator evaluator,
                             FunctionKind kind, std::optional<ModulusFn> analytic_modulus,
                             std::optional<double> lipschitz)
    : name_(std::move(name)),
      grid_(std::move(grid)),
      evaluator_(std::move(evaluator)),
      kind_(kind),
      analytic_modulus_(std::move(analytic_modulus)),
      lipschitz_(lipschitz) {
  if (!evaluator_) throw InvalidParams("fuzzy function needs an evaluator");
  if (lipschitz_ && !(*lipschitz_ >= 0.0)) throw InvalidParams("Lipschitz constant must be >= 0");
}

FuzzyNumber FuzzyFunction::operator()(double x) const {
  require_unit_domain(x);
  FuzzyNumber value = evaluator_(x);
  if (!(value.grid() == grid_)) throw GridMismatch();
  return value;
}

Interval IntervalFunction::operator()(double x) const {
  require_unit_domain(x);
  return evaluator(x);
}

FuzzyFunction make_sampled(SampledFuzzyFunction data, std::string name) {
  const auto& xs = data.xs;
  if (xs.size() < 2) throw InvariantError("sampled function needs at least two samples");
  if (xs.size() != data.values.size()) {
    throw InvariantError("sampled function has mismatched sample and value counts");
  }
  if (xs.front() != 0.0) throw InvariantError("sampled function must start at x = 0");
  if (xs.back() != 1.0) throw InvariantError("sampled function must end at x = 1");
  for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
    if (!(xs[i] < xs[i + 1])) {
      throw InvariantError("sample points must be strictly increasing (sample " +
                           std::to_string(i + 1) + ")");
    }
  }
  const AlphaGrid grid = data.values.front().grid();
  double lipschitz = 0.0;
  for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
    if (!(data.values[i + 1].grid() == grid)) throw GridMismatch();
    lipschitz = std::max(lipschitz, d_infty(data.values[i], data.values[i + 1]) / (xs[i + 1] - xs[i]));
  }

  auto shared = std::make_shared<const SampledFuzzyFunction>(std::move(data));
  auto evaluator = [shared, grid](double x) {
    const auto& pts = shared->xs;
    const auto& vals = shared->values;
    auto it = std::upper_bound(pts.begin(), pts.end(), x);
    if (it == pts.end()) return vals.back();
    const auto hi = static_cast<std::size_t>(it - pts.begin());
    const std::size_t lo = hi - 1;
    const double t = (x - pts[lo]) / (pts[hi] - pts[lo]);
    if (t == 0.0) return vals[lo];
    std::vector<Interval> cuts(grid.size());
    for (std::size_t k = 0; k < cuts.size(); ++k) {
      const Interval& a = vals[lo].cut(k);
      const Interval& b = vals[hi].cut(k);
      const double l = (1.0 - t) * a.lo() + t * b.lo();
      const double h = (1.0 - t) * a.hi() + t * b.hi();
      cuts[k] = Interval(l, std::max(l, h));
    }
    return FuzzyNumber(grid, std::move(cuts));
  };
  return FuzzyFunction(std::move(name), grid, std::move(evaluator), FunctionKind::sampled,
                       std::nullopt, lipschitz);
}

IntervalFunction alpha_slice(const FuzzyFunction& f, double alpha) {
  const auto index = f.grid().index_of(alpha);
  if (!index) throw InvalidParams("alpha is not a level of the function's grid");
  IntervalFunction slice;
  std::ostringstream name;
  name << f.name() << "@alpha=" << alpha;
  slice.name = name.str();
  slice.evaluator = [f, k = *index](double x) { return f(x).cut(k); };
  // Each level moves no faster than the whole fuzzy value does.
  if (f.analytic_modulus()) slice.modulus_upper = f.analytic_modulus();
  slice.lipschitz = f.lipschitz();
  return slice;
}

ModulusEstimate modulus_fuzzy(const FuzzyFunction& f, double delta, std::size_t subdivisions) {
  if (!(delta > 0.0)) throw InvalidParams("modulus needs delta > 0");
  if (f.analytic_modulus()) return {(*f.analytic_modulus())(delta), ModulusKind::analytic};
  const ModulusGrid plan(delta, subdivisions);
  return {sampled_modulus(f, plan.intervals, plan.max_gap), ModulusKind::lower_estimate};
}

double modulus_interval(const IntervalFunction& f, double delta, std::size_t subdivisions) {
  const ModulusGrid plan(delta, subdivisions);
  return sampled_modulus(f, plan.intervals, plan.max_gap);
}

ModulusEstimate modulus_upper_bound(const FuzzyFunction& f, double delta,
                                    std::size_t subdivisions) {
  if (!(delta > 0.0)) throw InvalidParams("modulus needs delta > 0");
  if (f.analytic_modulus()) return {(*f.analytic_modulus())(delta), ModulusKind::analytic};
  const ModulusGrid plan(delta, subdivisions);
  if (f.lipschitz()) {
    const double sampled = sampled_modulus(f, plan.intervals, plan.certified_gap);
    return {sampled + *f.lipschitz() * plan.step(), ModulusKind::certified};
  }
  return {sampled_modulus(f, plan.intervals, plan.max_gap), ModulusKind::lower_estimate};
}

ModulusEstimate modulus_upper_bound(const IntervalFunction& f, double delta,
                                    std::size_t subdivisions) {
  if (!(delta > 0.0)) throw InvalidParams("modulus needs delta > 0");
  if (f.analytic_modulus) return {(*f.analytic_modulus)(delta), ModulusKind::analytic};
  if (f.modulus_upper) return {(*f.modulus_upper)(delta), ModulusKind::certified};
  const ModulusGrid plan(delta, subdivisions);
  if (f.lipschitz) {
    const double sampled = sampled_modulus(f, plan.intervals, plan.certified_gap);
    return {sampled + *f.lipschitz * plan.step(), ModulusKind::certified};
  }
  return {sampled_modulus(f, plan.intervals, plan.max_gap), ModulusKind::lower_estimate};
}

bool check_nested_decreasing(const FuzzyFunction& f, std::size_t probes) {
  const auto values = probe_values(f, probes);
  for (std::size_t i = 0; i < values.size(); ++i) {
    for (std::size_t j = i + 1; j < values.size(); ++j) {
      if (!includes(values[i], values[j])) return false;
    }
  }
  return true;
}

bool check_nested_increasing(const FuzzyFunction& f, std::size_t probes) {
  const auto values = probe_values(f, probes);
  for (std::size_t i = 0; i < values.size(); ++i) {
    for (std::size_t j = i + 1; j < values.size(); ++j) {
      if (!includes(values[j], values[i])) return false;
    }
  }
  return true;
}

bool check_gh_chain(const FuzzyFunction& f, int n, ChainDirection direction) {
  if (n < 1) throw InvalidParams("gH chain check needs n >= 1");
  const auto nodes = kernels::uniform_points(static_cast<std::size_t>(n));
  const auto values = kernels::sample_values([&f](double x) { return f(x); }, nodes);
  for (std::size_t j = 0; j + 1 < values.size(); ++j) {
    const bool ok = direction == ChainDirection::forward ? gh_exists(values[j], values[j + 1])
                                                         : gh_exists(values[j + 1], values[j]);
    if (!ok) return false;
  }
  return true;
}

bool check_width_nonincreasing(const IntervalFunction& f, std::size_t probes) {
  if (probes < 2) throw InvalidParams("hypothesis checks need at least two probes");
  const auto xs = kernels::uniform_points(probes - 1);
  const auto values = kernels::sample_values(f.evaluator, xs);
  for (std::size_t i = 0; i + 1 < values.size(); ++i) {
    if (len(values[i + 1]) > len(values[i]) + kMonotoneTol) return false;
  }
  return true;
}

bool check_width_nondecreasing(const IntervalFunction& f, std::size_t probes) {
  if (probes < 2) throw InvalidParams("hypothesis checks need at least two probes");
  const auto xs = kernels::uniform_points(probes - 1);
  const auto values = kernels::sample_values(f.evaluator, xs);
  for (std::size_t i = 0; i + 1 < values.size(); ++i) {
    if (len(values[i + 1]) < len(values[i]) - kMonotoneTol) return false;
  }
  return true;
}

}  // namespace fuzzjack
