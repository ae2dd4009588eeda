#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include "fuzzjack/errors.hpp"
#include "fuzzjack/fuzzy_function.hpp"

namespace fuzzjack {

namespace {

constexpr std::array<std::string_view, 6> kCatalogNames = {
    "scaled_exp", "scaled_linear", "translated", "bump_width", "crisp_ident", "constant"};

constexpr std::array<std::string_view, 3> kIntervalCatalogNames = {"exp_width", "sym_linear",
                                                                   "shrinking"};

FuzzyNumber parameter_number(const CatalogParams& params, const AlphaGrid& grid) {
  const auto& u = params.u;
  switch (u.size()) {
    case 0:
      return FuzzyNumber::triangular(-1.0, 0.0, 1.0, grid);
    case 3:
      return FuzzyNumber::triangular(u[0], u[1], u[2], grid);
    case 4:
      return FuzzyNumber::trapezoidal(u[0], u[1], u[2], u[3], grid);
    default:
      throw InvalidParams("catalog parameter u needs 3 (triangular) or 4 (trapezoidal) values");
  }
}

// Pairs in [0,1] are never more than 1 apart.
double clamp_window(double delta) { return std::clamp(delta, 0.0, 1.0); }

// f(x) = g(x)·u with g > 0, so d_infty(f(x), f(y)) = |g(x) - g(y)|·|u|.
FuzzyFunction scaled(std::string name, const FuzzyNumber& u, double (*g)(double),
                     std::optional<ModulusFn> g_modulus, double g_lipschitz) {
  const double mag = u.magnitude();
  std::optional<ModulusFn> modulus;
  if (g_modulus) {
    modulus = [mag, gm = *g_modulus](double delta) { return mag * gm(delta); };
  }
  return FuzzyFunction(std::move(name), u.grid(), [u, g](double x) { return scale(g(x), u); },
                       FunctionKind::catalog, std::move(modulus), mag * g_lipschitz);
}

}  // namespace

FuzzyFunction catalog(std::string_view name, const CatalogParams& params, const AlphaGrid& grid) {
  if (name == "scaled_exp") {
    // sup of e^-x - e^-y over y - x < δ is reached at x = 0.
    return scaled(
        "scaled_exp", parameter_number(params, grid), [](double x) { return std::exp(-x); },
        ModulusFn([](double d) { return -std::expm1(-clamp_window(d)); }), 1.0);
  }
  if (name == "scaled_linear") {
    return scaled(
        "scaled_linear", parameter_number(params, grid), [](double x) { return 1.0 + x; },
        ModulusFn([](double d) { return clamp_window(d); }), 1.0);
  }
  if (name == "bump_width") {
    // Width factor 1 + x(1-x) rises to 5/4 and falls back; only a Lipschitz
    // constant (max |g'| = 1) is attached, so bounds go through certification.
    return scaled(
        "bump_width", parameter_number(params, grid),
        [](double x) { return 1.0 + x * (1.0 - x); }, std::nullopt, 1.0);
  }
  if (name == "translated") {
    // f(x) = u + x²; widths constant, every gH-difference is crisp.
    const FuzzyNumber u = parameter_number(params, grid);
    auto modulus = [](double d) {
      const double w = clamp_window(d);
      return w * (2.0 - w);
    };
    return FuzzyFunction(
        "translated", grid,
        [u, grid](double x) { return add(u, FuzzyNumber::crisp(x * x, grid)); },
        FunctionKind::catalog, ModulusFn(modulus), 2.0);
  }
  if (name == "crisp_ident") {
    return FuzzyFunction(
        "crisp_ident", grid, [grid](double x) { return FuzzyNumber::crisp(x, grid); },
        FunctionKind::catalog, ModulusFn([](double d) { return clamp_window(d); }), 1.0);
  }
  if (name == "constant") {
    const FuzzyNumber u = parameter_number(params, grid);
    return FuzzyFunction(
        "constant", grid, [u](double) { return u; }, FunctionKind::catalog,
        ModulusFn([](double) { return 0.0; }), 0.0);
  }
  throw UnknownCatalogEntry(std::string(name));
}

std::span<const std::string_view> catalog_names() noexcept { return kCatalogNames; }

IntervalFunction interval_catalog(std::string_view name) {
  IntervalFunction f;
  f.name = std::string(name);
  f.lipschitz = 1.0;
  if (name == "exp_width") {
    f.evaluator = [](double x) { return Interval(0.0, std::exp(-x)); };
    f.analytic_modulus = [](double d) { return -std::expm1(-clamp_window(d)); };
  } else if (name == "sym_linear") {
    f.evaluator = [](double x) { return Interval(-x, x); };
    f.analytic_modulus = [](double d) { return clamp_window(d); };
  } else if (name == "shrinking") {
    f.evaluator = [](double x) { return Interval(x, 2.0 - x); };
    f.analytic_modulus = [](double d) { return clamp_window(d); };
  } else {
    throw UnknownCatalogEntry(std::string(name));
  }
  return f;
}

std::span<const std::string_view> interval_catalog_names() noexcept {
  return kIntervalCatalogNames;
}

}  // namespace fuzzjack
