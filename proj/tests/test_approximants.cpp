#include <doctest.h>

#include <cmath>
#include <random>

#include "fuzzjack/approximants.hpp"
#include "fuzzjack/errors.hpp"

using namespace fuzzjack;

namespace {

const AlphaGrid grid = AlphaGrid::uniform(50);

FuzzyFunction scaled_exp() { return catalog("scaled_exp", {}, grid); }
FuzzyFunction scaled_linear() { return catalog("scaled_linear", {}, grid); }
FuzzyFunction constant() { return catalog("constant", {}, grid); }

}  // namespace

TEST_CASE("method names round-trip") {
  for (Method m : {Method::gh_dec, Method::gh_inc, Method::g_diff, Method::trapezoid, Method::interval_gh}) {
    CHECK(parse_method(to_string(m)) == m);
  }
  CHECK_FALSE(parse_method("bogus").has_value());
}

TEST_CASE("parameter helpers") {
  CHECK(default_delta(4) == 1.0 / 16.0);
  CHECK_THROWS_AS(default_delta(0), InvalidParams);
  CHECK(step_tolerance(1e-3, 9, 2.0) == doctest::Approx(1e-3 / 40.0));
  // scaled_exp(-1,0,1): values within distance 1 - e^{-1} of each other, so M = 2
  CHECK(diameter_bound(scaled_exp()) == 2.0);
}

TEST_CASE("bounds and formulas") {
  CHECK(bound_value(Method::gh_dec, 8, 1e-3, 0.1) == doctest::Approx(0.201));
  CHECK(bound_value(Method::g_diff, 8, 1e-3, 0.1) == doctest::Approx(1.801));
  CHECK(bound_value(Method::trapezoid, 8, 1e-3, 0.1) == doctest::Approx(0.3));
  CHECK(bound_formula(Method::trapezoid) == "3*omega(f,1/n)");
}

TEST_CASE("sample points include nodes and band edges") {
  const auto xs = sample_points(4, 1.0 / 16.0, 9);
  CHECK(xs.front() == 0.0);
  CHECK(xs.back() == 1.0);
  CHECK(std::is_sorted(xs.begin(), xs.end()));
  for (double x : {0.0625, 0.1875, 0.3125, 0.9375}) {
    CHECK(std::find(xs.begin(), xs.end(), x) != xs.end());
  }
  CHECK_THROWS_AS(sample_points(4, 0.1, 1), InvalidParams);
}

TEST_CASE("interval gH builders") {
  const auto exp_width = interval_catalog("exp_width");
  for (int n : {2, 8}) {
    const auto a = build_interval_gh_dec(exp_width, n, 1e-3, default_delta(n));
    const auto r = sup_distance(exp_width, a, 1025);
    CHECK(r.modulus_kind == ModulusKind::analytic);
    CHECK(r.modulus_value == doctest::Approx(1 - std::exp(-1.0 / n)));
    CHECK(r.pass);
  }
  const auto shrinking = interval_catalog("shrinking");
  CHECK_NOTHROW(build_interval_gh_dec(shrinking, 8, 1e-3, default_delta(8)));
  CHECK_THROWS_AS(build_interval_gh_inc(exp_width, 8, 1e-3, default_delta(8)), HypothesisViolated);

  const auto sym = interval_catalog("sym_linear");
  const auto b = build_interval_gh_inc(sym, 8, 1e-3, default_delta(8));
  CHECK(sup_distance(sym, b, 1025).pass);

  IntervalFunction flat{"flat", [](double) { return Interval(-1, 2); }, [](double) { return 0.0; }, {}, 0.0};
  const auto c = build_interval_gh_dec(flat, 4, 1e-3, default_delta(4));
  CHECK(sup_distance(flat, c, 257).sup_distance <= 1e-15);
  const auto d = build_interval_gh_inc(flat, 4, 1e-3, default_delta(4));
  CHECK(sup_distance(flat, d, 257).sup_distance <= 1e-15);
}

TEST_CASE("gH decreasing builder") {
  const auto f = scaled_exp();
  const auto a = build_gh_dec(f, 8, 1e-3, default_delta(8));
  CHECK(a.method() == Method::gh_dec);
  CHECK(a.deltas().size() == 8);
  CHECK(a.base() == f(1.0));
  const auto r = sup_distance(f, a, 2049);
  CHECK(r.modulus_kind == ModulusKind::analytic);
  CHECK(r.pass);
  CHECK(r.verdict() == "true");
  CHECK(r.sup_distance <= 2 * (1 - std::exp(-1.0 / 8)) + 1e-3);

  // at x = 1 every ψ_j (j < n) is below ε', so A(1) sits next to the base
  const auto& psi = *a.coefficients().psi_family();
  double slack = 0.0;
  for (std::size_t j = 0; j < a.deltas().size(); ++j) slack += psi(j, 1.0) * a.deltas()[j].magnitude();
  CHECK(d_infty(a(1.0), a.base()) <= slack + 1e-15);
  CHECK(slack <= 8 * psi.eps() * 2.0);

  CHECK_THROWS_AS(build_gh_dec(catalog("bump_width", {}, grid), 4, 1e-3, 0.05), HypothesisViolated);
  CHECK_THROWS_AS(build_gh_dec(f, 4, 1e-3, 0.2), InvalidParams);
  CHECK_THROWS_AS(build_gh_dec(f, 4, 0.0, 0.05), InvalidParams);
  CHECK_THROWS_AS(a(1.1), DomainError);
}

TEST_CASE("gH chain failure surfaces as GHDifferenceUndefined") {
  // v sits inside u at every level but u⁻ - v⁻ = -5 - 3λ decreases while
  // len(u) > len(v), so u ⊖_gH v fails
  const auto u = FuzzyNumber::trapezoidal(0, 1, 29, 30, grid);
  const auto v = FuzzyNumber::triangular(5, 9, 11, grid);
  REQUIRE_FALSE(gh_exists(u, v));
  const auto f = make_sampled({{0.0, 1.0}, {u, v}});
  CHECK(check_nested_decreasing(f));
  CHECK_FALSE(check_gh_chain(f, 1, ChainDirection::forward));
  CHECK_THROWS_AS(build_gh_dec(f, 1, 1e-3, 0.25), GHDifferenceUndefined);
  // the g difference does not need the chain
  const auto g = build_g(f, 1, 1e-3, 0.25);
  CHECK(sup_distance(f, g, 513).pass);
}

TEST_CASE("gH increasing builder") {
  const auto f = scaled_linear();
  const auto a = build_gh_inc(f, 8, 1e-3, default_delta(8));
  CHECK(a.base() == f(0.0));
  const auto r = sup_distance(f, a, 2049);
  CHECK(r.pass);
  CHECK(r.sup_distance <= 2 * (1.0 / 8) + 1e-3);
  CHECK_THROWS_AS(build_gh_inc(scaled_exp(), 8, 1e-3, default_delta(8)), HypothesisViolated);
}

TEST_CASE("g builder matches the gH builder when the chain exists") {
  const auto f = scaled_exp();
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> u(0, 1);
  for (int n : {2, 8, 16}) {
    const auto psi = make_psi_family(f, n, 1e-3, default_delta(n));
    const auto g = build_g(f, psi, 1e-3);
    const auto h = build_gh_dec(f, psi, 1e-3);
    for (int t = 0; t < 100; ++t) {
      const double x = u(rng);
      CHECK(d_infty(g(x), h(x)) <= 1e-10);
    }
    const auto r = sup_distance(f, g, 1025);
    CHECK(r.pass);
    CHECK(r.bound_value == doctest::Approx((2.0 * n + 2) * (1 - std::exp(-1.0 / n)) + 1e-3));
  }
  CHECK_THROWS_AS(build_g(scaled_linear(), 4, 1e-3, 0.05), HypothesisViolated);
}

TEST_CASE("constant function is reproduced by every method") {
  const auto f = constant();
  const double delta = default_delta(4);
  const auto u = f(0.0);
  for (const auto& a : {build_gh_dec(f, 4, 1e-3, delta), build_gh_inc(f, 4, 1e-3, delta),
                        build_g(f, 4, 1e-3, delta), build_trapezoid(f, 4, delta)}) {
    for (double x : {0.0, 0.13, 0.5, 1.0}) CHECK(d_infty(a(x), u) <= 1e-15);
    CHECK(sup_distance(f, a, 257).sup_distance <= 1e-3);
  }
}

TEST_CASE("trapezoid operator") {
  const int n = 4;
  const double delta = default_delta(n);
  const auto f = catalog("bump_width", {}, grid);
  const auto t = build_trapezoid(f, n, delta);
  CHECK(t.eps() == 0.0);
  for (int k = 1; k <= n; ++k) {
    const double x = (k - 0.5) / n;  // middle of W_k
    CHECK(d_infty(t(x), f(static_cast<double>(k) / n)) <= 1e-15);
  }
  for (int j = 1; j < n; ++j) {
    const double aj = static_cast<double>(j) / n;
    const auto expect = 0.5 * f(aj) + 0.5 * f(static_cast<double>(j + 1) / n);
    CHECK(d_infty(t(aj), expect) <= 1e-12);
  }
  for (int m : {4, 8, 16, 32}) {
    const auto r = sup_distance(f, build_trapezoid(f, m, default_delta(m)), 2049);
    CHECK(r.modulus_kind == ModulusKind::certified);
    CHECK(r.pass);
  }
}

TEST_CASE("report verdicts") {
  ErrorReport r;
  r.modulus_kind = ModulusKind::analytic;
  r.pass = true;
  CHECK(r.verdict() == "true");
  r.pass = false;
  CHECK(r.verdict() == "false");
  r.modulus_kind = ModulusKind::lower_estimate;
  CHECK(r.verdict() == "indicative");
  CHECK(skipped_report(Method::gh_inc, 4, 0.0625, 1e-3, "why").verdict() == "skipped");
}
