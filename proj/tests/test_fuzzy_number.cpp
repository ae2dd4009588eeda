#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "fuzzjack/errors.hpp"
#include "fuzzjack/fuzzy_number.hpp"

using namespace fuzzjack;

namespace {

const AlphaGrid grid = AlphaGrid::uniform(100);

FuzzyNumber tri(double a, double b, double c) { return FuzzyNumber::triangular(a, b, c, grid); }

bool same(const FuzzyNumber& u, const FuzzyNumber& v, double tol = 1e-12) {
  return d_infty(u, v) <= tol;
}

FuzzyNumber random_tri(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> d(-5, 5);
  double v[3] = {d(rng), d(rng), d(rng)};
  std::sort(v, v + 3);
  return tri(v[0], v[1], v[2]);
}

}  // namespace

TEST_CASE("alpha grid validation") {
  CHECK_THROWS_AS(AlphaGrid({0.5, 1.0}), InvariantError);
  CHECK_THROWS_AS(AlphaGrid({0.0, 0.5}), InvariantError);
  CHECK_THROWS_AS(AlphaGrid({0.0, 0.5, 0.5, 1.0}), InvariantError);
  const AlphaGrid g({0.0, 0.25, 1.0});
  CHECK(g.size() == 3);
  CHECK(g.index_of(0.25) == 1u);
  CHECK_FALSE(g.index_of(0.3).has_value());
  CHECK(AlphaGrid::uniform(100).size() == 101);
  CHECK(AlphaGrid::uniform(4) == AlphaGrid({0.0, 0.25, 0.5, 0.75, 1.0}));
}

TEST_CASE("triangular cuts") {
  const auto u = tri(12, 15, 19);
  CHECK(u.cut(0) == Interval(12, 19));
  CHECK(u.cut(100) == Interval(15, 15));
  const auto v = tri(5, 9, 11);
  CHECK(v.cut(50).lo() == doctest::Approx(7.0));
  CHECK(v.cut(50).hi() == doctest::Approx(10.0));
  CHECK_THROWS_AS(tri(1, 0, 2), InvalidParams);
}

TEST_CASE("trapezoidal cuts and crisp embedding") {
  const auto u = FuzzyNumber::trapezoidal(0, 1, 2, 3, grid);
  CHECK(u.support() == Interval(0, 3));
  CHECK(u.core() == Interval(1, 2));
  const auto r = FuzzyNumber::trapezoidal(4, 4, 4, 4, grid);
  CHECK(r.is_crisp());
  CHECK(r == FuzzyNumber::crisp(4, grid));
  for (const auto& c : FuzzyNumber::crisp(0, grid).cuts()) CHECK(c == Interval(0, 0));
  CHECK(d_infty(FuzzyNumber::crisp(3, grid), FuzzyNumber::crisp(5, grid)) == 2.0);
}

TEST_CASE("constructor rejects non-nested cuts and wrong sizes") {
  const AlphaGrid g({0.0, 0.5, 1.0});
  CHECK_THROWS_AS(FuzzyNumber(g, {Interval(0, 1), Interval(-1, 2), Interval(0, 0)}), InvariantError);
  CHECK_THROWS_AS(FuzzyNumber(g, {Interval(0, 1), Interval(0, 1)}), InvariantError);
  CHECK(first_nesting_violation(std::vector<Interval>{Interval(0, 3), Interval(1, 2), Interval(0, 4)}, 0.0) == 1u);
}

TEST_CASE("addition and scaling") {
  CHECK(same(tri(0, 1, 2) + FuzzyNumber::crisp(5, grid), tri(5, 6, 7)));
  const auto u = tri(-1, 0.5, 3);
  CHECK(same(u + FuzzyNumber::crisp(0, grid), u, 0.0));
  CHECK(same(tri(0, 1, 2) + tri(0, 1, 2), tri(0, 2, 4)));
  CHECK(same(2.0 * tri(0, 1, 2), tri(0, 2, 4)));
  CHECK(same(1.0 * u, u, 0.0));
  CHECK(same(-1.0 * tri(0, 1, 2), tri(-2, -1, 0)));
  CHECK_THROWS_AS(add(u, FuzzyNumber::crisp(0, AlphaGrid::uniform(10))), GridMismatch);
}

TEST_CASE("supremum metric") {
  const auto u = tri(-1, 0.5, 3);
  CHECK(d_infty(u, u) == 0.0);
  CHECK(d_infty(tri(12, 15, 19), tri(5, 9, 11)) == doctest::Approx(8.0));
  CHECK(u.magnitude() == 3.0);
  CHECK_THROWS_AS(d_infty(u, FuzzyNumber::crisp(0, AlphaGrid::uniform(10))), GridMismatch);
}

TEST_CASE("metric axioms on random triples") {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 1000; ++t) {
    const auto u = random_tri(rng), v = random_tri(rng), w = random_tri(rng);
    const double uv = d_infty(u, v);
    CHECK(uv >= 0.0);
    CHECK(uv == d_infty(v, u));
    CHECK(uv <= d_infty(u, w) + d_infty(w, v) + 1e-12);
    CHECK(d_infty(u + w, v + w) == doctest::Approx(uv).epsilon(1e-9));
  }
}

TEST_CASE("inclusion") {
  const auto u = tri(0, 2, 4);
  CHECK(includes(u, u));
  CHECK(includes(tri(0, 2, 4), tri(1, 2, 3)));
  CHECK_FALSE(includes(tri(1, 2, 3), tri(0, 2, 4)));
}

TEST_CASE("gH existence") {
  const auto u = tri(-2, 1, 5);
  CHECK(gh_exists(u, u));
  CHECK_FALSE(gh_exists(tri(12, 15, 19), tri(5, 9, 11)));
  CHECK(gh_exists(tri(0, 2, 4), tri(0, 1, 2)));
  const auto c = FuzzyNumber::crisp(7, grid);
  CHECK(gh_exists(c, c));
}

TEST_CASE("gH difference") {
  CHECK(same(gh_difference(tri(0, 2, 4), tri(0, 1, 2)), tri(0, 1, 2)));
  const auto u = tri(-2, 1, 5);
  CHECK(same(gh_difference(u, u), FuzzyNumber::crisp(0, grid), 0.0));
  CHECK_THROWS_AS(gh_difference(tri(12, 15, 19), tri(5, 9, 11)), GHDifferenceUndefined);
  // difference against a crisp value is a shift
  CHECK(same(gh_difference(u, FuzzyNumber::crisp(1, grid)), tri(-3, 0, 4)));
}

TEST_CASE("gH difference satisfies one of the defining equations") {
  std::mt19937_64 rng(5);
  int existing = 0;
  for (int t = 0; t < 500; ++t) {
    const auto u = random_tri(rng), v = random_tri(rng);
    CHECK(gh_exists(2.0 * v, v));
    if (!gh_exists(u, v)) continue;
    ++existing;
    const auto w = gh_difference(u, v);
    const bool first = same(v + w, u, 1e-10);
    const bool second = same(u + (-1.0) * w, v, 1e-10);
    CHECK((first || second));
  }
  CHECK(existing > 20);
}

TEST_CASE("g difference on the counterexample pair against a brute-force oracle") {
  const auto g = g_difference(tri(12, 15, 19), tri(5, 9, 11));
  CHECK(g.cut(0).lo() == doctest::Approx(6.0));
  CHECK(g.cut(0).hi() == doctest::Approx(8.0));
  CHECK(g.core().lo() == doctest::Approx(6.0));
  CHECK(g.core().hi() == doctest::Approx(6.0));
  for (std::size_t k = 0; k < grid.size(); ++k) {
    const double lambda = grid.level(k);
    // hull over beta >= lambda of [min(7-β, 8-2β), max(7-β, 8-2β)] on a dense β grid
    double lo = INFINITY, hi = -INFINITY;
    for (int i = 0; i <= 100000; ++i) {
      const double beta = lambda + (1.0 - lambda) * i / 100000.0;
      const double a = 7.0 - beta, b = 8.0 - 2.0 * beta;
      lo = std::min({lo, a, b});
      hi = std::max({hi, a, b});
    }
    CHECK(std::abs(g.cut(k).lo() - lo) <= 1e-10);
    CHECK(std::abs(g.cut(k).hi() - hi) <= 1e-10);
    CHECK(std::abs(g.cut(k).hi() - (8.0 - 2.0 * lambda)) <= 1e-10);
  }
}

TEST_CASE("g difference extends gH difference") {
  std::mt19937_64 rng(9);
  const auto u = tri(-2, 1, 5);
  CHECK(same(g_difference(u, u), FuzzyNumber::crisp(0, grid), 0.0));
  for (int t = 0; t < 500; ++t) {
    const auto a = random_tri(rng), b = random_tri(rng);
    if (gh_exists(a, b)) CHECK(same(g_difference(a, b), gh_difference(a, b), 1e-10));
  }
}
