#include "fuzzjack/selftest.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>
#include <string>

#include "fuzzjack/approximants.hpp"
#include "fuzzjack/fuzzy_function.hpp"
#include "fuzzjack/fuzzy_number.hpp"
#include "fuzzjack/smoothstep.hpp"

namespace fuzzjack {

namespace {

using Rng = std::mt19937_64;

double uniform(Rng& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

FuzzyNumber random_triangular(Rng& rng, const AlphaGrid& grid) {
  double v[3] = {uniform(rng, -5, 5), uniform(rng, -5, 5), uniform(rng, -5, 5)};
  std::sort(v, v + 3);
  return FuzzyNumber::triangular(v[0], v[1], v[2], grid);
}

bool metric_axioms(Rng& rng) {
  const auto grid = AlphaGrid::uniform(20);
  for (int t = 0; t < 1000; ++t) {
    const auto u = random_triangular(rng, grid);
    const auto v = random_triangular(rng, grid);
    const auto w = random_triangular(rng, grid);
    const double uv = d_infty(u, v);
    if (d_infty(u, u) != 0.0 || uv < 0.0 || uv != d_infty(v, u)) return false;
    if (uv > d_infty(u, w) + d_infty(w, v) + 1e-12) return false;
    // translation invariance
    if (std::abs(d_infty(u + w, v + w) - uv) > 1e-9) return false;
  }
  return true;
}

bool interval_cancellation(Rng& rng) {
  for (int t = 0; t < 1000; ++t) {
    const double a = uniform(rng, -10, 10), b = uniform(rng, -10, 10);
    const double c = uniform(rng, -10, 10), d = uniform(rng, -10, 10);
    const Interval A(std::min(a, b), std::max(a, b));
    const Interval B(std::min(c, d), std::max(c, d));
    if (hausdorff(gh_diff_interval(A + B, B), A) > 1e-12) return false;
  }
  return true;
}

bool gh_g_agreement(Rng& rng) {
  const auto grid = AlphaGrid::uniform(20);
  for (int t = 0; t < 300; ++t) {
    const auto v = random_triangular(rng, grid);
    const auto u = random_triangular(rng, grid);
    if (!gh_exists(2.0 * v, v)) return false;
    if (gh_exists(u, v) && d_infty(gh_difference(u, v), g_difference(u, v)) > 1e-10) return false;
  }
  return true;
}

bool jewett_conditions(Rng& rng) {
  for (int t = 0; t < 50; ++t) {
    double a = uniform(rng, 0, 1), b = uniform(rng, 0, 1);
    if (a > b) std::swap(a, b);
    if (b - a < 1e-3) continue;
    const double eps = uniform(rng, 0.001, 0.4);
    const auto p = jewett_poly(a, b, eps);
    if (!(p(a) > 1.0 - eps && p(b) < eps)) return false;
  }
  return true;
}

bool partition_of_unity(Rng& rng) {
  for (int t = 0; t < 20; ++t) {
    const int n = 1 + static_cast<int>(rng() % 40);
    const PhiFamily phi(n, uniform(rng, 0.01, 0.99) / (2.0 * n));
    for (int i = 0; i <= 512; ++i) {
      const auto vals = phi.values(i / 512.0);
      double sum = 0.0;
      int nonzero = 0;
      for (double v : vals) {
        if (v < 0.0) return false;
        sum += v;
        nonzero += v != 0.0;
      }
      if (std::abs(sum - 1.0) > 1e-12 || nonzero > 2) return false;
    }
  }
  return true;
}

bool modulus_properties(Rng& rng) {
  for (auto name : catalog_names()) {
    const auto f = catalog(name, {}, AlphaGrid::uniform(20));
    if (!f.analytic_modulus()) continue;
    const auto& w = *f.analytic_modulus();
    for (int t = 0; t < 200; ++t) {
      const double d1 = uniform(rng, 0, 0.5), d2 = uniform(rng, 0, 0.5);
      const int k = 1 + static_cast<int>(rng() % 5);
      const double lambda = uniform(rng, 0, 6);
      if (w(d1 + d2) > w(d1) + w(d2) + 1e-12) return false;
      if (w(k * d1) > k * w(d1) + 1e-12) return false;
      if (w(lambda * d1) > (lambda + 1.0) * w(d1) + 1e-12) return false;
    }
  }
  return true;
}

}  // namespace

int run_selftest(std::uint64_t seed, std::ostream& out) {
  const std::pair<const char*, std::function<bool(Rng&)>> suites[] = {
      {"metric axioms", metric_axioms},
      {"interval gH cancellation", interval_cancellation},
      {"gH and g agreement", gh_g_agreement},
      {"Jewett conditions", jewett_conditions},
      {"partition of unity", partition_of_unity},
      {"modulus properties", modulus_properties},
  };
  int failed = 0;
  std::uint64_t k = 0;
  for (const auto& [name, suite] : suites) {
    Rng rng(seed + 0x9e3779b97f4a7c15ULL * ++k);
    bool ok = false;
    std::string why;
    try {
      ok = suite(rng);
    } catch (const std::exception& e) {
      why = std::string(" (") + e.what() + ")";
    }
    out << (ok ? "PASS " : "FAIL ") << name << why << "\n";
    failed += !ok;
  }
  return failed;
}

}  // namespace fuzzjack
