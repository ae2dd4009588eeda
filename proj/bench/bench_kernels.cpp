// Serial vs OpenMP kernels on the two hot loops: the modulus pair scan and
// the per-sample distance pass of sup_distance.

#include <benchmark/benchmark.h>

#include "fuzzjack/approximants.hpp"
#include "fuzzjack/fuzzy_function.hpp"
#include "fuzzjack/kernels.hpp"

using namespace fuzzjack;

namespace {

std::vector<FuzzyNumber> modulus_values(std::size_t intervals) {
  const auto f = catalog("scaled_exp");
  const auto xs = kernels::uniform_points(intervals);
  return kernels::sample_values([&f](double x) { return f(x); }, xs, kernels::Execution::serial);
}

template <kernels::Execution E>
void BM_MaxGap(benchmark::State& state) {
  const auto values = modulus_values(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(kernels::max_gap_distance(std::span<const FuzzyNumber>(values), 51, E));
  }
}

template <kernels::Execution E>
void BM_Pointwise(benchmark::State& state) {
  const auto f = catalog("scaled_exp");
  const int n = static_cast<int>(state.range(0));
  const auto a = build_gh_dec(f, n, 1e-3, default_delta(n));
  const auto xs = sample_points(n, a.delta(), 2049);
  const kernels::FuzzyEval lhs = [&f](double x) { return f(x); };
  const kernels::FuzzyEval rhs = [&a](double x) { return a(x); };
  for (auto _ : state) benchmark::DoNotOptimize(kernels::pointwise_distances(lhs, rhs, xs, E));
}

}  // namespace

BENCHMARK(BM_MaxGap<kernels::Execution::serial>)->Arg(400)->Arg(1600);
BENCHMARK(BM_MaxGap<kernels::Execution::parallel>)->Arg(400)->Arg(1600);
BENCHMARK(BM_Pointwise<kernels::Execution::serial>)->Arg(8)->Arg(32);
BENCHMARK(BM_Pointwise<kernels::Execution::parallel>)->Arg(8)->Arg(32);

BENCHMARK_MAIN();
