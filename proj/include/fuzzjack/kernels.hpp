#pragma once

// Data-parallel sampling loops. Each kernel has a plain serial reference and
// an OpenMP version; both return bit-identical results (max-reductions and
// per-index writes are order independent).

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "fuzzjack/fuzzy_number.hpp"
#include "fuzzjack/interval.hpp"

namespace fuzzjack::kernels {

enum class Execution { serial, parallel };

inline constexpr Execution kDefaultExecution = Execution::parallel;

using FuzzyEval = std::function<FuzzyNumber(double)>;
using IntervalEval = std::function<Interval(double)>;

// Evaluate at every x.
std::vector<FuzzyNumber> sample_values(const FuzzyEval& f, std::span<const double> xs,
                                       Execution exec = kDefaultExecution);
std::vector<Interval> sample_values(const IntervalEval& f, std::span<const double> xs,
                                    Execution exec = kDefaultExecution);

// max of the distance between values[i] and values[j] over 1 <= j - i <= max_gap.
double max_gap_distance_serial(std::span<const FuzzyNumber> values, std::size_t max_gap);
double max_gap_distance_parallel(std::span<const FuzzyNumber> values, std::size_t max_gap);
double max_gap_distance_serial(std::span<const Interval> values, std::size_t max_gap);
double max_gap_distance_parallel(std::span<const Interval> values, std::size_t max_gap);

inline double max_gap_distance(std::span<const FuzzyNumber> values, std::size_t max_gap,
                               Execution exec = kDefaultExecution) {
  return exec == Execution::serial ? max_gap_distance_serial(values, max_gap)
                                   : max_gap_distance_parallel(values, max_gap);
}
inline double max_gap_distance(std::span<const Interval> values, std::size_t max_gap,
                               Execution exec = kDefaultExecution) {
  return exec == Execution::serial ? max_gap_distance_serial(values, max_gap)
                                   : max_gap_distance_parallel(values, max_gap);
}

// d(lhs(x), rhs(x)) at each x.
std::vector<double> pointwise_distances_serial(const FuzzyEval& lhs, const FuzzyEval& rhs,
                                               std::span<const double> xs);
std::vector<double> pointwise_distances_parallel(const FuzzyEval& lhs, const FuzzyEval& rhs,
                                                 std::span<const double> xs);
std::vector<double> pointwise_distances_serial(const IntervalEval& lhs, const IntervalEval& rhs,
                                               std::span<const double> xs);
std::vector<double> pointwise_distances_parallel(const IntervalEval& lhs,
                                                 const IntervalEval& rhs,
                                                 std::span<const double> xs);

template <class Eval>
std::vector<double> pointwise_distances(const Eval& lhs, const Eval& rhs,
                                        std::span<const double> xs,
                                        Execution exec = kDefaultExecution) {
  return exec == Execution::serial ? pointwise_distances_serial(lhs, rhs, xs)
                                   : pointwise_distances_parallel(lhs, rhs, xs);
}

// Uniform grid i/intervals, i = 0..intervals.
std::vector<double> uniform_points(std::size_t intervals);

}  // namespace fuzzjack::kernels
