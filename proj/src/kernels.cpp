#include "fuzzjack/kernels.hpp"

#include <algorithm>
#include <exception>
#include <mutex>
#include <optional>

namespace fuzzjack::kernels {

namespace {

// OpenMP regions cannot propagate exceptions; park the first one and rethrow
// after the loop.
class ExceptionSlot {
 public:
  template <class Fn>
  void run(Fn&& fn) noexcept {
    try {
      fn();
    } catch (...) {
      std::lock_guard lock(mutex_);
      if (!error_) error_ = std::current_exception();
    }
  }
  void rethrow() const {
    if (error_) std::rethrow_exception(error_);
  }

 private:
  std::mutex mutex_;
  std::exception_ptr error_;
};

double distance(const FuzzyNumber& a, const FuzzyNumber& b) { return d_infty(a, b); }
double distance(const Interval& a, const Interval& b) { return hausdorff(a, b); }

template <class T>
double gap_max_serial(std::span<const T> values, std::size_t max_gap) {
  double best = 0.0;
  const std::size_t count = values.size();
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t last = std::min(count - 1, i + max_gap);
    for (std::size_t j = i + 1; j <= last; ++j) best = std::max(best, distance(values[i], values[j]));
  }
  return best;
}

template <class T>
double gap_max_parallel(std::span<const T> values, std::size_t max_gap) {
  double best = 0.0;
  const auto count = static_cast<std::ptrdiff_t>(values.size());
  const auto gap = static_cast<std::ptrdiff_t>(max_gap);
  ExceptionSlot slot;
#pragma omp parallel for schedule(static) reduction(max : best)
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    slot.run([&] {
      const std::ptrdiff_t last = std::min(count - 1, i + gap);
      for (std::ptrdiff_t j = i + 1; j <= last; ++j) {
        best = std::max(best, distance(values[i], values[j]));
      }
    });
  }
  slot.rethrow();
  return best;
}

template <class Eval>
std::vector<double> distances_serial(const Eval& lhs, const Eval& rhs, std::span<const double> xs) {
  std::vector<double> out(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) out[i] = distance(lhs(xs[i]), rhs(xs[i]));
  return out;
}

template <class Eval>
std::vector<double> distances_parallel(const Eval& lhs, const Eval& rhs,
                                       std::span<const double> xs) {
  std::vector<double> out(xs.size());
  const auto count = static_cast<std::ptrdiff_t>(xs.size());
  ExceptionSlot slot;
#pragma omp parallel for schedule(dynamic, 16)
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    slot.run([&] { out[i] = distance(lhs(xs[i]), rhs(xs[i])); });
  }
  slot.rethrow();
  return out;
}

}  // namespace

std::vector<FuzzyNumber> sample_values(const FuzzyEval& f, std::span<const double> xs,
                                       Execution exec) {
  std::vector<std::optional<FuzzyNumber>> slots(xs.size());
  const auto count = static_cast<std::ptrdiff_t>(xs.size());
  if (exec == Execution::serial) {
    for (std::ptrdiff_t i = 0; i < count; ++i) slots[i].emplace(f(xs[i]));
  } else {
    ExceptionSlot slot;
#pragma omp parallel for schedule(dynamic, 16)
    for (std::ptrdiff_t i = 0; i < count; ++i) {
      slot.run([&] { slots[i].emplace(f(xs[i])); });
    }
    slot.rethrow();
  }
  std::vector<FuzzyNumber> out;
  out.reserve(slots.size());
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

std::vector<Interval> sample_values(const IntervalEval& f, std::span<const double> xs,
                                    Execution exec) {
  std::vector<Interval> out(xs.size());
  const auto count = static_cast<std::ptrdiff_t>(xs.size());
  if (exec == Execution::serial) {
    for (std::ptrdiff_t i = 0; i < count; ++i) out[i] = f(xs[i]);
  } else {
    ExceptionSlot slot;
#pragma omp parallel for schedule(dynamic, 16)
    for (std::ptrdiff_t i = 0; i < count; ++i) {
      slot.run([&] { out[i] = f(xs[i]); });
    }
    slot.rethrow();
  }
  return out;
}

double max_gap_distance_serial(std::span<const FuzzyNumber> values, std::size_t max_gap) {
  return gap_max_serial(values, max_gap);
}
double max_gap_distance_parallel(std::span<const FuzzyNumber> values, std::size_t max_gap) {
  return gap_max_parallel(values, max_gap);
}
double max_gap_distance_serial(std::span<const Interval> values, std::size_t max_gap) {
  return gap_max_serial(values, max_gap);
}
double max_gap_distance_parallel(std::span<const Interval> values, std::size_t max_gap) {
  return gap_max_parallel(values, max_gap);
}

std::vector<double> pointwise_distances_serial(const FuzzyEval& lhs, const FuzzyEval& rhs,
                                               std::span<const double> xs) {
  return distances_serial(lhs, rhs, xs);
}
std::vector<double> pointwise_distances_parallel(const FuzzyEval& lhs, const FuzzyEval& rhs,
                                                 std::span<const double> xs) {
  return distances_parallel(lhs, rhs, xs);
}
std::vector<double> pointwise_distances_serial(const IntervalEval& lhs, const IntervalEval& rhs,
                                               std::span<const double> xs) {
  return distances_serial(lhs, rhs, xs);
}
std::vector<double> pointwise_distances_parallel(const IntervalEval& lhs,
                                                 const IntervalEval& rhs,
                                                 std::span<const double> xs) {
  return distances_parallel(lhs, rhs, xs);
}

std::vector<double> uniform_points(std::size_t intervals) {
  if (intervals == 0) return {0.0};
  std::vector<double> xs(intervals + 1);
  for (std::size_t i = 0; i <= intervals; ++i) {
    xs[i] = static_cast<double>(i) / static_cast<double>(intervals);
  }
  xs.back() = 1.0;
  return xs;
}

}  // namespace fuzzjack::kernels
