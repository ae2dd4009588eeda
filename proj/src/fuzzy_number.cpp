#include "fuzzjack/fuzzy_number.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>
#include <sstream>
#include <string>

#include "fuzzjack/errors.hpp"

namespace fuzzjack {

namespace {

void require_same_grid(const FuzzyNumber& u, const FuzzyNumber& v) {
  if (!(u.grid() == v.grid())) throw GridMismatch();
}

// Nondecreasing / nonincreasing up to tol between consecutive levels.
template <class Fn>
bool nondecreasing(std::size_t count, Fn&& value, double tol) {
  for (std::size_t i = 0; i + 1 < count; ++i) {
    if (value(i + 1) < value(i) - tol) return false;
  }
  return true;
}

template <class Fn>
bool nonincreasing(std::size_t count, Fn&& value, double tol) {
  for (std::size_t i = 0; i + 1 < count; ++i) {
    if (value(i + 1) > value(i) + tol) return false;
  }
  return true;
}

}  // namespace

// ---------------------------------------------------------------------------
// AlphaGrid

AlphaGrid::AlphaGrid(std::vector<double> levels) {
  if (levels.size() < 2) throw InvariantError("alpha grid needs at least two levels");
  if (levels.front() != 0.0) throw InvariantError("alpha grid must start at level 0");
  if (levels.back() != 1.0) throw InvariantError("alpha grid must end at level 1");
  for (std::size_t i = 0; i + 1 < levels.size(); ++i) {
    if (!(levels[i] < levels[i + 1])) {
      throw InvariantError("alpha grid levels must be strictly increasing (level " +
                           std::to_string(i + 1) + ")");
    }
  }
  levels_ = std::make_shared<const std::vector<double>>(std::move(levels));
}

AlphaGrid AlphaGrid::uniform(std::size_t m) {
  if (m < 1) throw InvalidParams("alpha grid needs m >= 1");
  std::vector<double> levels(m + 1);
  for (std::size_t i = 0; i <= m; ++i) levels[i] = static_cast<double>(i) / static_cast<double>(m);
  levels.back() = 1.0;
  return AlphaGrid(std::move(levels));
}

std::optional<std::size_t> AlphaGrid::index_of(double alpha) const {
  const auto& lv = *levels_;
  auto it = std::lower_bound(lv.begin(), lv.end(), alpha - 1e-12);
  if (it != lv.end() && std::abs(*it - alpha) <= 1e-12) {
    return static_cast<std::size_t>(it - lv.begin());
  }
  return std::nullopt;
}

bool operator==(const AlphaGrid& a, const AlphaGrid& b) noexcept {
  return a.levels_ == b.levels_ || *a.levels_ == *b.levels_;
}

// ---------------------------------------------------------------------------
// FuzzyNumber

std::optional<std::size_t> first_nesting_violation(std::span<const Interval> cuts, double tol) {
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    if (!contains(cuts[i], cuts[i + 1], tol)) return i;
  }
  return std::nullopt;
}

FuzzyNumber::FuzzyNumber(AlphaGrid grid, std::vector<Interval> cuts)
    : grid_(std::move(grid)), cuts_(std::move(cuts)) {
  if (cuts_.size() != grid_.size()) {
    throw InvariantError("fuzzy number has " + std::to_string(cuts_.size()) + " cuts for " +
                         std::to_string(grid_.size()) + " grid levels");
  }
  if (auto bad = first_nesting_violation(cuts_, kNestingTol)) {
    throw InvariantError("alpha-cuts not nested between levels " + std::to_string(*bad) +
                         " and " + std::to_string(*bad + 1));
  }
}

FuzzyNumber FuzzyNumber::crisp(double r, const AlphaGrid& grid) {
  return FuzzyNumber(grid, std::vector<Interval>(grid.size(), Interval(r, r)));
}

FuzzyNumber FuzzyNumber::triangular(double a, double b, double c, const AlphaGrid& grid) {
  if (a > b || b > c) throw InvalidParams("triangular fuzzy number needs a <= b <= c");
  return trapezoidal(a, b, b, c, grid);
}

FuzzyNumber FuzzyNumber::trapezoidal(double a, double b, double c, double d,
                                     const AlphaGrid& grid) {
  if (a > b || b > c || c > d) {
    throw InvalidParams("trapezoidal fuzzy number needs a <= b <= c <= d");
  }
  std::vector<Interval> cuts;
  cuts.reserve(grid.size());
  for (double lambda : grid.levels()) {
    // Clamp so rounding can never push the endpoints past the core.
    const double lo = std::min(a + (b - a) * lambda, b);
    const double hi = std::max(d - (d - c) * lambda, c);
    cuts.emplace_back(lo, hi);
  }
  return FuzzyNumber(grid, std::move(cuts));
}

double FuzzyNumber::magnitude() const noexcept {
  double m = 0.0;
  for (const auto& c : cuts_) m = std::max({m, std::abs(c.lo()), std::abs(c.hi())});
  return m;
}

bool FuzzyNumber::is_crisp(double tol) const noexcept {
  const double r = cuts_.front().lo();
  return std::all_of(cuts_.begin(), cuts_.end(), [&](const Interval& c) {
    return std::abs(c.lo() - r) <= tol && std::abs(c.hi() - r) <= tol;
  });
}

bool operator==(const FuzzyNumber& a, const FuzzyNumber& b) noexcept {
  return a.grid_ == b.grid_ && a.cuts_ == b.cuts_;
}

FuzzyNumber add(const FuzzyNumber& u, const FuzzyNumber& v) {
  require_same_grid(u, v);
  std::vector<Interval> cuts(u.size());
  for (std::size_t i = 0; i < cuts.size(); ++i) cuts[i] = u.cut(i) + v.cut(i);
  return FuzzyNumber(u.grid(), std::move(cuts));
}

FuzzyNumber scale(double k, const FuzzyNumber& u) {
  std::vector<Interval> cuts(u.size());
  for (std::size_t i = 0; i < cuts.size(); ++i) cuts[i] = k * u.cut(i);
  return FuzzyNumber(u.grid(), std::move(cuts));
}

double d_infty(const FuzzyNumber& u, const FuzzyNumber& v) {
  require_same_grid(u, v);
  double d = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) d = std::max(d, hausdorff(u.cut(i), v.cut(i)));
  return d;
}

bool includes(const FuzzyNumber& u, const FuzzyNumber& v, double tol) {
  require_same_grid(u, v);
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (!contains(u.cut(i), v.cut(i), tol)) return false;
  }
  return true;
}

bool gh_exists(const FuzzyNumber& u, const FuzzyNumber& v, double tol) {
  require_same_grid(u, v);
  const std::size_t count = u.size();
  auto dlo = [&](std::size_t i) { return u.cut(i).lo() - v.cut(i).lo(); };
  auto dhi = [&](std::size_t i) { return u.cut(i).hi() - v.cut(i).hi(); };

  bool u_wider = true;
  bool v_wider = true;
  for (std::size_t i = 0; i < count; ++i) {
    const double gap = len(u.cut(i)) - len(v.cut(i));
    u_wider = u_wider && gap >= -tol;
    v_wider = v_wider && gap <= tol;
  }
  const bool first = u_wider && nondecreasing(count, dlo, tol) && nonincreasing(count, dhi, tol);
  if (first) return true;
  return v_wider && nondecreasing(count, dhi, tol) && nonincreasing(count, dlo, tol);
}

FuzzyNumber gh_difference(const FuzzyNumber& u, const FuzzyNumber& v) {
  if (!gh_exists(u, v)) {
    throw GHDifferenceUndefined("gH-difference does not exist: level-wise differences are "
                                "not a nested family");
  }
  std::vector<Interval> cuts(u.size());
  for (std::size_t i = 0; i < cuts.size(); ++i) cuts[i] = gh_diff_interval(u.cut(i), v.cut(i));
  return FuzzyNumber(u.grid(), std::move(cuts));
}

FuzzyNumber g_difference(const FuzzyNumber& u, const FuzzyNumber& v) {
  require_same_grid(u, v);
  std::vector<Interval> cuts(u.size());
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();
  for (std::size_t k = u.size(); k-- > 0;) {
    const double dlo = u.cut(k).lo() - v.cut(k).lo();
    const double dhi = u.cut(k).hi() - v.cut(k).hi();
    lo = std::min({lo, dlo, dhi});
    hi = std::max({hi, dlo, dhi});
    cuts[k] = Interval(lo, hi);
  }
  return FuzzyNumber(u.grid(), std::move(cuts));
}

std::ostream& operator<<(std::ostream& os, const FuzzyNumber& u) {
  os << "{support " << u.support() << ", core " << u.core() << ", " << u.size() << " levels}";
  return os;
}

}  // namespace fuzzjack
