#include "fuzzjack/interval.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <sstream>

#include "fuzzjack/errors.hpp"

namespace fuzzjack {

Interval::Interval(double lo, double hi) : lo_(lo), hi_(hi) {
  if (!std::isfinite(lo) || !std::isfinite(hi)) {
    throw InvariantError("interval endpoints must be finite");
  }
  if (lo > hi) {
    std::ostringstream os;
    os.precision(17);
    os << "interval lower endpoint " << lo << " exceeds upper endpoint " << hi;
    throw InvariantError(os.str());
  }
}

double len(const Interval& a) noexcept { return a.hi() - a.lo(); }

double hausdorff(const Interval& a, const Interval& b) noexcept {
  return std::max(std::abs(a.lo() - b.lo()), std::abs(a.hi() - b.hi()));
}

Interval gh_diff_interval(const Interval& a, const Interval& b) {
  const double dlo = a.lo() - b.lo();
  const double dhi = a.hi() - b.hi();
  return dlo <= dhi ? Interval(dlo, dhi) : Interval(dhi, dlo);
}

Interval minkowski_add(const Interval& a, const Interval& b) {
  // lo <= hi is preserved exactly under round-to-nearest addition.
  return Interval(a.lo() + b.lo(), a.hi() + b.hi());
}

Interval scale_interval(double k, const Interval& a) {
  if (k >= 0.0) return Interval(k * a.lo(), k * a.hi());
  return Interval(k * a.hi(), k * a.lo());
}

bool contains(const Interval& outer, const Interval& inner, double tol) noexcept {
  return inner.lo() >= outer.lo() - tol && inner.hi() <= outer.hi() + tol;
}

std::ostream& operator<<(std::ostream& os, const Interval& a) {
  return os << '[' << a.lo() << ", " << a.hi() << ']';
}

}  // namespace fuzzjack
