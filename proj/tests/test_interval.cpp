#include <doctest.h>

#include <random>
#include <sstream>

#include "fuzzjack/errors.hpp"
#include "fuzzjack/interval.hpp"

using namespace fuzzjack;

TEST_CASE("construction rejects inverted or non-finite endpoints") {
  CHECK_THROWS_AS(Interval(2.0, 1.0), InvariantError);
  CHECK_THROWS_AS(Interval(0.0, std::numeric_limits<double>::infinity()), InvariantError);
  CHECK_THROWS_AS(Interval(std::nan(""), 1.0), InvariantError);
  CHECK(Interval() == Interval(0.0, 0.0));
  CHECK(Interval::point(3.0) == Interval(3.0, 3.0));
}

TEST_CASE("len") {
  CHECK(len(Interval(0, 0)) == 0.0);
  CHECK(len(Interval(5, 11)) == 6.0);
  CHECK(len(Interval(12, 19)) == 7.0);
}

TEST_CASE("hausdorff") {
  CHECK(hausdorff(Interval(0, 1), Interval(0, 1)) == 0.0);
  CHECK(hausdorff(Interval(12, 19), Interval(5, 11)) == 8.0);
  CHECK(hausdorff(Interval(0, 2), Interval(1, 1)) == 1.0);
}

TEST_CASE("gH difference of intervals") {
  CHECK(gh_diff_interval(Interval(12, 19), Interval(5, 11)) == Interval(7, 8));
  const Interval a(-3, 4);
  CHECK(gh_diff_interval(a, a) == Interval(0, 0));
  CHECK(gh_diff_interval(Interval(0, 1), Interval(0, 2)) == Interval(-1, 0));
}

TEST_CASE("Minkowski sum and scaling") {
  CHECK(Interval(1, 2) + Interval(3, 5) == Interval(4, 7));
  const Interval a(-2, 9);
  CHECK(a + Interval(0, 0) == a);
  CHECK(Interval(-1, 1) + Interval(-1, 1) == Interval(-2, 2));
  CHECK(2.0 * Interval(1, 3) == Interval(2, 6));
  CHECK(0.0 * Interval(1, 3) == Interval(0, 0));
  CHECK(-1.0 * Interval(1, 3) == Interval(-3, -1));
}

TEST_CASE("contains") {
  CHECK(contains(Interval(0, 4), Interval(1, 3)));
  CHECK_FALSE(contains(Interval(1, 3), Interval(0, 4)));
  CHECK(contains(Interval(0, 1), Interval(-1e-10, 1), 1e-9));
}

TEST_CASE("gH difference solves one of the two defining equations") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> d(-10, 10);
  for (int t = 0; t < 1000; ++t) {
    const double p = d(rng), q = d(rng), r = d(rng), s = d(rng);
    const Interval a(std::min(p, q), std::max(p, q));
    const Interval b(std::min(r, s), std::max(r, s));
    const Interval c = gh_diff_interval(a, b);
    const bool first = hausdorff(a, b + c) <= 1e-12;
    const bool second = hausdorff(b, a + (-1.0) * c) <= 1e-12;
    CHECK((first || second));
    // cancellation
    CHECK(hausdorff(gh_diff_interval(a + b, b), a) <= 1e-12);
    // Hausdorff distance is the magnitude of the gH difference
    CHECK(hausdorff(a, b) == doctest::Approx(std::max(std::abs(c.lo()), std::abs(c.hi()))));
  }
}

TEST_CASE("stream output") {
  std::ostringstream os;
  os << Interval(1, 2);
  CHECK(os.str() == "[1, 2]");
}
