#pragma once

#include <cstdint>
#include <ostream>

namespace fuzzjack {

// Randomized property suites (metric axioms, interval cancellation, gH/g
// agreement, step functions, modulus properties). Prints one PASS/FAIL line
// per suite and returns the number of failed suites.
int run_selftest(std::uint64_t seed, std::ostream& out);

}  // namespace fuzzjack
