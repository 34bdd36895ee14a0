#pragma once

#include <cstdint>

#include "lieder/report.hpp"
#include "lieder/ring.hpp"

namespace lieder {

/// Randomized exact checks of the commutative unital *-ring axioms and of the
/// imaginary unit. One record per axiom; a failing record carries the first
/// counterexample found.
VerificationReport check_ring_axioms(const Ring& ring, std::size_t sample_count, std::uint64_t seed);

}  // namespace lieder
