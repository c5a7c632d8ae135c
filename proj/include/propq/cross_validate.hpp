#pragma once

#include "propq/oracle.hpp"

#include <cstdint>

// Sits above both the oracle and the verdicts (kept out of oracle.hpp so
// the enumeration/direct-integrality layer never sees the predicates it is
// meant to check).
namespace propq::oracle {

enum class TheoremSelector { T3, T4, T5 };

// For every input tuple in range, assert that the theorem predicate equals
// the direct oracle answer; returns the number of tuples checked. T4 and T5
// run over unordered pairs (with repetition) from the box; T3 crosses every
// element with the integers in [-max_abs_numerator, max_abs_numerator].
// A disagreement throws oracle_mismatch naming the tuple.
std::uint64_t cross_validate(const Box& box, TheoremSelector which);

} // namespace propq::oracle
