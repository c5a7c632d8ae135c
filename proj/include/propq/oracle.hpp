#pragma once

#include "propq/rational.hpp"

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

// Brute-force machinery kept deliberately independent of the verdict
// predicates: everything here decides integrality by direct exact
// arithmetic and a local gcd pass only, so it can serve as a second opinion
// when cross-validating the theorem implementations. This header depends on
// the rational core alone.
namespace propq::oracle {

// Bounded enumeration domain: the canonical proper rationals c/b with
// 0 < |c| <= max_abs_numerator and 2 <= b <= max_denominator.
class Box {
public:
    Box(Int max_abs_numerator, Int max_denominator);

    const Int& max_abs_numerator() const noexcept { return max_abs_numerator_; }
    const Int& max_denominator() const noexcept { return max_denominator_; }

private:
    Int max_abs_numerator_;
    Int max_denominator_;
};

// Every canonical proper rational in the box, exactly once, in
// lexicographic (b, c) order: denominator ascending, then numerator
// ascending.
std::vector<CanonicalRational> enumerate_proper(const Box& box);

// Integrality decided by re-normalizing from scratch with a local gcd
// loop; does not trust the input's bookkeeping.
bool direct_is_integer(const CanonicalRational& q);

struct CounterexampleReport {
    bool found = false;
    std::optional<std::pair<CanonicalRational, CanonicalRational>> pair;
    std::uint64_t pairs_scanned = 0;
};

// Scan all unordered pairs (with repetition) from enumerate_proper(box) for
// one whose sum and product are both integers, deciding integrality by
// direct cross-multiplied arithmetic. No such pair exists; the report
// certifies how much ground the search covered.
CounterexampleReport search_theorem7(const Box& box);

} // namespace propq::oracle
