#pragma once

#include "propq/rational.hpp"

#include <optional>

namespace propq {

// Each verdict decides an integrality question by its characterizing
// divisibility condition, carries the witnesses it used, and also computes
// the exact resulting value. Predicate and value characterize each other;
// every constructor re-checks that they agree and treats a mismatch as an
// invariant_violation (it would contradict a proven equivalence).

// Trichotomy on the numerator of a proper rational r = c/b:
//   |c| = 1  -> the reciprocal b/c is an integer,
//   c >= 2   -> the reciprocal is a positive proper rational,
//   c <= -2  -> the reciprocal is the negative proper rational -b/|c|.
enum class ReciprocalCase { UnitNumeratorInteger, PositiveProper, NegativeProper };

struct ReciprocalVerdict {
    ReciprocalCase case_tag;
    CanonicalRational result;
};

// r * i is an integer iff b | i; witness_quotient is the q with i = b q.
struct ScaleVerdict {
    bool is_integer;
    std::optional<Int> witness_quotient;
    CanonicalRational result;
};

// r1 + r2 is an integer iff b1 = b2 and b1 | (c1 + c2). divisibility_holds
// is present only when the denominators are equal.
struct SumVerdict {
    bool is_integer;
    bool denominators_equal;
    std::optional<bool> divisibility_holds;
    CanonicalRational result;
};

// r1 * r2 is an integer iff b1 | c2 and b2 | c1.
struct ProductVerdict {
    bool is_integer;
    bool b1_divides_c2;
    bool b2_divides_c1;
    CanonicalRational result;
};

// Joint view of sum and product: an integer sum together with an integer
// product forces both inputs to be integers, so two proper rationals never
// achieve both.
struct JointVerdict {
    bool sum_is_integer;
    bool product_is_integer;
    bool both_inputs_integer;
};

ReciprocalVerdict reciprocal_verdict(const CanonicalRational& r);

// Exact r + d for proper r and integer d; always a proper rational with the
// denominator of r unchanged.
CanonicalRational shift_verdict(const CanonicalRational& r, const Int& d);

ScaleVerdict scale_verdict(const CanonicalRational& r, const Int& i);
SumVerdict sum_verdict(const CanonicalRational& r1, const CanonicalRational& r2);
ProductVerdict product_verdict(const CanonicalRational& r1, const CanonicalRational& r2);

// Accepts any two canonical rationals (integers included).
JointVerdict joint_verdict(const CanonicalRational& q1, const CanonicalRational& q2);

} // namespace propq
