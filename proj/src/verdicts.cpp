#include "propq/verdicts.hpp"

#include "propq/errors.hpp"

#include <string>
#include <utility>

namespace propq {
namespace {

void require_proper(const CanonicalRational& r, const char* op) {
    if (!r.is_proper())
        throw not_proper(std::string(op) + ": " + to_string(r) +
                         " is an integer, not a proper rational");
}

void check_agreement(bool predicate, const CanonicalRational& result, const char* theorem) {
    if (predicate != result.is_integer())
        throw invariant_violation(std::string(theorem) +
                                  ": predicate disagrees with exact arithmetic on " +
                                  to_string(result));
}

} // namespace

ReciprocalVerdict reciprocal_verdict(const CanonicalRational& r) {
    require_proper(r, "reciprocal_verdict");
    if (r.is_zero())
        throw zero_value("reciprocal_verdict: zero input"); // unreachable for canonical proper r

    CanonicalRational result = reciprocal(r);
    const Int& c = r.numerator();

    ReciprocalCase tag;
    if (c == 1 || c == -1) {
        tag = ReciprocalCase::UnitNumeratorInteger;
        if (!result.is_integer())
            throw invariant_violation("T1(i): reciprocal of " + to_string(r) + " must be an integer");
    } else if (c >= 2) {
        tag = ReciprocalCase::PositiveProper;
        if (!result.is_proper() || result.numerator() <= 0)
            throw invariant_violation("T1(ii): reciprocal of " + to_string(r) +
                                      " must be a positive proper rational");
    } else {
        tag = ReciprocalCase::NegativeProper;
        // standard form d/|c| with d = -b
        if (result.denominator() != -c || result.numerator() != -r.denominator())
            throw invariant_violation("T1(iii): reciprocal of " + to_string(r) +
                                      " must be -b/|c|, got " + to_string(result));
    }
    return {tag, std::move(result)};
}

CanonicalRational shift_verdict(const CanonicalRational& r, const Int& d) {
    require_proper(r, "shift_verdict");
    CanonicalRational result = add(r, CanonicalRational{d});
    if (!result.is_proper() || result.denominator() != r.denominator() ||
        result.numerator() != r.numerator() + d * r.denominator())
        throw invariant_violation("T2: " + to_string(r) + " + " + d.str() +
                                  " must stay proper with denominator unchanged, got " +
                                  to_string(result));
    return result;
}

ScaleVerdict scale_verdict(const CanonicalRational& r, const Int& i) {
    require_proper(r, "scale_verdict");
    const bool integral = divides(r.denominator(), i);
    CanonicalRational result = mul(r, CanonicalRational{i});
    check_agreement(integral, result, "T3");
    std::optional<Int> quotient;
    if (integral) quotient = Int(i / r.denominator());
    return {integral, std::move(quotient), std::move(result)};
}

SumVerdict sum_verdict(const CanonicalRational& r1, const CanonicalRational& r2) {
    require_proper(r1, "sum_verdict");
    require_proper(r2, "sum_verdict");
    const bool denominators_equal = r1.denominator() == r2.denominator();
    std::optional<bool> divisibility_holds;
    if (denominators_equal)
        divisibility_holds = divides(r1.denominator(), r1.numerator() + r2.numerator());
    const bool integral = denominators_equal && *divisibility_holds;
    CanonicalRational result = add(r1, r2);
    check_agreement(integral, result, "T4");
    return {integral, denominators_equal, divisibility_holds, std::move(result)};
}

ProductVerdict product_verdict(const CanonicalRational& r1, const CanonicalRational& r2) {
    require_proper(r1, "product_verdict");
    require_proper(r2, "product_verdict");
    const bool b1_divides_c2 = divides(r1.denominator(), r2.numerator());
    const bool b2_divides_c1 = divides(r2.denominator(), r1.numerator());
    const bool integral = b1_divides_c2 && b2_divides_c1;
    CanonicalRational result = mul(r1, r2);
    check_agreement(integral, result, "T5");
    return {integral, b1_divides_c2, b2_divides_c1, std::move(result)};
}

JointVerdict joint_verdict(const CanonicalRational& q1, const CanonicalRational& q2) {
    const bool sum_is_integer = add(q1, q2).is_integer();
    const bool product_is_integer = mul(q1, q2).is_integer();
    const bool both_inputs_integer = q1.is_integer() && q2.is_integer();
    // Integer sum + integer product from non-integer inputs would contradict
    // the joint characterization; for two proper inputs this is the
    // no-counterexample claim.
    if (sum_is_integer && product_is_integer && !both_inputs_integer)
        throw invariant_violation("T6/T7: integer sum and product from non-integer inputs " +
                                  to_string(q1) + ", " + to_string(q2));
    return {sum_is_integer, product_is_integer, both_inputs_integer};
}

} // namespace propq
