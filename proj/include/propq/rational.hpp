#pragma once

#include "propq/errors.hpp"
#include "propq/integers.hpp"

#include <ostream>
#include <string>
#include <utility>

namespace propq {

// The rationals split into integers and proper rationals (rationals that
// are not integers).
enum class Classification { Integer, ProperRational };

// A rational in lowest terms with strictly positive denominator: the sign
// lives on the numerator, gcd(|c|, b) = 1, and zero is 0/1. Integers are
// exactly the b = 1 values; proper rationals are exactly the b >= 2 values,
// where c/b is the standard form. Instances are immutable and can only be
// built in canonical form.
class CanonicalRational {
public:
    CanonicalRational() : c_(0), b_(1) {}
    explicit CanonicalRational(Int value) : c_(std::move(value)), b_(1) {}

    const Int& numerator() const noexcept { return c_; }
    const Int& denominator() const noexcept { return b_; }

    bool is_integer() const { return b_ == 1; }
    bool is_proper() const { return b_ >= 2; }
    bool is_zero() const { return c_ == 0; }

    friend bool operator==(const CanonicalRational&, const CanonicalRational&) = default;

    friend CanonicalRational normalize(Int numerator, Int denominator);
    friend CanonicalRational negate(const CanonicalRational& q);

private:
    struct canonical_tag {};
    CanonicalRational(Int c, Int b, canonical_tag)
        : c_(std::move(c)), b_(std::move(b)) {}

    Int c_; // numerator, carries the sign
    Int b_; // denominator, >= 1
};

// Reduce numerator/denominator to canonical form: the one entry point for
// building a rational from an arbitrary pair.
inline CanonicalRational normalize(Int numerator, Int denominator) {
    if (denominator == 0) throw zero_denominator();
    if (numerator == 0) return CanonicalRational{};
    if (denominator < 0) {
        numerator = -numerator;
        denominator = -denominator;
    }
    Int g = propq::gcd(numerator, denominator);
    if (g != 1) {
        numerator /= g;
        denominator /= g;
    }
    return CanonicalRational{std::move(numerator), std::move(denominator),
                             CanonicalRational::canonical_tag{}};
}

inline Classification classify(const CanonicalRational& q) {
    return q.is_integer() ? Classification::Integer : Classification::ProperRational;
}

// Exact sum (c1 b2 + c2 b1) / (b1 b2), renormalized.
inline CanonicalRational add(const CanonicalRational& lhs, const CanonicalRational& rhs) {
    return normalize(lhs.numerator() * rhs.denominator() + rhs.numerator() * lhs.denominator(),
                     lhs.denominator() * rhs.denominator());
}

// Exact product (c1 c2) / (b1 b2), renormalized.
inline CanonicalRational mul(const CanonicalRational& lhs, const CanonicalRational& rhs) {
    return normalize(lhs.numerator() * rhs.numerator(),
                     lhs.denominator() * rhs.denominator());
}

inline CanonicalRational negate(const CanonicalRational& q) {
    return CanonicalRational{-q.numerator(), q.denominator(),
                             CanonicalRational::canonical_tag{}};
}

inline CanonicalRational reciprocal(const CanonicalRational& q) {
    if (q.is_zero()) throw recip_of_zero();
    return normalize(q.denominator(), q.numerator());
}

inline std::string to_string(const CanonicalRational& q) {
    return q.numerator().str() + "/" + q.denominator().str();
}

inline std::string to_string(Classification c) {
    return c == Classification::Integer ? "integer" : "proper rational";
}

inline std::ostream& operator<<(std::ostream& os, const CanonicalRational& q) {
    return os << to_string(q);
}

} // namespace propq
