#pragma once

#include "propq/rational.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace propq {

// Integer-coefficient polynomial with leading coefficient 1 and degree >= 1.
// Coefficients are stored constant term first.
class MonicPoly {
public:
    explicit MonicPoly(std::vector<Int> coefficients)
        : coeffs_(std::move(coefficients)) {
        if (coeffs_.size() < 2)
            throw std::invalid_argument("MonicPoly: degree must be at least 1");
        if (coeffs_.back() != 1)
            throw std::invalid_argument("MonicPoly: leading coefficient must be 1");
    }

    std::size_t degree() const noexcept { return coeffs_.size() - 1; }
    const std::vector<Int>& coefficients() const noexcept { return coeffs_; }

    friend bool operator==(const MonicPoly&, const MonicPoly&) = default;

private:
    std::vector<Int> coeffs_;
};

// Exact value of p at q, by Horner evaluation over exact rationals.
inline CanonicalRational eval_poly(const MonicPoly& p, const CanonicalRational& q) {
    const auto& cs = p.coefficients();
    CanonicalRational acc{cs.back()};
    for (auto it = cs.rbegin() + 1; it != cs.rend(); ++it)
        acc = add(mul(acc, q), CanonicalRational{*it});
    return acc;
}

// "x^2 - 5x + 6" style rendering: highest term first, zero terms skipped,
// unit coefficients printed bare.
inline std::string to_string(const MonicPoly& p) {
    const auto& cs = p.coefficients();
    const std::size_t deg = p.degree();
    std::string out = deg == 1 ? "x" : "x^" + std::to_string(deg);
    for (std::size_t k = deg; k-- > 0;) {
        const Int& a = cs[k];
        if (a == 0) continue;
        out += a < 0 ? " - " : " + ";
        const Int m = a < 0 ? Int(-a) : a;
        if (k == 0) {
            out += m.str();
        } else {
            if (m != 1) out += m.str();
            out += k == 1 ? "x" : "x^" + std::to_string(k);
        }
    }
    return out;
}

} // namespace propq
