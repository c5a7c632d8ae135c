#include "propq/oracle.hpp"

#include <stdexcept>

namespace propq::oracle {

Box::Box(Int max_abs_numerator, Int max_denominator)
    : max_abs_numerator_(std::move(max_abs_numerator)),
      max_denominator_(std::move(max_denominator)) {
    if (max_abs_numerator_ < 1)
        throw std::invalid_argument("Box: max_abs_numerator must be >= 1");
    if (max_denominator_ < 2)
        throw std::invalid_argument("Box: max_denominator must be >= 2");
}

std::vector<CanonicalRational> enumerate_proper(const Box& box) {
    std::vector<CanonicalRational> out;
    for (Int b = 2; b <= box.max_denominator(); ++b) {
        for (Int c = -box.max_abs_numerator(); c <= box.max_abs_numerator(); ++c) {
            if (c == 0 || propq::gcd(c, b) != 1) continue;
            out.push_back(normalize(c, b));
        }
    }
    return out;
}

bool direct_is_integer(const CanonicalRational& q) {
    // Local gcd pass, on purpose: re-derive lowest terms instead of trusting
    // the input's bookkeeping.
    Int a = q.numerator() < 0 ? Int(-q.numerator()) : q.numerator();
    Int b = q.denominator();
    while (b != 0) {
        Int r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    // a == gcd(|c|, b0) with b0 >= 1, so a >= 1; integer iff b0 / a == 1.
    return q.denominator() == a;
}

CounterexampleReport search_theorem7(const Box& box) {
    const std::vector<CanonicalRational> elements = enumerate_proper(box);
    CounterexampleReport report;
    for (std::size_t i = 0; i < elements.size(); ++i) {
        const Int& c1 = elements[i].numerator();
        const Int& b1 = elements[i].denominator();
        for (std::size_t j = i; j < elements.size(); ++j) {
            const Int& c2 = elements[j].numerator();
            const Int& b2 = elements[j].denominator();
            ++report.pairs_scanned;
            const Int den = b1 * b2;
            if ((c1 * b2 + c2 * b1) % den != 0) continue;
            if ((c1 * c2) % den != 0) continue;
            report.found = true;
            report.pair = {elements[i], elements[j]};
            return report;
        }
    }
    return report;
}

} // namespace propq::oracle
