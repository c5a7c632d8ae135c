#include "propq/cross_validate.hpp"

#include "propq/errors.hpp"
#include "propq/verdicts.hpp"

#include <string>

namespace propq::oracle {
namespace {

// Direct integrality of a raw fraction n/d with d > 0: remainder test only,
// no shared code with the predicates under scrutiny.
bool raw_is_integer(const Int& n, const Int& d) { return n % d == 0; }

[[noreturn]] void mismatch(const char* theorem, const std::string& tuple) {
    throw oracle_mismatch(std::string(theorem) + ": predicate and oracle disagree on " + tuple);
}

} // namespace

std::uint64_t cross_validate(const Box& box, TheoremSelector which) {
    const std::vector<CanonicalRational> elements = enumerate_proper(box);
    std::uint64_t checked = 0;

    switch (which) {
    case TheoremSelector::T3:
        for (const CanonicalRational& r : elements) {
            for (Int i = -box.max_abs_numerator(); i <= box.max_abs_numerator(); ++i) {
                const bool predicate = scale_verdict(r, i).is_integer;
                const bool oracle_says = raw_is_integer(r.numerator() * i, r.denominator());
                if (predicate != oracle_says)
                    mismatch("T3", to_string(r) + " * " + i.str());
                ++checked;
            }
        }
        break;

    case TheoremSelector::T4:
        for (std::size_t i = 0; i < elements.size(); ++i) {
            for (std::size_t j = i; j < elements.size(); ++j) {
                const CanonicalRational& r1 = elements[i];
                const CanonicalRational& r2 = elements[j];
                const bool predicate = sum_verdict(r1, r2).is_integer;
                const bool oracle_says = raw_is_integer(
                    r1.numerator() * r2.denominator() + r2.numerator() * r1.denominator(),
                    r1.denominator() * r2.denominator());
                if (predicate != oracle_says)
                    mismatch("T4", to_string(r1) + " + " + to_string(r2));
                ++checked;
            }
        }
        break;

    case TheoremSelector::T5:
        for (std::size_t i = 0; i < elements.size(); ++i) {
            for (std::size_t j = i; j < elements.size(); ++j) {
                const CanonicalRational& r1 = elements[i];
                const CanonicalRational& r2 = elements[j];
                const bool predicate = product_verdict(r1, r2).is_integer;
                const bool oracle_says = raw_is_integer(r1.numerator() * r2.numerator(),
                                                        r1.denominator() * r2.denominator());
                if (predicate != oracle_says)
                    mismatch("T5", to_string(r1) + " * " + to_string(r2));
                ++checked;
            }
        }
        break;
    }
    return checked;
}

} // namespace propq::oracle
