#include "propq/roots.hpp"

#include <set>
#include <stdexcept>

namespace propq {
namespace {

Int eval_at_integer(const std::vector<Int>& coeffs, const Int& x) {
    Int acc = coeffs.back();
    for (auto it = coeffs.rbegin() + 1; it != coeffs.rend(); ++it)
        acc = acc * x + *it;
    return acc;
}

} // namespace

MonicPoly quadratic_from_sum_product(const Int& i1, const Int& i2) {
    return MonicPoly({i2, -i1, Int(1)});
}

std::vector<Int> monic_rational_roots(const MonicPoly& p) {
    std::vector<Int> coeffs = p.coefficients();
    std::set<Int> roots;

    // Factor out x^k first: a zero constant term means 0 is a root and the
    // remaining roots are those of p(x)/x. The leading 1 bounds the scan.
    std::size_t first_nonzero = 0;
    while (coeffs[first_nonzero] == 0) ++first_nonzero;
    if (first_nonzero > 0) {
        roots.insert(Int(0));
        coeffs.erase(coeffs.begin(), coeffs.begin() + first_nonzero);
    }

    // Nonzero constant term now (unless only the leading 1 is left); any
    // remaining integer root divides it.
    if (coeffs.size() >= 2) {
        const Int a0 = coeffs.front() < 0 ? Int(-coeffs.front()) : coeffs.front();
        for (Int d = 1; d * d <= a0; ++d) {
            if (a0 % d != 0) continue;
            for (const Int& cand : {d, Int(a0 / d)}) {
                if (eval_at_integer(coeffs, cand) == 0) roots.insert(cand);
                if (eval_at_integer(coeffs, -cand) == 0) roots.insert(-cand);
            }
        }
    }
    return {roots.begin(), roots.end()};
}

bool verify_no_proper_root(const MonicPoly& p, const Int& search_bound) {
    if (search_bound < 2)
        throw std::invalid_argument("verify_no_proper_root: search bound must be >= 2");
    for (Int b = 2; b <= search_bound; ++b) {
        for (Int c = -search_bound; c <= search_bound; ++c) {
            if (c == 0 || propq::gcd(c, b) != 1) continue;
            if (eval_poly(p, normalize(c, b)).is_zero()) return false;
        }
    }
    return true;
}

} // namespace propq
