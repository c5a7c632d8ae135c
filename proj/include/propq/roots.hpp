#pragma once

#include "propq/polynomial.hpp"

#include <vector>

namespace propq {

// x^2 - i1 x + i2: the monic quadratic whose roots, when they exist, have
// sum i1 and product i2.
MonicPoly quadratic_from_sum_product(const Int& i1, const Int& i2);

// All integer roots of p in increasing order, each reported once
// (multiplicity ignored). For a monic integer polynomial these are all the
// rational roots there are: candidates are the divisors of the constant
// term, and a zero constant term contributes the root 0 plus the roots of
// p(x)/x.
std::vector<Int> monic_rational_roots(const MonicPoly& p);

// Exhaustive confirmation at desk scale: true iff eval_poly(p, c/b) != 0
// for every canonical proper rational with 2 <= b <= search_bound and
// |c| <= search_bound. Requires search_bound >= 2.
bool verify_no_proper_root(const MonicPoly& p, const Int& search_bound);

} // namespace propq
