#ifndef ROOTWIND_REAL_ROOTS_HPP
#define ROOTWIND_REAL_ROOTS_HPP

#include <vector>

#include "rootwind/poly.hpp"

namespace rootwind {

// Bracket for one real root: lo == hi marks an exact rational root, otherwise
// the open interval (lo, hi) contains exactly one root of the (squarefree
// part of the) polynomial and neither endpoint is a root.
struct RootBracket {
    Rational lo, hi;
    bool exact() const { return lo == hi; }
};

// Sign variations of the coefficient list, zeros skipped.
int descartes_variations(const UniPoly& p);

// All real roots of P inside the open interval (a, b), as disjoint brackets
// in increasing order, found by coefficient-sign-variation bisection with
// exact deflation of rational roots hit at split points. Independent of any
// Sturm or subresultant machinery. P must be nonzero; a >= b yields {}.
std::vector<RootBracket> isolate_real_roots(const UniPoly& P, const Rational& a,
                                            const Rational& b);

} // namespace rootwind

#endif
