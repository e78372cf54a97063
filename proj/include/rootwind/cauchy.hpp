#ifndef ROOTWIND_CAUCHY_HPP
#define ROOTWIND_CAUCHY_HPP

#include "rootwind/chain.hpp"
#include "rootwind/halfint.hpp"
#include "rootwind/poly.hpp"

namespace rootwind {

// One-sided and two-sided index of Q/P at a rational point: with mu, nu the
// vanishing orders of P, Q at x and the stripped parts Pt, Qt,
//   plus  = (1/2) sign(Qt(x) Pt(x))            if mu > nu, else 0
//   minus = (-1)^(mu-nu) * plus                if mu > nu, else 0
//   total = plus - minus.
struct LocalIndex {
    HalfInt plus, minus, total;
};
LocalIndex local_index(const UniPoly& Q, const UniPoly& P, const Rational& x);

// Cauchy index Ind_a^b(Q, P) of Q/P over [a, b], real-closure semantics.
// Pipeline: degenerate zeros, orientation, gcd strip, degree reduction
// (Q <- Q rem P), then the subresultant chain evaluated by the weighted
// variation rule.
HalfInt cauchy_index(const UniPoly& Q, const UniPoly& P, const Rational& a, const Rational& b);

// Definition-based evaluation used as an independent cross-check: endpoint
// one-sided terms plus the sum of interior jumps, with jump signs read off
// samples taken between isolated roots of P*Q. Shares no code path with the
// chain pipeline beyond polynomial arithmetic.
HalfInt cauchy_index_oracle(const UniPoly& Q, const UniPoly& P, const Rational& a,
                            const Rational& b);

// Ind_a^b(P', P) = #distinct roots in (a, b) + half for each closed endpoint
// that is a root.
HalfInt count_real_roots(const UniPoly& P, const Rational& a, const Rational& b);

struct IndexPair {
    HalfInt lhs, rhs;
};

// Both sides of Ind_a^b(Q,P) + Ind_a^b(P,Q) = Var_a^b(P,Q); requires P, Q
// with no common root on [a, b] (CommonRoot otherwise).
IndexPair inversion_check(const UniPoly& P, const UniPoly& Q, const Rational& a,
                          const Rational& b);

// Both sides of
//   Ind_a^b(PR-QS, PS+QR) = Ind_a^b(P,Q) + Ind_a^b(R,S)
//     + (1/2) sign(((PS+QR) Q S)(a)) - (1/2) sign(((PS+QR) Q S)(b));
// requires gcd(P,Q) and gcd(R,S) rootless on [a, b] (CommonRoot otherwise).
IndexPair product_formula_check(const UniPoly& P, const UniPoly& Q, const UniPoly& R,
                                const UniPoly& S, const Rational& a, const Rational& b);

} // namespace rootwind

#endif
