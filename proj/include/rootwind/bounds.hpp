#ifndef ROOTWIND_BOUNDS_HPP
#define ROOTWIND_BOUNDS_HPP

#include "rootwind/rational.hpp"

namespace rootwind {

// beta(d) = d for odd d, beta(d(d-1)/2) for even d. The argument grows
// roughly quadratically per unfolding, so values explode: arbitrary
// precision is mandatory.
Integer beta(const Integer& d);

// gamma(d) = max over 1 <= e <= d of beta(2e); non-decreasing in d.
Integer gamma(const Integer& d);

struct DegreeBoundReport {
    long d = 0;
    Integer beta_value, gamma_value;
    Rational beta_lower, beta_upper;   // (8/3)(3/4 2^{k-1} s)^{2^k} and 2 (2^{k-1} s)^{2^k}
    Rational gamma_lower;              // (3/8)^{d-1} d^d, meaningful for d >= 4
    Integer gamma_upper;               // 2 d^{2d}
    bool sandwich_checked = false;     // the beta/gamma growth bounds apply only for d >= 4
};

// Evaluates beta, gamma, and the growth inequalities at d: for d >= 4 the
// beta sandwich and (3/8)^{d-1} d^d < gamma(d) <= 2 d^{2d}; for every d >= 1,
// d^2 <= gamma(d) and beta odd. A violated inequality is an implementation
// bug and throws SoundnessViolation.
DegreeBoundReport bound_check(long d);

} // namespace rootwind

#endif
