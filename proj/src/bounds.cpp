#include "rootwind/bounds.hpp"

#include <stdexcept>

#include "rootwind/errors.hpp"

namespace rootwind {

Integer beta(const Integer& d) {
    if (d < 1) throw std::invalid_argument("beta needs d >= 1");
    Integer cur = d;
    while (mpz_even_p(cur.get_mpz_t())) cur = cur * (cur - 1) / 2;
    return cur;
}

Integer gamma(const Integer& d) {
    if (d < 1) throw std::invalid_argument("gamma needs d >= 1");
    Integer best = 0;
    for (Integer e = 1; e <= d; ++e) {
        Integer b = beta(2 * e);
        if (b > best) best = b;
    }
    return best;
}

DegreeBoundReport bound_check(long d) {
    if (d < 1) throw std::invalid_argument("bound_check needs d >= 1");
    DegreeBoundReport rep;
    rep.d = d;
    rep.beta_value = beta(Integer(d));
    rep.gamma_value = gamma(Integer(d));
    auto fail = [&](const std::string& what) {
        throw DomainError(errc::soundness, "degree-function bound violated: " + what);
    };

    if (mpz_even_p(rep.beta_value.get_mpz_t())) fail("beta must be odd");
    if (rep.gamma_value < Integer(d) * d) fail("d^2 <= gamma(d)");

    if (d >= 4) {
        // d = 2^k s with s odd
        long k = 0, s = d;
        while (s % 2 == 0) {
            s /= 2;
            ++k;
        }
        const Rational half_pow = k == 0 ? Rational(1, 2) : Rational(Integer(1) << (k - 1));
        const Rational base = half_pow * s;
        const unsigned long e2k = 1UL << k;
        rep.beta_lower = Rational(8, 3) * pow_rational(Rational(3, 4) * base, e2k);
        rep.beta_upper = Rational(2) * pow_rational(base, e2k);
        rep.gamma_lower = pow_rational(Rational(3, 8), static_cast<unsigned long>(d - 1)) *
                          pow_rational(Rational(d), static_cast<unsigned long>(d));
        rep.gamma_upper = 2 * pow_integer(Integer(d), 2 * static_cast<unsigned long>(d));
        rep.sandwich_checked = true;
        if (rep.beta_lower > Rational(rep.beta_value)) fail("beta lower sandwich");
        if (Rational(rep.beta_value) > rep.beta_upper) fail("beta upper sandwich");
        if (!(rep.gamma_lower < Rational(rep.gamma_value))) fail("gamma strict lower bound");
        if (rep.gamma_value > rep.gamma_upper) fail("gamma upper bound");
    }
    return rep;
}

} // namespace rootwind
