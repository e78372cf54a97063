#include "rootwind/chain.hpp"

#include <utility>
#include <vector>

#include "rootwind/cauchy.hpp"
#include "rootwind/errors.hpp"
#include "rootwind/subresultant.hpp"

namespace rootwind {

namespace {

template <typename D>
void validate_chain_inputs(const Poly<D>& S0, const Poly<D>& S1) {
    if (S0.is_zero() || S1.is_zero())
        throw DomainError(errc::zero_input, "chain inputs must be nonzero");
    if (S0.degree() < 1 || S1.degree() >= S0.degree())
        throw DomainError(errc::degree_order, "chain needs deg S1 < deg S0, deg S0 >= 1");
}

// Quot(n, d) over the fraction field of D, which the structure theorem
// guarantees lands back in D[X] for the chain witnesses.
template <typename D>
Poly<D> fraction_field_quot(const Poly<D>& n, const Poly<D>& d) {
    PseudoDivResult<D> pd = pseudo_divrem(n, d);
    return detail::coeffwise_exact_div(pd.quot, pd.mult);
}

} // namespace

SigmaTauChain build_chain(const UniPoly& S0, const UniPoly& S1) {
    validate_chain_inputs(S0, S1);
    SigmaTauChain ch;
    ch.interval = std::nullopt;
    ch.good = true;
    if (S1.degree() == 0) { // (S0, S1) alone: sigma, tau empty, last member constant
        ch.s = {S0, S1};
        ch.epsilon = {1};
        return ch;
    }
    SubresSeq<Rational> sub = subresultants_structured(S0, S1);
    if (sub.ndeg.back() != 0)
        throw DomainError(errc::not_coprime, "chain inputs share a nonconstant factor");
    const std::size_t s = sub.ndeg.size() - 1;
    ch.s.push_back(S0);
    for (std::size_t i = 1; i <= s; ++i)
        ch.s.push_back(sub.sresp[static_cast<std::size_t>(sub.ndeg[i - 1] - 1)]);
    for (std::size_t i = 1; i + 1 <= s; ++i) {
        const Rational a = sub.tcoef[i - 1] * sub.sres[static_cast<std::size_t>(sub.ndeg[i - 1])];
        const Rational c = sub.tcoef[i] * sub.sres[static_cast<std::size_t>(sub.ndeg[i])];
        ch.a_wit.push_back(UniPoly::constant(a));
        ch.c_wit.push_back(UniPoly::constant(c));
        ch.b_wit.push_back(-divrem(ch.s[i - 1].scaled(c), ch.s[i]).first);
        ch.sigma.push_back(sign_of(a));
        ch.tau.push_back(sign_of(c));
    }
    ch.epsilon = epsilon_weights(ch.sigma, ch.tau);
    return ch;
}

BivariateChainTemplate build_chain_bivariate(const BiPoly& S0, const BiPoly& S1,
                                             const Rational& ylo, const Rational& yhi) {
    validate_chain_inputs(S0, S1);
    if (!(ylo <= yhi)) throw DomainError(errc::degree_order, "y-interval must satisfy b <= b'");
    BivariateChainTemplate t;
    t.ylo = ylo;
    t.yhi = yhi;
    UniPoly content = gcd_poly(content_y(S0), content_y(S1));
    if (content.degree() > 0)
        throw DomainError(errc::not_coprime, "inputs share a nonconstant coefficient factor");
    if (S1.degree() == 0) {
        const UniPoly& last = S1.coeff(0);
        if (count_real_roots(last, ylo, yhi) != HalfInt())
            throw DomainError(errc::sign_condition,
                              "last member vanishes on the y-interval: " + poly_to_string(last, "Y"));
        t.s = {S0, S1};
        t.epsilon = {1};
        return t;
    }
    SubresSeq<UniPoly> sub = subresultants_structured(S0, S1);
    if (sub.ndeg.back() != 0)
        throw DomainError(errc::not_coprime, "chain inputs share a nonconstant factor in X");
    const std::size_t s = sub.ndeg.size() - 1;
    t.s.push_back(S0);
    for (std::size_t i = 1; i <= s; ++i)
        t.s.push_back(sub.sresp[static_cast<std::size_t>(sub.ndeg[i - 1] - 1)]);
    const Rational mid = (ylo + yhi) / 2;
    auto require_rootless = [&](const UniPoly& g) {
        if (g.is_zero() || count_real_roots(g, ylo, yhi) != HalfInt())
            throw DomainError(errc::sign_condition,
                              "sign-condition polynomial vanishes on the y-interval: " +
                                  poly_to_string(g, "Y"));
    };
    const UniPoly last = t.s.back().coeff(0); // S_s has X-degree 0
    require_rootless(last);
    for (std::size_t i = 1; i + 1 <= s; ++i) {
        const UniPoly a = sub.tcoef[i - 1] * sub.sres[static_cast<std::size_t>(sub.ndeg[i - 1])];
        const UniPoly c = sub.tcoef[i] * sub.sres[static_cast<std::size_t>(sub.ndeg[i])];
        require_rootless(a);
        require_rootless(c);
        t.a_wit.push_back(a);
        t.c_wit.push_back(c);
        t.b_wit.push_back(-fraction_field_quot(t.s[i - 1].scaled(c), t.s[i]));
        t.sigma.push_back(sign_of(a(mid)));
        t.tau.push_back(sign_of(c(mid)));
    }
    t.epsilon = epsilon_weights(t.sigma, t.tau);
    return t;
}

SigmaTauChain BivariateChainTemplate::specialize_at_y(const Rational& y) const {
    SigmaTauChain ch;
    ch.interval = std::nullopt; // X-chain valid on the whole line
    ch.good = true;
    for (const BiPoly& poly : s) ch.s.push_back(specialize_y(poly, y));
    ch.sigma = sigma;
    ch.tau = tau;
    ch.epsilon = epsilon;
    for (std::size_t i = 0; i < a_wit.size(); ++i) {
        ch.a_wit.push_back(UniPoly::constant(a_wit[i](y)));
        ch.c_wit.push_back(UniPoly::constant(c_wit[i](y)));
        ch.b_wit.push_back(specialize_y(b_wit[i], y));
    }
    return ch;
}

SigmaTauChain BivariateChainTemplate::specialize_at_x(const Rational& x) const {
    SigmaTauChain ch;
    ch.interval = std::make_pair(ylo, yhi); // Y-chain valid there only
    ch.good = true;
    for (const BiPoly& poly : s) ch.s.push_back(specialize_x(poly, x));
    ch.sigma = sigma;
    ch.tau = tau;
    ch.epsilon = epsilon;
    for (std::size_t i = 0; i < a_wit.size(); ++i) {
        ch.a_wit.push_back(a_wit[i]);
        ch.c_wit.push_back(c_wit[i]);
        ch.b_wit.push_back(specialize_x(b_wit[i], x));
    }
    return ch;
}

void validate_chain(const SigmaTauChain& ch) {
    auto fail = [](const std::string& what) {
        throw DomainError(errc::sign_condition, "chain invariant violated: " + what);
    };
    const int n = ch.n();
    if (n < 1) fail("need at least two members");
    const std::size_t nw = static_cast<std::size_t>(n - 1);
    if (ch.sigma.size() != nw || ch.tau.size() != nw || ch.a_wit.size() != nw ||
        ch.b_wit.size() != nw || ch.c_wit.size() != nw)
        fail("witness count");
    if (ch.epsilon.size() != static_cast<std::size_t>(n) || ch.epsilon[0] != 1)
        fail("epsilon head");
    for (std::size_t i = 1; i < ch.epsilon.size(); ++i)
        if (ch.epsilon[i] != ch.epsilon[i - 1] * ch.sigma[i - 1] * ch.tau[i - 1])
            fail("epsilon recurrence");

    // sign(A_i) = sigma_i and sign(C_i) = tau_i everywhere on the interval
    auto check_sign = [&](const UniPoly& w, int want, const char* label) {
        if (w.is_zero() || want == 0) fail(label);
        if (ch.interval) {
            const auto& [a, b] = *ch.interval;
            if (count_real_roots(w, a, b) != HalfInt()) fail(label);
            if (sign_of(w((a + b) / 2)) != want) fail(label);
        } else {
            if (w.degree() != 0) fail(label); // whole-line chains carry constants
            if (sign_of(w.coeff(0)) != want) fail(label);
        }
    };
    for (std::size_t i = 0; i < nw; ++i) {
        check_sign(ch.a_wit[i], ch.sigma[i], "sign of A");
        check_sign(ch.c_wit[i], ch.tau[i], "sign of C");
        UniPoly rel = ch.a_wit[i] * ch.s[i + 2] + ch.b_wit[i] * ch.s[i + 1] + ch.c_wit[i] * ch.s[i];
        if (!rel.is_zero()) fail("three-term relation");
    }

    // good-Sturm flag and successive coprimality on the interval
    if (ch.good) {
        const UniPoly& last = ch.s.back();
        if (last.is_zero()) fail("last member zero");
        if (ch.interval) {
            if (count_real_roots(last, ch.interval->first, ch.interval->second) != HalfInt())
                fail("last member vanishes on the interval");
        } else if (last.degree() != 0) {
            fail("whole-line chain must end in a constant");
        }
    }
    for (int m = 1; m <= n; ++m) {
        UniPoly g = gcd_poly(ch.s[static_cast<std::size_t>(m - 1)], ch.s[static_cast<std::size_t>(m)]);
        if (g.is_zero()) fail("consecutive members both zero");
        if (g.degree() == 0) continue;
        if (!ch.interval) fail("consecutive members share a factor");
        if (count_real_roots(g, ch.interval->first, ch.interval->second) != HalfInt())
            fail("consecutive members share a root on the interval");
    }
}

} // namespace rootwind
