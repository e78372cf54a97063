#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <utility>
#include <vector>

#include "rootwind/cauchy.hpp"
#include "rootwind/chain.hpp"
#include "rootwind/errors.hpp"
#include "rootwind/poly.hpp"
#include "test_util.hpp"

using namespace rootwind;

namespace {

UniPoly upoly(std::vector<long> v) {
    std::vector<Rational> c;
    c.reserve(v.size());
    for (long x : v) c.emplace_back(x);
    return UniPoly(std::move(c));
}

BiPoly bpoly(std::vector<std::vector<long>> rows) {
    std::vector<UniPoly> c;
    c.reserve(rows.size());
    for (auto& r : rows) c.push_back(upoly(r));
    return BiPoly(std::move(c));
}

} // namespace

TEST_CASE("index of 1/(X^2-2) over [1,2] is 1, on both evaluation routes") {
    const UniPoly one = upoly({1});
    const UniPoly p = upoly({-2, 0, 1});
    CHECK(cauchy_index(one, p, Rational(1), Rational(2)) == HalfInt::whole(1));
    CHECK(cauchy_index_oracle(one, p, Rational(1), Rational(2)) == HalfInt::whole(1));
}

TEST_CASE("index of 1/X over [-1,1] sees the full jump at the pole") {
    const UniPoly one = upoly({1});
    const UniPoly x = upoly({0, 1});
    CHECK(cauchy_index(one, x, Rational(-1), Rational(1)) == HalfInt::whole(1));
    CHECK(cauchy_index_oracle(one, x, Rational(-1), Rational(1)) == HalfInt::whole(1));
    // -1/X jumps the other way
    CHECK(cauchy_index(upoly({-1}), x, Rational(-1), Rational(1)) == HalfInt::whole(-1));
}

TEST_CASE("local index: one-sided halves and their combinations") {
    const UniPoly one = upoly({1});
    const UniPoly x = upoly({0, 1});
    const UniPoly x2 = upoly({0, 0, 1});

    LocalIndex odd = local_index(one, x, Rational(0)); // 1/X at 0
    CHECK(odd.plus == HalfInt::half(1));
    CHECK(odd.minus == HalfInt::half(-1));
    CHECK(odd.total == HalfInt::whole(1));

    LocalIndex even = local_index(one, x2, Rational(0)); // 1/X^2 at 0
    CHECK(even.plus == HalfInt::half(1));
    CHECK(even.minus == HalfInt::half(1));
    CHECK(even.total == HalfInt());

    // X/X^3 behaves like 1/X^2: orders subtract, gap stays even
    LocalIndex reduced = local_index(x, upoly({0, 0, 0, 1}), Rational(0));
    CHECK(reduced.total == HalfInt());
    CHECK(reduced.plus == HalfInt::half(1));

    // no pole: numerator vanishes at least as much as the denominator
    CHECK(local_index(x2, x, Rational(0)).total == HalfInt());
    CHECK(local_index(one, x, Rational(5)).total == HalfInt());

    // -3/X at 0: sign comes from the stripped parts
    LocalIndex neg = local_index(upoly({-3}), x, Rational(0));
    CHECK(neg.total == HalfInt::whole(-1));
}

TEST_CASE("degenerate inputs give index zero") {
    const UniPoly x = upoly({0, 1});
    CHECK(cauchy_index(UniPoly(), x, Rational(0), Rational(1)) == HalfInt());
    CHECK(cauchy_index(x, UniPoly(), Rational(0), Rational(1)) == HalfInt());
    CHECK(cauchy_index(x, x, Rational(2), Rational(2)) == HalfInt());
    CHECK(cauchy_index_oracle(x, x, Rational(2), Rational(2)) == HalfInt());
}

TEST_CASE("half contributions at interval endpoints") {
    const UniPoly one = upoly({1});
    const UniPoly x = upoly({0, 1});
    // pole sits exactly on an endpoint: only the one-sided half counts
    CHECK(cauchy_index(one, x, Rational(0), Rational(1)) == HalfInt::half(1));
    CHECK(cauchy_index(one, x, Rational(-1), Rational(0)) == HalfInt::half(1));
    CHECK(cauchy_index_oracle(one, x, Rational(0), Rational(1)) == HalfInt::half(1));
    CHECK(cauchy_index_oracle(one, x, Rational(-1), Rational(0)) == HalfInt::half(1));
}

TEST_CASE("index is antisymmetric in the interval orientation") {
    testutil::Rng rng(2024);
    for (int t = 0; t < 50; ++t) {
        const UniPoly p = rng.nonzero_poly_upto(6);
        const UniPoly q = rng.nonzero_poly_upto(6);
        const Rational a = rng.rational(5), b = rng.rational(5);
        CHECK(cauchy_index(q, p, b, a) == -cauchy_index(q, p, a, b));
    }
}

TEST_CASE("common factors never change the index") {
    testutil::Rng rng(77);
    for (int t = 0; t < 60; ++t) {
        const UniPoly p = rng.nonzero_poly_upto(5);
        const UniPoly q = rng.nonzero_poly_upto(4);
        const UniPoly h = rng.nonzero_poly_upto(3);
        Rational a = rng.rational(4), b = rng.rational(4);
        if (b < a) std::swap(a, b);
        CHECK(cauchy_index(q * h, p * h, a, b) == cauchy_index(q, p, a, b));
    }
}

TEST_CASE("index is invariant under increasing affine reparametrization") {
    testutil::Rng rng(78);
    for (int t = 0; t < 40; ++t) {
        const UniPoly p = rng.nonzero_poly_upto(5);
        const UniPoly q = rng.nonzero_poly_upto(4);
        Rational a = rng.rational(4), b = rng.rational(4);
        if (b < a) std::swap(a, b);
        Rational c = rng.nonzero_rational(3);
        if (sign_of(c) < 0) c = -c;
        const Rational e = rng.rational(3);
        // x = c*u + e maps [(a-e)/c, (b-e)/c] onto [a, b]
        CHECK(cauchy_index(affine_compose(q, c, e), affine_compose(p, c, e), (a - e) / c,
                           (b - e) / c) == cauchy_index(q, p, a, b));
    }
}

TEST_CASE("index adds over adjacent intervals") {
    testutil::Rng rng(79);
    for (int t = 0; t < 60; ++t) {
        const UniPoly p = rng.nonzero_poly_upto(6);
        const UniPoly q = rng.nonzero_poly_upto(5);
        std::vector<Rational> e{rng.rational(4), rng.rational(4), rng.rational(4)};
        std::sort(e.begin(), e.end());
        CHECK(cauchy_index(q, p, e[0], e[1]) + cauchy_index(q, p, e[1], e[2]) ==
              cauchy_index(q, p, e[0], e[2]));
    }
}

TEST_CASE("chain route equals the definition-based oracle on random pairs") {
    testutil::Rng rng(80);
    for (int t = 0; t < 120; ++t) {
        const UniPoly p = rng.nonzero_poly_upto(7);
        const UniPoly q = rng.nonzero_poly_upto(7);
        Rational a = rng.rational(5), b = rng.rational(5);
        if (b < a) std::swap(a, b);
        CHECK(cauchy_index(q, p, a, b) == cauchy_index_oracle(q, p, a, b));
    }
}

TEST_CASE("root counting: distinct interior roots plus endpoint halves") {
    // (X-1)(X-2)(X-3)
    const UniPoly p = upoly({-6, 11, -6, 1});
    CHECK(count_real_roots(p, Rational(0), Rational(4)) == HalfInt::whole(3));
    CHECK(count_real_roots(p, Rational(1), Rational(3)) == HalfInt::whole(2));
    CHECK(count_real_roots(p, Rational(1), Rational(5, 2)) == HalfInt::half(3));
    CHECK(count_real_roots(p, Rational(4), Rational(9)) == HalfInt());
    // multiplicity is ignored: (X-1)^2 X
    const UniPoly m = upoly({0, 1, -2, 1});
    CHECK(count_real_roots(m, Rational(-1), Rational(2)) == HalfInt::whole(2));
    CHECK_THROWS_AS(count_real_roots(UniPoly(), Rational(0), Rational(1)), DomainError);
    CHECK(count_real_roots(upoly({7}), Rational(0), Rational(1)) == HalfInt());
}

TEST_CASE("inversion identity holds whenever the common-root hypothesis does") {
    testutil::Rng rng(81);
    int checked = 0;
    for (int t = 0; t < 150; ++t) {
        const UniPoly p = rng.nonzero_poly_upto(6);
        const UniPoly q = rng.nonzero_poly_upto(6);
        Rational a = rng.rational(4), b = rng.rational(4);
        if (b < a) std::swap(a, b);
        try {
            IndexPair r = inversion_check(p, q, a, b);
            CHECK(r.lhs == r.rhs);
            ++checked;
        } catch (const DomainError& e) {
            CHECK(e.code() == errc::common_root);
        }
    }
    CHECK(checked > 100);
}

TEST_CASE("inversion rejects pairs sharing a root on the interval") {
    const UniPoly common = upoly({-1, 1}); // X-1
    const UniPoly p = common * upoly({1, 1});
    const UniPoly q = common * upoly({3, 0, 1});
    CHECK_THROWS_AS(inversion_check(p, q, Rational(0), Rational(2)), DomainError);
    // same pair is fine on an interval avoiding the shared root
    IndexPair r = inversion_check(p, q, Rational(2), Rational(5));
    CHECK(r.lhs == r.rhs);
}

TEST_CASE("product formula: worked quadruple with a half-jump correction") {
    const UniPoly one = upoly({1});
    const UniPoly x = upoly({0, 1});
    const UniPoly xm1 = upoly({-1, 1});
    IndexPair r = product_formula_check(one, x, xm1, x, Rational(0), Rational(1));
    CHECK(r.lhs == r.rhs);
    CHECK(r.lhs == HalfInt::half(-1));
}

TEST_CASE("product formula rejects a pair sharing an interval root") {
    const UniPoly x = upoly({0, 1});
    const UniPoly xm1 = upoly({-1, 1});
    // P = X-1 and Q = X(X-1) share the root 1 inside [0, 1]
    CHECK_THROWS_AS(product_formula_check(xm1, x * xm1, xm1, x, Rational(0), Rational(1)),
                    DomainError);
    try {
        product_formula_check(xm1, x * xm1, xm1, x, Rational(0), Rational(1));
    } catch (const DomainError& e) {
        CHECK(e.code() == errc::common_root);
    }
}

TEST_CASE("product formula holds on random instances meeting its hypotheses") {
    testutil::Rng rng(82);
    int checked = 0;
    for (int t = 0; t < 200; ++t) {
        const UniPoly p = rng.nonzero_poly_upto(4);
        const UniPoly q = rng.nonzero_poly_upto(4);
        const UniPoly rr = rng.nonzero_poly_upto(4);
        const UniPoly s = rng.nonzero_poly_upto(4);
        Rational a = rng.rational(3), b = rng.rational(3);
        if (b < a) std::swap(a, b);
        try {
            IndexPair r = product_formula_check(p, q, rr, s, a, b);
            CHECK(r.lhs == r.rhs);
            ++checked;
        } catch (const DomainError& e) {
            CHECK(e.code() == errc::common_root);
        }
    }
    CHECK(checked > 120);
}

TEST_CASE("subresultant chains are good Sturm chains and validate") {
    testutil::Rng rng(83);
    for (int t = 0; t < 40; ++t) {
        UniPoly p = rng.poly(3 + static_cast<int>(t % 5), 5);
        UniPoly q = rng.nonzero_poly_upto(p.degree() - 1);
        if (gcd_poly(p, q).degree() > 0) continue;
        SigmaTauChain ch = build_chain(p, q);
        validate_chain(ch);
        CHECK(ch.good);
        CHECK(!ch.interval.has_value());
        CHECK(ch.s.front() == p);
        CHECK(ch.s.back().degree() == 0);
        CHECK(ch.epsilon.size() == ch.s.size() - 1);
    }
}

TEST_CASE("chain construction rejects bad input shapes") {
    const UniPoly x = upoly({0, 1});
    const UniPoly x2 = upoly({0, 0, 1});
    CHECK_THROWS_AS(build_chain(UniPoly(), x), DomainError);
    CHECK_THROWS_AS(build_chain(x, UniPoly()), DomainError);
    CHECK_THROWS_AS(build_chain(x, x2), DomainError);     // degree order
    CHECK_THROWS_AS(build_chain(upoly({3}), x), DomainError);
    CHECK_THROWS_AS(build_chain(x2, x), DomainError);     // gcd = X
    try {
        build_chain(x2, x);
    } catch (const DomainError& e) {
        CHECK(e.code() == errc::not_coprime);
    }
}

TEST_CASE("weighted variation rule on a hand-built non-Sturm chain") {
    // S = (X, 1, X) with -1*S2 + 0*S1 + 1*S0 = 0: sigma = -1, tau = +1, so
    // epsilon = (1, -1) and the last member is allowed to vanish at 0.
    const UniPoly x = upoly({0, 1});
    const UniPoly one = upoly({1});
    SigmaTauChain ch;
    ch.s = {x, one, x};
    ch.sigma = {-1};
    ch.tau = {1};
    ch.epsilon = epsilon_weights(ch.sigma, ch.tau);
    ch.a_wit = {upoly({-1})};
    ch.b_wit = {UniPoly()};
    ch.c_wit = {one};
    ch.interval = std::make_pair(Rational(-2), Rational(3));
    ch.good = false;
    validate_chain(ch);

    const Rational a(-2), b(3);
    // Ind(S1/S0) + epsilon_n * Ind(S_{n-1}/S_n) = Var(sigma,tau)
    const HalfInt lhs = cauchy_index(one, x, a, b) + cauchy_index(one, x, a, b) * ch.epsilon.back();
    CHECK(lhs == HalfInt());
    CHECK(var_sigma_tau(ch, a, b) == HalfInt());
    // the unweighted variation count would get this wrong
    CHECK(var_interval(x, one, a, b) + var_interval(one, x, a, b) == HalfInt::whole(2));
}

TEST_CASE("validators notice broken chains") {
    SigmaTauChain ch = build_chain(upoly({-2, 0, 1}), upoly({0, 2}));
    validate_chain(ch);
    SigmaTauChain bad = ch;
    bad.sigma[0] = -bad.sigma[0];
    CHECK_THROWS_AS(validate_chain(bad), DomainError);
    bad = ch;
    bad.epsilon.back() = -bad.epsilon.back();
    CHECK_THROWS_AS(validate_chain(bad), DomainError);
    bad = ch;
    bad.b_wit[0] = upoly({1, 1});
    CHECK_THROWS_AS(validate_chain(bad), DomainError); // three-term relation breaks
    bad = ch;
    bad.s.back() = upoly({0, 1});
    CHECK_THROWS_AS(validate_chain(bad), DomainError); // good chain ending in X
}

TEST_CASE("good chains certify the index through the variation rule") {
    testutil::Rng rng(84);
    for (int t = 0; t < 60; ++t) {
        UniPoly p = rng.poly(4, 5);
        UniPoly q = rng.nonzero_poly_upto(3);
        const UniPoly g = gcd_poly(p, q);
        if (g.degree() > 0) continue;
        Rational a = rng.rational(6), b = rng.rational(6);
        if (b < a) std::swap(a, b);
        SigmaTauChain ch = build_chain(p, q);
        CHECK(var_sigma_tau(ch, a, b) == cauchy_index_oracle(q, p, a, b));
    }
}

TEST_CASE("bivariate chain template specializes to valid univariate chains") {
    testutil::Rng rng(85);
    const BiPoly x3 = BiPoly::monomial(UniPoly::constant(Rational(1)), 3);
    const BiPoly x2 = BiPoly::monomial(UniPoly::constant(Rational(1)), 2);
    int built = 0;
    for (int t = 0; t < 60 && built < 12; ++t) {
        // monic in X so no member degree can drop under specialization
        BiPoly p = rng.bipoly(2, 2, 3) + x3;
        BiPoly q = rng.bipoly(1, 2, 3) + x2;
        const Rational ylo(-1), yhi(1);
        BivariateChainTemplate tpl;
        try {
            tpl = build_chain_bivariate(p, q, ylo, yhi);
        } catch (const DomainError&) {
            continue; // sign condition or coprimality failed for this draw
        }
        ++built;
        for (Rational y : {ylo, Rational(0), yhi, Rational(1, 3)}) {
            SigmaTauChain ch = tpl.specialize_at_y(y);
            validate_chain(ch);
            // evaluation commutes with the determinant definition, so the
            // template members match the directly built chain exactly
            SigmaTauChain direct = build_chain(specialize_y(p, y), specialize_y(q, y));
            REQUIRE(ch.s.size() == direct.s.size());
            for (std::size_t i = 0; i < ch.s.size(); ++i) CHECK(ch.s[i] == direct.s[i]);
        }
    }
    CHECK(built >= 5);
}

TEST_CASE("bivariate template gives working y-direction chains") {
    // P(X,Y) = X^2 - Y, Q(X,Y) = X: coprime, with constants controlling signs
    const BiPoly p = bpoly({{0, -1}, {0}, {1}});
    const BiPoly q = bpoly({{0}, {1}});
    BivariateChainTemplate tpl = build_chain_bivariate(p, q, Rational(1), Rational(2));
    for (Rational x : {Rational(0), Rational(1), Rational(1, 2)}) {
        SigmaTauChain ch = tpl.specialize_at_x(x);
        REQUIRE(ch.interval.has_value());
        CHECK(ch.interval->first == Rational(1));
        CHECK(ch.interval->second == Rational(2));
        validate_chain(ch);
        // weighted rule matches the oracle for the specialized pair
        const UniPoly p0 = specialize_x(p, x);
        const UniPoly q0 = specialize_x(q, x);
        if (q0.is_zero() || p0.is_zero() || p0.degree() < 1) continue;
        const HalfInt want = cauchy_index_oracle(q0, p0, Rational(1), Rational(2));
        CHECK(var_sigma_tau(ch, Rational(1), Rational(2)) == want);
    }
}

TEST_CASE("bivariate template construction rejects vanishing sign conditions") {
    // last member resultant-like datum vanishes when Y crosses 0:
    // P = X^2 + Y, Q = X gives S_last = Y (up to sign), which has a root in [-1, 1]
    const BiPoly p = bpoly({{0, 1}, {0}, {1}});
    const BiPoly q = bpoly({{0}, {1}});
    CHECK_THROWS_AS(build_chain_bivariate(p, q, Rational(-1), Rational(1)), DomainError);
    // and is accepted on a y-interval where it keeps its sign
    BivariateChainTemplate tpl = build_chain_bivariate(p, q, Rational(1), Rational(3));
    CHECK(tpl.s.size() >= 2);
    CHECK_THROWS_AS(build_chain_bivariate(p, p, Rational(1), Rational(3)), DomainError);
}
