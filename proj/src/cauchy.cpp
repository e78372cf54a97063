#include "rootwind/cauchy.hpp"

#include <utility>
#include <vector>

#include "rootwind/errors.hpp"
#include "rootwind/real_roots.hpp"

namespace rootwind {

namespace {

// Vanishing order of p at x together with the cofactor p / (X-x)^order.
std::pair<int, UniPoly> strip_point(const UniPoly& p, const Rational& x) {
    UniPoly lin(std::vector<Rational>{-x, Rational(1)});
    UniPoly cur = p;
    int order = 0;
    while (sign_of(cur(x)) == 0 && cur.degree() > 0) {
        cur = divrem(cur, lin).first;
        ++order;
    }
    return {order, std::move(cur)};
}

} // namespace

LocalIndex local_index(const UniPoly& Q, const UniPoly& P, const Rational& x) {
    LocalIndex li;
    if (P.is_zero() || Q.is_zero()) return li;
    auto [mu, pt] = strip_point(P, x);
    auto [nu, qt] = strip_point(Q, x);
    if (mu <= nu) return li;
    const int s = sign_of(Rational(qt(x) * pt(x)));
    li.plus = HalfInt::half(s);
    li.minus = HalfInt::half((mu - nu) % 2 == 0 ? s : -s);
    li.total = li.plus - li.minus;
    return li;
}

HalfInt cauchy_index(const UniPoly& Q, const UniPoly& P, const Rational& a, const Rational& b) {
    if (P.is_zero() || Q.is_zero() || a == b) return HalfInt();
    if (a > b) return -cauchy_index(Q, P, b, a);
    UniPoly p = P, q = Q;
    const UniPoly g = gcd_poly(p, q);
    if (g.degree() > 0) {
        p = divrem(p, g).first;
        q = divrem(q, g).first;
    }
    if (!p.is_zero() && !q.is_zero() && q.degree() >= p.degree()) q = divrem(q, p).second;
    if (p.is_zero() || p.degree() == 0 || q.is_zero()) return HalfInt();
    return var_sigma_tau(build_chain(p, q), a, b);
}

HalfInt cauchy_index_oracle(const UniPoly& Q, const UniPoly& P, const Rational& a,
                            const Rational& b) {
    if (P.is_zero() || Q.is_zero() || a == b) return HalfInt();
    if (a > b) return -cauchy_index_oracle(Q, P, b, a);
    UniPoly p = P, q = Q;
    const UniPoly g = gcd_poly(p, q);
    if (g.degree() > 0) {
        p = divrem(p, g).first;
        q = divrem(q, g).first;
    }
    HalfInt res = local_index(q, p, a).plus - local_index(q, p, b).minus;
    if (p.degree() == 0) return res;

    // Jumps happen only at roots of p; isolating the roots of p*q at once
    // guarantees every sample taken at or between bracket boundaries avoids
    // the zeros of both polynomials.
    const UniPoly prod = p * q;
    const UniPoly sp = squarefree_part(p);
    std::vector<RootBracket> brackets = isolate_real_roots(prod, a, b);
    const UniPoly qp = prod;
    auto sample_sign = [&](const Rational& x) { return sign_of(qp(x)); };
    for (std::size_t k = 0; k < brackets.size(); ++k) {
        const RootBracket& br = brackets[k];
        if (br.exact()) {
            if (sign_of(p(br.lo)) != 0) continue; // a zero of q alone never jumps
            const Rational prev = k == 0 ? a : brackets[k - 1].hi;
            const Rational next = k + 1 == brackets.size() ? b : brackets[k + 1].lo;
            res += HalfInt::half(sample_sign((br.lo + next) / 2) -
                                 sample_sign((prev + br.lo) / 2));
        } else {
            if (sign_of(Rational(sp(br.lo) * sp(br.hi))) > 0) continue; // bracketed root belongs to q
            res += HalfInt::half(sample_sign(br.hi) - sample_sign(br.lo));
        }
    }
    return res;
}

HalfInt count_real_roots(const UniPoly& P, const Rational& a, const Rational& b) {
    if (P.is_zero()) throw DomainError(errc::zero_input, "cannot count roots of 0");
    if (P.degree() == 0) return HalfInt();
    return cauchy_index(P.derivative(), P, a, b);
}

namespace {

bool rootless_on(const UniPoly& g, const Rational& a, const Rational& b) {
    if (g.is_zero()) return false;
    if (g.degree() == 0) return true;
    const Rational lo = a < b ? a : b, hi = a < b ? b : a;
    return count_real_roots(g, lo, hi) == HalfInt();
}

} // namespace

IndexPair inversion_check(const UniPoly& P, const UniPoly& Q, const Rational& a,
                          const Rational& b) {
    const UniPoly g = (P.is_zero() || Q.is_zero()) ? (P.is_zero() ? Q : P) : gcd_poly(P, Q);
    if (!rootless_on(g, a, b))
        throw DomainError(errc::common_root, "inputs share a root on the interval");
    IndexPair r;
    r.lhs = cauchy_index(Q, P, a, b) + cauchy_index(P, Q, a, b);
    r.rhs = var_interval(P, Q, a, b);
    return r;
}

IndexPair product_formula_check(const UniPoly& P, const UniPoly& Q, const UniPoly& R,
                                const UniPoly& S, const Rational& a, const Rational& b) {
    const UniPoly g1 = (P.is_zero() || Q.is_zero()) ? (P.is_zero() ? Q : P) : gcd_poly(P, Q);
    const UniPoly g2 = (R.is_zero() || S.is_zero()) ? (R.is_zero() ? S : R) : gcd_poly(R, S);
    if (!rootless_on(g1, a, b))
        throw DomainError(errc::common_root, "P, Q share a root on the interval");
    if (!rootless_on(g2, a, b))
        throw DomainError(errc::common_root, "R, S share a root on the interval");
    const UniPoly num = P * R - Q * S;
    const UniPoly den = P * S + Q * R;
    IndexPair out;
    out.lhs = cauchy_index(num, den, a, b);
    const UniPoly corr = den * Q * S;
    out.rhs = cauchy_index(P, Q, a, b) + cauchy_index(R, S, a, b) +
              HalfInt::half(sign_of(corr(a))) - HalfInt::half(sign_of(corr(b)));
    return out;
}

} // namespace rootwind
