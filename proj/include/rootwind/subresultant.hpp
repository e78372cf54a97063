#ifndef ROOTWIND_SUBRESULTANT_HPP
#define ROOTWIND_SUBRESULTANT_HPP

#include <vector>

#include "rootwind/poly.hpp"

namespace rootwind {

// Signed subresultant data for a pair (P, Q) with deg Q < deg P. Indexing is
// by formal degree j = 0..p with the usual conventions:
//   sresp[p] = P, sres[p] = 1, sresp[p-1] = Q, zeros strictly between q and p-1.
// ndeg is the strictly decreasing list d_0 = p > d_1 = q > ... > d_s of
// non-defective indices; tcoef[i] is the leading coefficient of
// sresp[ndeg[i-1] - 1] with tcoef[0] = 1.
template <typename D>
struct SubresSeq {
    Poly<D> p_in, q_in;
    int pdeg = 0, qdeg = 0;
    std::vector<Poly<D>> sresp;
    std::vector<D> sres;
    std::vector<int> ndeg;
    std::vector<D> tcoef;

    bool operator==(const SubresSeq& o) const {
        return p_in == o.p_in && q_in == o.q_in && sresp == o.sresp && sres == o.sres &&
               ndeg == o.ndeg && tcoef == o.tcoef;
    }
};

namespace detail {

template <typename D>
D pow_dom(const D& b, int e) {
    D r = dom::one<D>();
    for (int i = 0; i < e; ++i) r = D(r * b);
    return r;
}

template <typename D>
Poly<D> coeffwise_exact_div(const Poly<D>& p, const D& s) {
    if (p.is_zero()) return p;
    std::vector<D> c;
    c.reserve(static_cast<std::size_t>(p.degree()) + 1);
    for (int i = 0; i <= p.degree(); ++i) c.push_back(dom::exact_div(p.coeff(i), s));
    return Poly<D>(std::move(c));
}

template <typename D>
void validate_pair(const Poly<D>& P, const Poly<D>& Q) {
    if (P.is_zero() || Q.is_zero())
        throw DomainError(errc::zero_input, "subresultants need nonzero inputs");
    if (P.degree() < 1 || Q.degree() >= P.degree())
        throw DomainError(errc::degree_order, "subresultants need deg Q < deg P, deg P >= 1");
}

// Fraction-free elimination of the first m-1 columns of an m x n matrix
// (n >= m). Returns, for each trailing column c = m-1..n-1, the determinant
// of the square submatrix formed by columns 0..m-2 plus column c. Exact over
// any integral domain; row swaps flip the tracked sign.
template <typename D>
std::vector<D> trailing_minors(std::vector<std::vector<D>> M) {
    const std::size_t m = M.size();
    const std::size_t n = M.empty() ? 0 : M[0].size();
    std::vector<D> out(n - m + 1, dom::zero<D>());
    int sign = 1;
    D prev = dom::one<D>();
    for (std::size_t k = 0; k + 1 < m; ++k) {
        std::size_t piv = k;
        while (piv < m && dom::is_zero(M[piv][k])) ++piv;
        if (piv == m) return out; // dependent leading columns: every minor vanishes
        if (piv != k) {
            std::swap(M[piv], M[k]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < m; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                M[i][j] = dom::exact_div(D(M[k][k] * M[i][j] - M[i][k] * M[k][j]), prev);
            M[i][k] = dom::zero<D>();
        }
        prev = M[k][k];
    }
    for (std::size_t c = m - 1; c < n; ++c) {
        D v = M[m - 1][c];
        out[c - (m - 1)] = sign < 0 ? D(-v) : v;
    }
    return out;
}

template <typename D>
D determinant(std::vector<std::vector<D>> M) {
    if (M.empty()) return dom::one<D>();
    std::vector<D> last = trailing_minors(std::move(M));
    return last.back();
}

// Derive the non-defective index list and the leading coefficients T from a
// filled sresp table; shared by both construction routes so their outputs are
// comparable field by field.
template <typename D>
void finalize_degrees(SubresSeq<D>& s) {
    s.ndeg.assign(1, s.pdeg);
    s.tcoef.assign(1, dom::one<D>());
    while (s.ndeg.back() > 0) {
        const Poly<D>& next = s.sresp[static_cast<std::size_t>(s.ndeg.back() - 1)];
        if (next.is_zero()) break;
        s.tcoef.push_back(next.leading());
        s.ndeg.push_back(next.degree());
    }
}

} // namespace detail

// The matrix whose rows are X^{q-j-1}P, ..., P, Q, X Q, ..., X^{p-j-1}Q in the
// monomial basis X^{p+q-j-1}, ..., X, 1. Entry (k, l), 1-indexed:
//   a_{p+k-l} for k <= q-j, else b_{p+2q-2j+1-k-l}.
template <typename D>
std::vector<std::vector<D>> syha_matrix(const Poly<D>& P, const Poly<D>& Q, int j) {
    detail::validate_pair(P, Q);
    const int p = P.degree(), q = Q.degree();
    if (j < 0 || j > q) throw std::invalid_argument("syha_matrix needs 0 <= j <= deg Q");
    const int rows = p + q - 2 * j, cols = p + q - j;
    std::vector<std::vector<D>> M(static_cast<std::size_t>(rows),
                                  std::vector<D>(static_cast<std::size_t>(cols), dom::zero<D>()));
    for (int k = 0; k < rows; ++k)
        for (int l = 0; l < cols; ++l)
            M[static_cast<std::size_t>(k)][static_cast<std::size_t>(l)] =
                (k < q - j) ? P.coeff(p + k - l) : Q.coeff(p + 2 * q - 2 * j - 1 - k - l);
    return M;
}

// Determinant route: sresp_j = sum_i det(SyHa_{j,i}) X^i where SyHa_{j,i}
// keeps the first p+q-2j-1 columns plus the column of X^i. One elimination
// pass per j yields all i at once.
template <typename D>
SubresSeq<D> subresultants_naive(const Poly<D>& P, const Poly<D>& Q) {
    detail::validate_pair(P, Q);
    SubresSeq<D> s;
    s.p_in = P;
    s.q_in = Q;
    s.pdeg = P.degree();
    s.qdeg = Q.degree();
    const int p = s.pdeg, q = s.qdeg;
    s.sresp.assign(static_cast<std::size_t>(p) + 1, Poly<D>());
    s.sres.assign(static_cast<std::size_t>(p) + 1, dom::zero<D>());
    s.sresp[static_cast<std::size_t>(p)] = P;
    s.sres[static_cast<std::size_t>(p)] = dom::one<D>();
    s.sresp[static_cast<std::size_t>(p - 1)] = Q;
    for (int j = 0; j <= q; ++j) {
        const int m = p + q - 2 * j;
        std::vector<D> dets = detail::trailing_minors(syha_matrix(P, Q, j));
        // trailing column c = m-1+t holds X^{j-t}; reverse into ascending order
        std::vector<D> coeffs(static_cast<std::size_t>(j) + 1, dom::zero<D>());
        for (int t = 0; t <= j; ++t) coeffs[static_cast<std::size_t>(j - t)] = dets[static_cast<std::size_t>(t)];
        s.sresp[static_cast<std::size_t>(j)] = Poly<D>(std::move(coeffs));
        s.sres[static_cast<std::size_t>(j)] = s.sresp[static_cast<std::size_t>(j)].coeff(j);
    }
    if (q == p - 1)
        s.sres[static_cast<std::size_t>(q)] = Q.leading(); // determinant route agrees; keep exact value
    detail::finalize_degrees(s);
    return s;
}

// Structure-theorem route: the recursion
//   T_{d_{i-2}-1} sres_{d_{i-1}} sresp_{d_i - 1}
//     = -Rem(T_{d_{i-1}-1} sres_{d_i} sresp_{d_{i-2}-1}, sresp_{d_{i-1}-1})
// together with the proportionality and sign/power identities, all divisions
// exact in D. Inexact division means the inputs violate the theorem's
// derivation and is reported as StructureTheoremViolation.
template <typename D>
SubresSeq<D> subresultants_structured(const Poly<D>& P, const Poly<D>& Q) {
    detail::validate_pair(P, Q);
    SubresSeq<D> s;
    s.p_in = P;
    s.q_in = Q;
    s.pdeg = P.degree();
    s.qdeg = Q.degree();
    const int p = s.pdeg, q = s.qdeg;
    s.sresp.assign(static_cast<std::size_t>(p) + 1, Poly<D>());
    s.sres.assign(static_cast<std::size_t>(p) + 1, dom::zero<D>());
    s.sresp[static_cast<std::size_t>(p)] = P;
    s.sres[static_cast<std::size_t>(p)] = dom::one<D>();
    s.sresp[static_cast<std::size_t>(p - 1)] = Q;

    std::vector<int> nd{p};
    std::vector<D> tc{dom::one<D>()};

    const D t1 = Q.leading();
    tc.push_back(t1);
    const int delta1 = p - q;
    D head = detail::pow_dom(t1, delta1);
    if (((static_cast<long>(delta1) * (delta1 - 1)) / 2) % 2 != 0) head = D(-head);
    s.sres[static_cast<std::size_t>(q)] = head;
    s.sresp[static_cast<std::size_t>(q)] = Q.scaled(dom::exact_div(head, t1));
    nd.push_back(q);

    while (nd.back() > 0) {
        const std::size_t i = nd.size() - 1;
        const int di = nd[i], dim1 = nd[i - 1];
        const Poly<D>& src = s.sresp[static_cast<std::size_t>(i == 1 ? p : nd[i - 2] - 1)];
        const Poly<D>& divisor = s.sresp[static_cast<std::size_t>(dim1 - 1)];
        const D scale = D(tc[i] * s.sres[static_cast<std::size_t>(di)]);
        PseudoDivResult<D> pd = pseudo_divrem(src.scaled(scale), divisor);
        const D denom = D(pd.mult * D(tc[i - 1] * s.sres[static_cast<std::size_t>(dim1)]));
        Poly<D> next;
        try {
            next = detail::coeffwise_exact_div(-pd.rem, denom);
        } catch (const DomainError&) {
            throw DomainError(errc::structure_violation, "recursion step divided inexactly");
        }
        if (next.is_zero()) break; // nonconstant common divisor; lower entries stay zero

        s.sresp[static_cast<std::size_t>(di - 1)] = next;
        const D tnext = next.leading();
        const int dn = next.degree();
        if (dn == di - 1) s.sres[static_cast<std::size_t>(dn)] = tnext; // placeholder, fixed below
        const int delta = di - dn;
        D num = detail::pow_dom(tnext, delta);
        if (((static_cast<long>(delta) * (delta - 1)) / 2) % 2 != 0) num = D(-num);
        D sres_dn;
        try {
            sres_dn = dom::exact_div(num, detail::pow_dom(s.sres[static_cast<std::size_t>(di)], delta - 1));
        } catch (const DomainError&) {
            throw DomainError(errc::structure_violation, "sign/power step divided inexactly");
        }
        s.sres[static_cast<std::size_t>(dn)] = sres_dn;
        s.sresp[static_cast<std::size_t>(dn)] =
            detail::coeffwise_exact_div(next.scaled(sres_dn), tnext);
        tc.push_back(tnext);
        nd.push_back(dn);
    }
    detail::finalize_degrees(s);
    return s;
}

struct CoefficientDegreeReport {
    int max_observed = -1; // largest deg_Y among checked coefficients, -1 if all zero
    int max_allowed = 0;   // d^2 cap
};

// For P, Q in Q[Y][X] of total degree <= d, every X^i coefficient of sresp_j
// (0 <= i <= j <= q) satisfies deg_Y <= d(p+q-2j) - pq + j^2 + j - i <= d^2.
inline CoefficientDegreeReport coefficient_degree_check(const BiPoly& P, const BiPoly& Q, int d) {
    SubresSeq<UniPoly> s = subresultants_structured(P, Q);
    const int p = s.pdeg, q = s.qdeg;
    CoefficientDegreeReport rep;
    rep.max_allowed = d * d;
    for (int j = 0; j <= q; ++j) {
        for (int i = 0; i <= j; ++i) {
            UniPoly c = s.sresp[static_cast<std::size_t>(j)].coeff(i);
            if (c.is_zero()) continue;
            const int dy = c.degree();
            const int bound = d * (p + q - 2 * j) - p * q + j * j + j - i;
            if (bound > d * d)
                throw DomainError(errc::degree_bound, "per-coefficient bound exceeds d^2");
            if (dy > bound)
                throw DomainError(errc::degree_bound,
                                  "coefficient degree " + std::to_string(dy) + " exceeds bound " +
                                      std::to_string(bound) + " at (j=" + std::to_string(j) +
                                      ", i=" + std::to_string(i) + ")");
            if (dy > rep.max_observed) rep.max_observed = dy;
        }
    }
    return rep;
}

// Every structure-theorem identity on an already-built sequence, in
// multiplication-only form. Throws StructureTheoremViolation with the first
// failing identity; used to cross-validate both construction routes.
template <typename D>
void check_structure_identities(const SubresSeq<D>& s) {
    const int p = s.pdeg, q = s.qdeg;
    auto fail = [](const std::string& what) {
        throw DomainError(errc::structure_violation, what);
    };
    if (!(s.sresp[static_cast<std::size_t>(p)] == s.p_in) ||
        !(s.sres[static_cast<std::size_t>(p)] == dom::one<D>()))
        fail("top conventions");
    if (!(s.sresp[static_cast<std::size_t>(p - 1)] == s.q_in)) fail("sresp_{p-1} convention");
    for (int j = q + 1; j <= p - 1; ++j) {
        if (j < p - 1 && !s.sresp[static_cast<std::size_t>(j)].is_zero()) fail("gap zeros");
        if (!dom::is_zero(s.sres[static_cast<std::size_t>(j)])) fail("gap principal zeros");
    }
    for (int j = 0; j <= q; ++j) {
        const Poly<D>& pj = s.sresp[static_cast<std::size_t>(j)];
        if (!(D(pj.coeff(j)) == s.sres[static_cast<std::size_t>(j)])) fail("principal coefficient mismatch");
        if (!pj.is_zero() && pj.degree() > j) fail("formal degree exceeded");
    }
    if (s.ndeg.empty() || s.ndeg[0] != p || s.ndeg.size() < 2 || s.ndeg[1] != q)
        fail("non-defective list head");
    const std::size_t sidx = s.ndeg.size() - 1;
    for (std::size_t i = 1; i <= sidx; ++i) {
        const int di = s.ndeg[i], dim1 = s.ndeg[i - 1];
        const Poly<D>& above = s.sresp[static_cast<std::size_t>(dim1 - 1)];
        if (above.is_zero() || above.degree() != di) fail("degree of sresp_{d_{i-1}-1}");
        if (!(D(above.leading()) == s.tcoef[i])) fail("tcoef mismatch");
        for (int j = di + 1; j < dim1 - 1; ++j)
            if (!s.sresp[static_cast<std::size_t>(j)].is_zero()) fail("zeros between defective indices");
        // proportionality: sres_{d_i} * sresp_{d_{i-1}-1} = T_{d_{i-1}-1} * sresp_{d_i}
        if (!(above.scaled(s.sres[static_cast<std::size_t>(di)]) ==
              s.sresp[static_cast<std::size_t>(di)].scaled(s.tcoef[i])))
            fail("proportionality");
        // sign/power: sres_{d_i} * sres_{d_{i-1}}^{delta-1} = +- T_{d_{i-1}-1}^delta
        const int delta = dim1 - di;
        D lhs = D(s.sres[static_cast<std::size_t>(di)] *
                  detail::pow_dom(s.sres[static_cast<std::size_t>(dim1)], delta - 1));
        D rhs = detail::pow_dom(s.tcoef[i], delta);
        if (((static_cast<long>(delta) * (delta - 1)) / 2) % 2 != 0) rhs = D(-rhs);
        if (!(lhs == rhs)) fail("sign/power identity");
        // recursion, multiplied through by the pseudo-division factor
        if (di >= 1) {
            const Poly<D>& src = s.sresp[static_cast<std::size_t>(i == 1 ? p : s.ndeg[i - 2] - 1)];
            PseudoDivResult<D> pd =
                pseudo_divrem(src.scaled(D(s.tcoef[i] * s.sres[static_cast<std::size_t>(di)])), above);
            Poly<D> lhs2 = s.sresp[static_cast<std::size_t>(di - 1)].scaled(
                D(pd.mult * D(s.tcoef[i - 1] * s.sres[static_cast<std::size_t>(dim1)])));
            if (!(lhs2 + pd.rem).is_zero()) fail("recursion identity");
        }
    }
    // bottom of the sequence: either it reaches degree 0, or everything below
    // the last non-defective index vanishes and that entry divides both inputs
    // over the fraction field.
    const int ds = s.ndeg.back();
    if (ds > 0) {
        for (int j = 0; j < ds; ++j)
            if (!s.sresp[static_cast<std::size_t>(j)].is_zero() ||
                !dom::is_zero(s.sres[static_cast<std::size_t>(j)]))
                fail("tail zeros below d_s");
        const Poly<D>& g = s.sresp[static_cast<std::size_t>(ds)];
        if (!pseudo_divrem(s.p_in, g).rem.is_zero() || !pseudo_divrem(s.q_in, g).rem.is_zero())
            fail("last entry does not divide the inputs");
    }
}

} // namespace rootwind

#endif
