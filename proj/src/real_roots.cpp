#include "rootwind/real_roots.hpp"

#include <utility>

#include "rootwind/errors.hpp"

namespace rootwind {

int descartes_variations(const UniPoly& p) {
    if (p.is_zero()) return 0;
    int var = 0, last = 0;
    for (int i = 0; i <= p.degree(); ++i) {
        const int s = sign_of(p.coeff(i));
        if (s == 0) continue;
        if (last != 0 && s != last) ++var;
        last = s;
    }
    return var;
}

namespace {

// x^n p(1/x) for n = deg p; degree stays n exactly when p(0) != 0.
UniPoly reverse_coeffs(const UniPoly& p) {
    std::vector<Rational> c(p.coeffs().rbegin(), p.coeffs().rend());
    return UniPoly(std::move(c));
}

// Upper bound for the number of roots of w in the open interval (u, v):
// variations of (X+1)^n A(1/(X+1)) with A = w((v-u)X + u). Zero and one are
// exact counts. Requires w(u) != 0 != w(v).
int interval_variations(const UniPoly& w, const Rational& u, const Rational& v) {
    UniPoly a = affine_compose(w, v - u, u);
    return descartes_variations(affine_compose(reverse_coeffs(a), Rational(1), Rational(1)));
}

void strip_root(UniPoly& w, const Rational& r) {
    UniPoly lin(std::vector<Rational>{-r, Rational(1)});
    auto d = divrem(w, lin);
    if (!d.second.is_zero()) throw std::logic_error("deflation of a non-root");
    w = std::move(d.first);
}

// Bisection with the invariant w(u) != 0 != w(v); w shrinks in place when a
// split point happens to be a root (w stays squarefree throughout).
void recurse(UniPoly& w, const Rational& u, const Rational& v, std::vector<RootBracket>& out) {
    if (w.degree() == 0) return;
    const int var = interval_variations(w, u, v);
    if (var == 0) return;
    if (var == 1) {
        out.push_back(RootBracket{u, v});
        return;
    }
    const Rational m = (u + v) / 2;
    if (sign_of(w(m)) == 0) {
        strip_root(w, m);
        recurse(w, u, m, out);
        out.push_back(RootBracket{m, m});
        recurse(w, m, v, out);
    } else {
        recurse(w, u, m, out);
        recurse(w, m, v, out);
    }
}

} // namespace

std::vector<RootBracket> isolate_real_roots(const UniPoly& P, const Rational& a,
                                            const Rational& b) {
    if (P.is_zero()) throw DomainError(errc::zero_input, "cannot isolate roots of 0");
    if (!(a < b)) return {};
    const UniPoly w0 = squarefree_part(P);
    if (w0.degree() == 0) return {};
    UniPoly w = w0;
    if (sign_of(w(a)) == 0) strip_root(w, a);
    if (w.degree() > 0 && sign_of(w(b)) == 0) strip_root(w, b);
    std::vector<RootBracket> out;
    recurse(w, a, b, out);
    // Open brackets may touch a point where the full squarefree part (though
    // not the current w) vanishes: a deflated rational root or a root at an
    // original endpoint. Push such endpoints off the roots by bisecting with
    // w, whose sign still flips exactly once across the bracket.
    for (RootBracket& br : out) {
        if (br.exact()) continue;
        while (sign_of(w0(br.lo)) == 0 || sign_of(w0(br.hi)) == 0) {
            const Rational m = (br.lo + br.hi) / 2;
            if (sign_of(w(m)) == 0) {
                br.lo = br.hi = m; // the bracketed root itself is rational
                break;
            }
            if (sign_of(w(m)) == sign_of(w(br.lo)))
                br.lo = m;
            else
                br.hi = m;
        }
    }
    return out;
}

} // namespace rootwind
