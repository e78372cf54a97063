#include "rootwind/winding.hpp"

#include <algorithm>
#include <utility>

#include "rootwind/cauchy.hpp"
#include "rootwind/errors.hpp"

namespace rootwind {

namespace {

HalfInt edge_index(const UniPoly& re, const UniPoly& im, const Rational& from,
                   const Rational& to) {
    return cauchy_index(re, im, from, to);
}

bool edge_has_zero(const UniPoly& re, const UniPoly& im, const Rational& lo,
                   const Rational& hi) {
    const UniPoly g = gcd_poly(re, im);
    if (g.is_zero()) return true; // both restrictions identically zero
    if (g.degree() == 0) return false;
    return count_real_roots(g, lo, hi) != HalfInt();
}

} // namespace

WindingReport winding_number(const BiPoly& fre, const BiPoly& fim, const Rectangle& g) {
    WindingReport w;
    w.bottom = edge_index(specialize_y(fre, g.y0), specialize_y(fim, g.y0), g.x0, g.x1);
    w.right = edge_index(specialize_x(fre, g.x1), specialize_x(fim, g.x1), g.y0, g.y1);
    w.top = edge_index(specialize_y(fre, g.y1), specialize_y(fim, g.y1), g.x1, g.x0);
    w.left = edge_index(specialize_x(fre, g.x0), specialize_x(fim, g.x0), g.y1, g.y0);
    const HalfInt sum = w.bottom + w.right + w.top + w.left;
    w.value = Rational(sum.twice(), 4);
    w.value.canonicalize();
    w.boundary_vanishes = vanishes_on_boundary(fre, fim, g);
    return w;
}

WindingReport winding_number(const ComplexUniPoly& f, const Rectangle& g) {
    return winding_number(f.re(), f.im(), g);
}

bool vanishes_on_boundary(const BiPoly& fre, const BiPoly& fim, const Rectangle& g) {
    return edge_has_zero(specialize_y(fre, g.y0), specialize_y(fim, g.y0), g.x0, g.x1) ||
           edge_has_zero(specialize_y(fre, g.y1), specialize_y(fim, g.y1), g.x0, g.x1) ||
           edge_has_zero(specialize_x(fre, g.x0), specialize_x(fim, g.x0), g.y0, g.y1) ||
           edge_has_zero(specialize_x(fre, g.x1), specialize_x(fim, g.x1), g.y0, g.y1);
}

bool vanishes_on_boundary(const ComplexUniPoly& f, const Rectangle& g) {
    if (f.is_zero()) throw DomainError(errc::zero_input, "zero vanishes everywhere");
    return vanishes_on_boundary(f.re(), f.im(), g);
}

long count_roots_in_rectangle(const ComplexUniPoly& f, const Rectangle& g) {
    if (f.is_zero() || f.is_constant())
        throw DomainError(errc::constant_input, "root counting needs a nonconstant input");
    if (vanishes_on_boundary(f, g))
        throw DomainError(errc::root_on_boundary, "a root lies on the rectangle boundary");
    const WindingReport w = winding_number(f, g);
    if (!w.is_integer() || w.value < 0 || w.value > Rational(f.degree()))
        throw DomainError(errc::soundness, "winding " + w.value.get_str() +
                                               " is not a root count for degree " +
                                               std::to_string(f.degree()));
    return static_cast<long>(w.value.get_num().get_si());
}

long monomial_count_upto(int d) { return static_cast<long>(d + 1) * (d + 2) / 2; }

namespace {

// Largest rational of the form found by power-of-two bracketing plus two
// bisection steps that is guaranteed <= a^(1/k); exact for k = 1. Any
// positive value below the true root keeps the box inside the zero-free
// region, so a coarse lower approximation is sound.
Rational kth_root_lower(const Rational& a, int k) {
    if (sign_of(a) <= 0) throw std::logic_error("k-th root of a nonpositive value");
    if (k == 1) return a;
    Rational lo, hi;
    if (a >= 1) {
        Rational p(1);
        lo = 1;
        while (true) {
            Rational next = p * 2;
            if (pow_rational(next, k) > a) break;
            p = next;
        }
        lo = p;
        hi = p * 2;
    } else {
        Rational p(1);
        while (pow_rational(p / 2, k) > a) p = p / 2;
        lo = p / 2;
        hi = p;
    }
    for (int step = 0; step < 2; ++step) {
        const Rational mid = (lo + hi) / 2;
        if (pow_rational(mid, k) <= a)
            lo = mid;
        else
            hi = mid;
    }
    return lo;
}

} // namespace

Rational nonvanishing_delta(const BiPoly& fre, const BiPoly& fim, const Rational& x,
                            const Rational& y) {
    const Rational re_v = eval2(fre, x, y), im_v = eval2(fim, x, y);
    const GaussianRational v(re_v, im_v);
    if (v.is_zero()) throw DomainError(errc::point_is_root, "the point is a root");
    // c = i / F(x,y); G = c F has G_im(x,y) = 1 and the same total degree.
    const GaussianRational c = GaussianRational(Rational(0), Rational(1)) * v.inverse();
    const BiPoly gim =
        fim.scaled(UniPoly::constant(c.re)) + fre.scaled(UniPoly::constant(c.im));
    if (gim.is_zero() || (gim.degree() == 0 && gim.coeff(0).is_constant())) return Rational(1);
    int dtot = 0;
    if (!fre.is_zero()) dtot = std::max(dtot, total_degree(fre));
    if (!fim.is_zero()) dtot = std::max(dtot, total_degree(fim));
    const Rational big_delta(monomial_count_upto(dtot));
    const BiPoly taylor = shift_xy(gim, x, y);
    if (!(eval2(taylor, Rational(0), Rational(0)) == Rational(1)))
        throw DomainError(errc::soundness, "normalized imaginary part is not 1 at the point");
    Rational best;
    bool have = false;
    for (int j1 = 0; j1 <= taylor.degree(); ++j1) {
        const UniPoly& col = taylor.coeff(j1);
        if (col.is_zero()) continue;
        for (int j2 = 0; j2 <= col.degree(); ++j2) {
            if (j1 + j2 == 0) continue;
            const Rational cj = col.coeff(j2);
            if (sign_of(cj) == 0) continue;
            const Rational cand = kth_root_lower(Rational(1) / (big_delta * abs_of(cj)), j1 + j2);
            if (!have || cand < best) {
                best = cand;
                have = true;
            }
        }
    }
    if (!have) return Rational(1); // constant normalized imaginary part
    return best;
}

Rational nonvanishing_delta(const ComplexUniPoly& f, const Rational& x, const Rational& y) {
    if (f.is_zero()) throw DomainError(errc::point_is_root, "the zero polynomial is 0 everywhere");
    return nonvanishing_delta(f.re(), f.im(), x, y);
}

Rational sufficient_radius(const ComplexUniPoly& f) {
    if (f.is_zero() || f.is_constant())
        throw DomainError(errc::constant_input, "radius needs a nonconstant input");
    const ComplexUniPoly m = f.scaled(f.leading().inverse());
    Rational top(0);
    for (int j = 0; j < m.degree(); ++j) {
        const GaussianRational cj = m.coeff(j);
        const Rational v = abs_of(cj.re) + abs_of(cj.im);
        if (v > top) top = v;
    }
    return Rational(1) + Rational(2) * top;
}

long count_all_roots(const ComplexUniPoly& f) {
    if (f.is_zero() || f.is_constant())
        throw DomainError(errc::constant_input, "root counting needs a nonconstant input");
    Rational m = sufficient_radius(f);
    for (long k = 0; vanishes_on_boundary(f, Rectangle::square(m)); ++k)
        m = m * (Rational(1) + Rational(1, k + 2));
    const long count = count_roots_in_rectangle(f, Rectangle::square(m));
    if (count != f.degree())
        throw DomainError(errc::soundness, "large-square count " + std::to_string(count) +
                                               " differs from the degree " +
                                               std::to_string(f.degree()));
    return count;
}

namespace {

// True when the vertical line x = c crosses no root of (re, im) with
// y in [ylo, yhi].
bool vertical_line_clear(const BiPoly& re, const BiPoly& im, const Rational& c,
                         const Rational& ylo, const Rational& yhi) {
    const UniPoly g = gcd_poly(specialize_x(re, c), specialize_x(im, c));
    if (g.is_zero()) return false;
    if (g.degree() == 0) return true;
    return count_real_roots(g, ylo, yhi) == HalfInt();
}

bool horizontal_line_clear(const BiPoly& re, const BiPoly& im, const Rational& c,
                           const Rational& xlo, const Rational& xhi) {
    const UniPoly g = gcd_poly(specialize_y(re, c), specialize_y(im, c));
    if (g.is_zero()) return false;
    if (g.degree() == 0) return true;
    return count_real_roots(g, xlo, xhi) == HalfInt();
}

// Deterministic cut coordinate: the midpoint, else nudged by width/8,
// width/16, ... until the cut line avoids all roots. Terminates because the
// candidates are pairwise distinct and the root set is finite.
template <typename Clear>
Rational perturbed_cut(const Rational& lo, const Rational& hi, Clear&& clear) {
    const Rational mid = (lo + hi) / 2;
    if (clear(mid)) return mid;
    Rational bump = (hi - lo) / 8;
    while (true) {
        const Rational cand = mid + bump;
        if (clear(cand)) return cand;
        bump = bump / 2;
    }
}

void subdivide(const ComplexUniPoly& f, const ComplexUniPoly& sf, const Rectangle& cell,
               const Rational& min_width, std::vector<IsolationBox>& out) {
    const WindingReport w = winding_number(sf, cell);
    if (w.value == 0) return;
    const long count = count_roots_in_rectangle(sf, cell);
    if (count == 1 || (cell.width() < min_width && cell.height() < min_width)) {
        IsolationBox box{cell, count_roots_in_rectangle(f, cell), count == 1};
        out.push_back(std::move(box));
        return;
    }
    const Rational cx = perturbed_cut(cell.x0, cell.x1, [&](const Rational& c) {
        return vertical_line_clear(sf.re(), sf.im(), c, cell.y0, cell.y1);
    });
    const Rational cy = perturbed_cut(cell.y0, cell.y1, [&](const Rational& c) {
        return horizontal_line_clear(sf.re(), sf.im(), c, cell.x0, cell.x1);
    });
    subdivide(f, sf, Rectangle(cell.x0, cx, cell.y0, cy), min_width, out);
    subdivide(f, sf, Rectangle(cx, cell.x1, cell.y0, cy), min_width, out);
    subdivide(f, sf, Rectangle(cell.x0, cx, cy, cell.y1), min_width, out);
    subdivide(f, sf, Rectangle(cx, cell.x1, cy, cell.y1), min_width, out);
}

} // namespace

std::vector<IsolationBox> isolate_roots(const ComplexUniPoly& f, const Rectangle& g,
                                        const Rational& min_width) {
    if (f.is_zero() || f.is_constant())
        throw DomainError(errc::constant_input, "isolation needs a nonconstant input");
    if (sign_of(min_width) <= 0) throw std::invalid_argument("min_width must be positive");
    const ComplexUniPoly sf = squarefree_part(f);
    if (vanishes_on_boundary(sf, g))
        throw DomainError(errc::root_on_boundary, "a root lies on the initial boundary");
    std::vector<IsolationBox> out;
    subdivide(f, sf, g, min_width, out);
    std::sort(out.begin(), out.end(), [](const IsolationBox& a, const IsolationBox& b) {
        if (a.box.x0 != b.box.x0) return a.box.x0 < b.box.x0;
        if (a.box.y0 != b.box.y0) return a.box.y0 < b.box.y0;
        if (a.box.x1 != b.box.x1) return a.box.x1 < b.box.x1;
        return a.box.y1 < b.box.y1;
    });
    return out;
}

WellControlledReport is_well_controlled(const BiPoly& fre, const BiPoly& fim) {
    WellControlledReport rep;
    if (fre.is_zero() || fim.is_zero()) return rep;
    if (deg_x(fim) == deg_x(fre) || deg_y(fim) == deg_y(fre)) return rep;
    rep.flag = true;
    // iF has real part -F_im and imaginary part F_re, flipping both comparisons.
    if (deg_x(fim) > deg_x(fre)) {
        rep.fx = RealPair{fre, fim};
        rep.fx_times_i = false;
    } else {
        rep.fx = RealPair{-fim, fre};
        rep.fx_times_i = true;
    }
    if (deg_y(fim) > deg_y(fre)) {
        rep.fy = RealPair{fre, fim};
        rep.fy_times_i = false;
    } else {
        rep.fy = RealPair{-fim, fre};
        rep.fy_times_i = true;
    }
    return rep;
}

WellControlledReport is_well_controlled(const ComplexUniPoly& f) {
    if (f.is_zero()) return WellControlledReport{};
    return is_well_controlled(f.re(), f.im());
}

} // namespace rootwind
