#ifndef ROOTWIND_WINDING_HPP
#define ROOTWIND_WINDING_HPP

#include <vector>

#include "rootwind/gaussian.hpp"
#include "rootwind/halfint.hpp"
#include "rootwind/poly.hpp"

namespace rootwind {

struct Rectangle {
    Rational x0, x1, y0, y1;

    Rectangle(Rational x0_, Rational x1_, Rational y0_, Rational y1_)
        : x0(std::move(x0_)), x1(std::move(x1_)), y0(std::move(y0_)), y1(std::move(y1_)) {
        if (!(x0 < x1) || !(y0 < y1))
            throw std::invalid_argument("rectangle needs x0 < x1 and y0 < y1");
    }
    static Rectangle square(const Rational& m) { return Rectangle(-m, m, -m, m); }

    Rational width() const { return x1 - x0; }
    Rational height() const { return y1 - y0; }
    bool operator==(const Rectangle& o) const {
        return x0 == o.x0 && x1 == o.x1 && y0 == o.y0 && y1 == o.y1;
    }
};

// w(F | boundary) = (1/2)(bottom + right + top + left) where the four terms
// are the Cauchy indices of F_re/F_im restricted to the edges, traversed
// counterclockwise: bottom x0->x1, right y0->y1, top x1->x0, left y1->y0.
// The value is a quarter-integer; it equals the root count only when nothing
// vanishes on the boundary (boundary_vanishes reports that separately).
struct WindingReport {
    Rational value;
    HalfInt bottom, right, top, left;
    bool boundary_vanishes = false;

    bool is_integer() const { return value.get_den() == 1; }
};

WindingReport winding_number(const BiPoly& fre, const BiPoly& fim, const Rectangle& g);
WindingReport winding_number(const ComplexUniPoly& f, const Rectangle& g);

// True iff F has a zero on the closed boundary of g, decided edge by edge
// from the gcd of the two real restrictions (real-closure semantics).
bool vanishes_on_boundary(const BiPoly& fre, const BiPoly& fim, const Rectangle& g);
bool vanishes_on_boundary(const ComplexUniPoly& f, const Rectangle& g);

// Number of roots of f interior to g, counted with multiplicity. Requires a
// root-free boundary (RootOnBoundary) and a nonconstant f (ConstantInput);
// a non-integer or out-of-range winding signals a bug (SoundnessViolation).
long count_roots_in_rectangle(const ComplexUniPoly& f, const Rectangle& g);

// Number of monomials in two variables of total degree <= d.
long monomial_count_upto(int d);

// A positive rational delta such that f has no zero on
// [x-delta, x+delta] x [y-delta, y+delta], from the Taylor coefficients of
// the normalized imaginary part around (x, y). PointIsRoot when f(x,y) = 0.
Rational nonvanishing_delta(const BiPoly& fre, const BiPoly& fim, const Rational& x,
                            const Rational& y);
Rational nonvanishing_delta(const ComplexUniPoly& f, const Rational& x, const Rational& y);

// Rational radius r' with w(f | boundary of [-m,m]^2) = deg f for every
// m >= r': 1 + 2 max(|re|+|im|) over the non-leading monic-normalized
// coefficients. ConstantInput for constants.
Rational sufficient_radius(const ComplexUniPoly& f);

// deg f, established by an actual winding computation on a large square
// (nudged past boundary roots); SoundnessViolation if the count disagrees.
long count_all_roots(const ComplexUniPoly& f);

struct IsolationBox {
    Rectangle box;
    long multiplicity = 0; // roots of f inside, with multiplicity
    bool certified = false; // true: exactly one distinct root; false: cluster below min_width
};

// Disjoint boxes covering every root of f interior to g, by winding-guided
// quadrisection of the squarefree part with deterministic cut perturbation;
// boxes are sorted by (x0, y0, x1, y1). A root on the initial boundary is
// reported as RootOnBoundary.
std::vector<IsolationBox> isolate_roots(const ComplexUniPoly& f, const Rectangle& g,
                                        const Rational& min_width);

struct RealPair {
    BiPoly re, im;
};

// flag: F_re, F_im nonzero with distinct X-degrees and distinct Y-degrees.
// When set, fx is the member of {F, iF} whose imaginary part dominates in X
// (fx_times_i tells which), and fy the one dominating in Y.
struct WellControlledReport {
    bool flag = false;
    bool fx_times_i = false, fy_times_i = false;
    RealPair fx, fy;
};

WellControlledReport is_well_controlled(const BiPoly& fre, const BiPoly& fim);
WellControlledReport is_well_controlled(const ComplexUniPoly& f);

} // namespace rootwind

#endif
