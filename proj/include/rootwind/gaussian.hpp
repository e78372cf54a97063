#ifndef ROOTWIND_GAUSSIAN_HPP
#define ROOTWIND_GAUSSIAN_HPP

#include <utility>

#include "rootwind/poly.hpp"

namespace rootwind {

// Element of Q(i).
struct GaussianRational {
    Rational re;
    Rational im;

    GaussianRational() : re(0), im(0) {}
    GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
    explicit GaussianRational(long r) : re(r), im(0) {}

    bool is_zero() const { return sign_of(re) == 0 && sign_of(im) == 0; }
    bool is_real() const { return sign_of(im) == 0; }

    GaussianRational conj() const { return {re, Rational(-im)}; }

    // |z|^2, exact.
    Rational norm() const { return Rational(re * re + im * im); }

    GaussianRational operator-() const { return {Rational(-re), Rational(-im)}; }

    GaussianRational operator+(const GaussianRational& o) const {
        return {Rational(re + o.re), Rational(im + o.im)};
    }

    GaussianRational operator-(const GaussianRational& o) const {
        return {Rational(re - o.re), Rational(im - o.im)};
    }

    GaussianRational operator*(const GaussianRational& o) const {
        return {Rational(re * o.re - im * o.im), Rational(re * o.im + im * o.re)};
    }

    GaussianRational inverse() const {
        if (is_zero()) throw DomainError(errc::zero_divisor, "inverse of zero");
        Rational n = norm();
        return {Rational(re / n), Rational(-im / n)};
    }

    GaussianRational operator/(const GaussianRational& o) const { return *this * o.inverse(); }

    // i * z.
    GaussianRational times_i() const { return {Rational(-im), re}; }

    bool operator==(const GaussianRational& o) const { return re == o.re && im == o.im; }
    bool operator!=(const GaussianRational& o) const { return !(*this == o); }
};

namespace dom {

template <>
struct Traits<GaussianRational> {
    static GaussianRational zero() { return GaussianRational(); }
    static GaussianRational one() { return GaussianRational(1); }
    static GaussianRational from_int(long v) { return GaussianRational(v); }
    static bool is_zero(const GaussianRational& x) { return x.is_zero(); }
    static GaussianRational exact_div(const GaussianRational& a, const GaussianRational& b) {
        return a / b;
    }
};

} // namespace dom

using GaussPoly = Poly<GaussianRational>;

// F(X + iY) split into real and imaginary parts in Q[Y][X]. Powers of
// (X + iY) accumulate incrementally.
inline std::pair<BiPoly, BiPoly> realify(const GaussPoly& f) {
    BiPoly re, im;
    BiPoly pw_re = BiPoly::constant(UniPoly::constant(Rational(1)));
    BiPoly pw_im;
    const BiPoly x = BiPoly::monomial(UniPoly::constant(Rational(1)), 1);
    const BiPoly y = BiPoly::constant(UniPoly::monomial(Rational(1), 1));
    for (std::size_t j = 0; j < f.coeffs().size(); ++j) {
        const GaussianRational& c = f.coeffs()[j];
        if (!c.is_zero()) {
            re = re + pw_re.scaled(UniPoly::constant(c.re)) - pw_im.scaled(UniPoly::constant(c.im));
            im = im + pw_im.scaled(UniPoly::constant(c.re)) + pw_re.scaled(UniPoly::constant(c.im));
        }
        if (j + 1 < f.coeffs().size()) {
            BiPoly next_re = x * pw_re - y * pw_im;
            BiPoly next_im = x * pw_im + y * pw_re;
            pw_re = std::move(next_re);
            pw_im = std::move(next_im);
        }
    }
    return {re, im};
}

// Polynomial in C[Z] with Gaussian-rational coefficients; the realification
// is computed once at construction and shared by all boundary restrictions.
class ComplexUniPoly {
public:
    ComplexUniPoly() = default;

    explicit ComplexUniPoly(GaussPoly z) : z_(std::move(z)) {
        std::pair<BiPoly, BiPoly> parts = realify(z_);
        re_ = std::move(parts.first);
        im_ = std::move(parts.second);
    }

    explicit ComplexUniPoly(std::vector<GaussianRational> coeffs)
        : ComplexUniPoly(GaussPoly(std::move(coeffs))) {}

    const GaussPoly& zpoly() const { return z_; }
    const BiPoly& re() const { return re_; }
    const BiPoly& im() const { return im_; }

    bool is_zero() const { return z_.is_zero(); }
    bool is_constant() const { return z_.is_constant(); }
    int degree() const { return z_.degree(); }
    const GaussianRational& leading() const { return z_.leading(); }
    GaussianRational coeff(int i) const { return z_.coeff(i); }

    GaussianRational operator()(const GaussianRational& z) const { return z_(z); }

    ComplexUniPoly derivative() const { return ComplexUniPoly(z_.derivative()); }

    ComplexUniPoly operator*(const ComplexUniPoly& o) const {
        return ComplexUniPoly(z_ * o.z_);
    }

    ComplexUniPoly operator+(const ComplexUniPoly& o) const {
        return ComplexUniPoly(z_ + o.z_);
    }

    ComplexUniPoly operator-(const ComplexUniPoly& o) const {
        return ComplexUniPoly(z_ - o.z_);
    }

    ComplexUniPoly scaled(const GaussianRational& s) const { return ComplexUniPoly(z_.scaled(s)); }

    // i * F; realification parts swap as ((iF)_re, (iF)_im) = (-F_im, F_re).
    ComplexUniPoly times_i() const { return scaled(GaussianRational(Rational(0), Rational(1))); }

    bool operator==(const ComplexUniPoly& o) const { return z_ == o.z_; }
    bool operator!=(const ComplexUniPoly& o) const { return z_ != o.z_; }

private:
    GaussPoly z_;
    BiPoly re_;
    BiPoly im_;
};

// Monic F / gcd(F, F'): same roots, all simple.
inline ComplexUniPoly squarefree_part(const ComplexUniPoly& f) {
    if (f.is_zero() || f.is_constant())
        throw DomainError(errc::constant_input, "squarefree part needs a nonconstant input");
    GaussPoly g = gcd_poly(f.zpoly(), f.zpoly().derivative());
    GaussPoly q = divrem(f.zpoly(), g).first;
    return ComplexUniPoly(monic(q));
}

inline std::string to_string(const GaussianRational& z) {
    return "(" + to_string(z.re) + (sign_of(z.im) < 0 ? "" : "+") + to_string(z.im) + "i)";
}

} // namespace rootwind

#endif
