#ifndef ROOTWIND_POLY_HPP
#define ROOTWIND_POLY_HPP

#include <string>
#include <utility>
#include <vector>

#include "rootwind/errors.hpp"
#include "rootwind/rational.hpp"

namespace rootwind {

template <typename T>
class Poly;

// Coefficient-domain operations needed by the generic polynomial layers.
// Instantiated for Rational (field), Poly<Rational> (integral domain) and
// GaussianRational (field, defined in gaussian.hpp).
namespace dom {

template <typename T>
struct Traits;

template <>
struct Traits<Rational> {
    static Rational zero() { return Rational(0); }
    static Rational one() { return Rational(1); }
    static Rational from_int(long v) { return Rational(v); }
    static bool is_zero(const Rational& x) { return sign_of(x) == 0; }
    // Field division; exactness is automatic.
    static Rational exact_div(const Rational& a, const Rational& b) {
        if (is_zero(b)) throw DomainError(errc::zero_divisor, "division by zero scalar");
        return Rational(a / b);
    }
};

template <typename T>
T zero() { return Traits<T>::zero(); }
template <typename T>
T one() { return Traits<T>::one(); }
template <typename T>
bool is_zero(const T& x) { return Traits<T>::is_zero(x); }
template <typename T>
T exact_div(const T& a, const T& b) { return Traits<T>::exact_div(a, b); }

} // namespace dom

// Dense univariate polynomial over T, coefficients ascending, trailing zeros
// stripped. The zero polynomial has no degree: degree() on it throws instead
// of returning a sentinel that could silently enter arithmetic.
template <typename T>
class Poly {
public:
    Poly() = default;

    explicit Poly(std::vector<T> coeffs) : c_(std::move(coeffs)) { normalize(); }

    static Poly constant(T v) {
        std::vector<T> c;
        c.push_back(std::move(v));
        return Poly(std::move(c));
    }

    static Poly variable() { return monomial(dom::one<T>(), 1); }

    static Poly monomial(T coeff, int k) {
        std::vector<T> c(static_cast<std::size_t>(k) + 1, dom::zero<T>());
        c[static_cast<std::size_t>(k)] = std::move(coeff);
        return Poly(std::move(c));
    }

    bool is_zero() const { return c_.empty(); }

    bool is_constant() const { return c_.size() <= 1; }

    int degree() const {
        if (c_.empty()) throw std::logic_error("degree of the zero polynomial is undefined");
        return static_cast<int>(c_.size()) - 1;
    }

    const T& leading() const {
        if (c_.empty()) throw std::logic_error("leading coefficient of the zero polynomial");
        return c_.back();
    }

    T coeff(int i) const {
        if (i < 0 || static_cast<std::size_t>(i) >= c_.size()) return dom::zero<T>();
        return c_[static_cast<std::size_t>(i)];
    }

    const std::vector<T>& coeffs() const { return c_; }

    bool operator==(const Poly& o) const { return c_ == o.c_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    Poly operator-() const {
        std::vector<T> c;
        c.reserve(c_.size());
        for (const T& x : c_) c.push_back(T(-x));
        return Poly(std::move(c));
    }

    Poly operator+(const Poly& o) const {
        std::vector<T> c(std::max(c_.size(), o.c_.size()), dom::zero<T>());
        for (std::size_t i = 0; i < c_.size(); ++i) c[i] = c_[i];
        for (std::size_t i = 0; i < o.c_.size(); ++i) c[i] = T(c[i] + o.c_[i]);
        return Poly(std::move(c));
    }

    Poly operator-(const Poly& o) const { return *this + (-o); }

    Poly operator*(const Poly& o) const {
        if (is_zero() || o.is_zero()) return Poly();
        std::vector<T> c(c_.size() + o.c_.size() - 1, dom::zero<T>());
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (dom::is_zero(c_[i])) continue;
            for (std::size_t j = 0; j < o.c_.size(); ++j)
                c[i + j] = T(c[i + j] + c_[i] * o.c_[j]);
        }
        return Poly(std::move(c));
    }

    // Multiplication by a domain scalar.
    Poly scaled(const T& s) const {
        if (dom::is_zero(s)) return Poly();
        std::vector<T> c;
        c.reserve(c_.size());
        for (const T& x : c_) c.push_back(T(x * s));
        return Poly(std::move(c));
    }

    // Multiplication by X^k.
    Poly shifted_up(int k) const {
        if (is_zero() || k == 0) return *this;
        std::vector<T> c(c_.size() + static_cast<std::size_t>(k), dom::zero<T>());
        for (std::size_t i = 0; i < c_.size(); ++i) c[i + static_cast<std::size_t>(k)] = c_[i];
        return Poly(std::move(c));
    }

    Poly derivative() const {
        if (c_.size() <= 1) return Poly();
        std::vector<T> c;
        c.reserve(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i)
            c.push_back(T(c_[i] * dom::Traits<T>::from_int(static_cast<long>(i))));
        return Poly(std::move(c));
    }

    // Horner evaluation at a domain point.
    T operator()(const T& x) const {
        T acc = dom::zero<T>();
        for (std::size_t i = c_.size(); i-- > 0;) acc = T(acc * x + c_[i]);
        return acc;
    }

private:
    void normalize() {
        while (!c_.empty() && dom::is_zero(c_.back())) c_.pop_back();
    }

    std::vector<T> c_;
};

namespace dom {

// Poly<T> over an integral domain T is again an integral domain; exact_div
// (used by fraction-free elimination) divides with remainder and insists the
// remainder vanish.
template <typename T>
struct Traits<Poly<T>> {
    static Poly<T> zero() { return Poly<T>(); }
    static Poly<T> one() { return Poly<T>::constant(dom::one<T>()); }
    static Poly<T> from_int(long v) { return Poly<T>::constant(Traits<T>::from_int(v)); }
    static bool is_zero(const Poly<T>& x) { return x.is_zero(); }
    static Poly<T> exact_div(const Poly<T>& a, const Poly<T>& b);
};

} // namespace dom

using UniPoly = Poly<Rational>;
// Elements of Q[Y][X]: outer variable X, inner coefficients are polynomials
// in Y. All bivariate code in this project uses that orientation.
using BiPoly = Poly<UniPoly>;

// Euclidean division over a field domain.
template <typename T>
std::pair<Poly<T>, Poly<T>> divrem(const Poly<T>& n, const Poly<T>& d) {
    if (d.is_zero()) throw DomainError(errc::zero_divisor, "division by the zero polynomial");
    if (n.is_zero() || n.degree() < d.degree()) return {Poly<T>(), n};
    std::vector<T> rem(n.coeffs());
    int dn = n.degree(), dd = d.degree();
    std::vector<T> quot(static_cast<std::size_t>(dn - dd) + 1, dom::zero<T>());
    const T& lead = d.leading();
    for (int k = dn; k >= dd; --k) {
        T c = rem[static_cast<std::size_t>(k)];
        if (dom::is_zero(c)) continue;
        T q = dom::exact_div(c, lead);
        quot[static_cast<std::size_t>(k - dd)] = q;
        for (int j = 0; j <= dd; ++j)
            rem[static_cast<std::size_t>(k - dd + j)] =
                T(rem[static_cast<std::size_t>(k - dd + j)] - q * d.coeff(j));
    }
    rem.resize(static_cast<std::size_t>(dd));
    return {Poly<T>(std::move(quot)), Poly<T>(std::move(rem))};
}

template <typename T>
struct PseudoDivResult {
    Poly<T> quot;
    Poly<T> rem;
    T mult;
};

// Fraction-free division: returns quot, rem and mult = lc(d)^steps with
// mult * n = quot * d + rem, deg rem < deg d. Valid over any integral domain.
template <typename T>
PseudoDivResult<T> pseudo_divrem(const Poly<T>& n, const Poly<T>& d) {
    if (d.is_zero()) throw DomainError(errc::zero_divisor, "pseudo-division by zero");
    PseudoDivResult<T> out{Poly<T>(), n, dom::one<T>()};
    if (n.is_zero() || n.degree() < d.degree()) return out;
    const T& lead = d.leading();
    int dd = d.degree();
    while (!out.rem.is_zero() && out.rem.degree() >= dd) {
        int k = out.rem.degree() - dd;
        T c = out.rem.leading();
        out.quot = out.quot.scaled(lead) + Poly<T>::monomial(c, k);
        out.rem = out.rem.scaled(lead) - d.scaled(c).shifted_up(k);
        out.mult = T(out.mult * lead);
        if (!out.rem.is_zero() && out.rem.degree() >= dd + k)
            throw std::logic_error("pseudo-division failed to reduce the degree");
    }
    return out;
}

template <typename T>
Poly<T> dom::Traits<Poly<T>>::exact_div(const Poly<T>& a, const Poly<T>& b) {
    if (b.is_zero()) throw DomainError(errc::zero_divisor, "exact division by zero polynomial");
    if (a.is_zero()) return Poly<T>();
    PseudoDivResult<T> d = pseudo_divrem(a, b);
    if (!d.rem.is_zero())
        throw DomainError(errc::structure_violation, "inexact polynomial division");
    // a = (quot / mult) * b; every quotient coefficient must divide exactly.
    std::vector<T> c;
    c.reserve(static_cast<std::size_t>(d.quot.degree()) + 1);
    for (int i = 0; i <= d.quot.degree(); ++i)
        c.push_back(dom::exact_div(d.quot.coeff(i), d.mult));
    return Poly<T>(std::move(c));
}

template <typename T>
Poly<T> monic(const Poly<T>& p) {
    if (p.is_zero()) return p;
    return p.scaled(dom::exact_div(dom::one<T>(), p.leading()));
}

// Monic gcd over a field domain; gcd(p, 0) = monic(p), gcd(0, 0) = 0.
template <typename T>
Poly<T> gcd_poly(Poly<T> a, Poly<T> b) {
    while (!b.is_zero()) {
        Poly<T> r = divrem(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return monic(a);
}

template <typename T>
bool divides_exactly(const Poly<T>& d, const Poly<T>& n) {
    if (n.is_zero()) return true;
    if (d.is_zero()) return false;
    return divrem(n, d).second.is_zero();
}

// Monic polynomial with the same roots, multiplicities dropped: p / gcd(p, p').
template <typename T>
Poly<T> squarefree_part(const Poly<T>& p) {
    if (p.is_zero() || p.degree() == 0) return monic(p);
    Poly<T> g = gcd_poly(p, p.derivative());
    return monic(divrem(p, g).first);
}

// p(c*X + e) by Horner; degree is preserved when c != 0.
inline UniPoly affine_compose(const UniPoly& p, const Rational& c, const Rational& e) {
    UniPoly lin(std::vector<Rational>{e, c});
    UniPoly acc;
    for (int i = p.is_zero() ? -1 : p.degree(); i >= 0; --i)
        acc = acc * lin + UniPoly::constant(p.coeff(i));
    return acc;
}

inline Rational eval(const UniPoly& p, const Rational& x) { return p(x); }

// --- Q[Y][X] helpers -------------------------------------------------------

inline int deg_x(const BiPoly& b) { return b.degree(); }

inline int deg_y(const BiPoly& b) {
    int d = -1;
    for (const UniPoly& c : b.coeffs())
        if (!c.is_zero() && c.degree() > d) d = c.degree();
    if (d < 0) throw std::logic_error("deg_y of a zero polynomial");
    return d;
}

inline int total_degree(const BiPoly& b) {
    if (b.is_zero()) throw std::logic_error("total degree of a zero polynomial");
    int d = 0;
    const std::vector<UniPoly>& cs = b.coeffs();
    for (std::size_t i = 0; i < cs.size(); ++i) {
        if (cs[i].is_zero()) continue;
        int t = static_cast<int>(i) + cs[i].degree();
        if (t > d) d = t;
    }
    return d;
}

// Substitute X = x, leaving a polynomial in Y.
inline UniPoly specialize_x(const BiPoly& b, const Rational& x) {
    UniPoly acc;
    for (int i = b.is_zero() ? -1 : b.degree(); i >= 0; --i)
        acc = acc.scaled(x) + b.coeff(i);
    return acc;
}

// Substitute Y = y, leaving a polynomial in X.
inline UniPoly specialize_y(const BiPoly& b, const Rational& y) {
    std::vector<Rational> c;
    c.reserve(b.coeffs().size());
    for (const UniPoly& inner : b.coeffs()) c.push_back(inner(y));
    return UniPoly(std::move(c));
}

inline Rational eval2(const BiPoly& b, const Rational& x, const Rational& y) {
    return specialize_x(b, x)(y);
}

// G(X + x, Y + y): inner shift per coefficient, then outer Horner against
// (X + x) with polynomial coefficients.
inline BiPoly shift_xy(const BiPoly& b, const Rational& x, const Rational& y) {
    BiPoly lin(std::vector<UniPoly>{UniPoly::constant(x), UniPoly::constant(Rational(1))});
    BiPoly acc;
    for (int i = b.is_zero() ? -1 : b.degree(); i >= 0; --i)
        acc = acc * lin + BiPoly::constant(affine_compose(b.coeff(i), Rational(1), y));
    return acc;
}

// Gcd of the Y-coefficients; zero for the zero polynomial.
inline UniPoly content_y(const BiPoly& b) {
    UniPoly g;
    for (const UniPoly& c : b.coeffs()) g = gcd_poly(g, c);
    return g;
}

inline BiPoly bipoly_from_x(const UniPoly& p) {
    std::vector<UniPoly> c;
    c.reserve(p.coeffs().size());
    for (const Rational& r : p.coeffs()) c.push_back(UniPoly::constant(r));
    return BiPoly(std::move(c));
}

inline BiPoly bipoly_from_y(const UniPoly& p) {
    return BiPoly::constant(p);
}

// --- printing (traces, error messages, table output) -----------------------

inline std::string poly_to_string(const UniPoly& p, const std::string& var = "X") {
    if (p.is_zero()) return "0";
    std::string out;
    for (int i = p.degree(); i >= 0; --i) {
        Rational c = p.coeff(i);
        if (sign_of(c) == 0) continue;
        if (!out.empty()) out += sign_of(c) > 0 ? " + " : " - ";
        else if (sign_of(c) < 0) out += "-";
        Rational a = abs_of(c);
        bool unit = a == 1;
        if (i == 0 || !unit) out += to_string(a);
        if (i > 0) {
            if (!unit) out += "*";
            out += var;
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

inline std::string poly_to_string(const BiPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (int i = p.degree(); i >= 0; --i) {
        UniPoly c = p.coeff(i);
        if (c.is_zero()) continue;
        if (!out.empty()) out += " + ";
        out += "(" + poly_to_string(c, "Y") + ")";
        if (i > 0) {
            out += "*X";
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

} // namespace rootwind

#endif
