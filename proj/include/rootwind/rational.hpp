#ifndef ROOTWIND_RATIONAL_HPP
#define ROOTWIND_RATIONAL_HPP

#include <gmpxx.h>

#include <string>

#include "rootwind/errors.hpp"

namespace rootwind {

// Exact base-field scalar. GMP keeps mpq_class canonical (gcd(num, den) = 1,
// den > 0) through arithmetic; only string input needs explicit care.
using Rational = mpq_class;
using Integer = mpz_class;

inline int sign_of(const Rational& x) { return sgn(x); }

inline Rational abs_of(const Rational& x) { return sign_of(x) < 0 ? Rational(-x) : x; }

// Accepts optional sign, decimal digits, optional "/denominator". Rejects
// anything else (floats in particular) so no precision is silently lost.
inline Rational parse_rational(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty rational literal");
    std::size_t i = 0;
    if (text[i] == '+' || text[i] == '-') ++i;
    bool digits = false;
    for (; i < text.size() && text[i] >= '0' && text[i] <= '9'; ++i) digits = true;
    if (!digits) throw std::invalid_argument("malformed rational literal: " + text);
    if (i != text.size()) {
        if (text[i] != '/') throw std::invalid_argument("malformed rational literal: " + text);
        ++i;
        bool den_digits = false;
        for (; i < text.size() && text[i] >= '0' && text[i] <= '9'; ++i) den_digits = true;
        if (!den_digits || i != text.size())
            throw std::invalid_argument("malformed rational literal: " + text);
    }
    Rational r;
    if (mpq_set_str(r.get_mpq_t(), text.c_str(), 10) != 0)
        throw std::invalid_argument("malformed rational literal: " + text);
    if (mpz_sgn(mpq_denref(r.get_mpq_t())) == 0)
        throw DomainError(errc::zero_divisor, "zero denominator in: " + text);
    r.canonicalize();
    return r;
}

inline std::string to_string(const Rational& x) { return x.get_str(); }

inline Rational pow_rational(const Rational& x, unsigned long e) {
    Rational r;
    mpz_pow_ui(mpq_numref(r.get_mpq_t()), mpq_numref(x.get_mpq_t()), e);
    mpz_pow_ui(mpq_denref(r.get_mpq_t()), mpq_denref(x.get_mpq_t()), e);
    return r;
}

inline Integer pow_integer(const Integer& x, unsigned long e) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), x.get_mpz_t(), e);
    return r;
}

// Largest bit length among numerator and denominator; 0 for zero.
inline std::size_t bit_length(const Rational& x) {
    if (sign_of(x) == 0) return 0;
    std::size_t n = mpz_sizeinbase(mpq_numref(x.get_mpq_t()), 2);
    std::size_t d = mpz_sizeinbase(mpq_denref(x.get_mpq_t()), 2);
    return n > d ? n : d;
}

} // namespace rootwind

#endif
