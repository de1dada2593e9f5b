#ifndef MATSLOCC_SCALAR_HPP
#define MATSLOCC_SCALAR_HPP

#include <gmpxx.h>
#include <string>

#include "matslocc/errors.hpp"

namespace matslocc {

// Exact rational scalar. mpq_class keeps values canonical (lowest terms,
// positive denominator), which is exactly the invariant we need.
using Rational = mpq_class;
using Integer = mpz_class;

/// Exact complex scalar a + b*i with rational a, b.
struct GaussianRational {
    Rational re;
    Rational im;

    GaussianRational() : re(0), im(0) {}
    GaussianRational(Rational r) : re(std::move(r)), im(0) {}
    GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
    GaussianRational(long r) : re(r), im(0) {}
    GaussianRational(long r, long i) : re(r), im(i) {}

    bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
    bool is_real() const { return sgn(im) == 0; }

    GaussianRational conj() const { return {re, -im}; }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const GaussianRational& a, const GaussianRational& b) {
        return !(a == b);
    }

    GaussianRational operator-() const { return {-re, -im}; }

    friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
        Rational n = b.re * b.re + b.im * b.im;
        if (sgn(n) == 0) throw DomainError("division by zero GaussianRational");
        return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
    }
    GaussianRational& operator+=(const GaussianRational& b) { re += b.re; im += b.im; return *this; }
    GaussianRational& operator-=(const GaussianRational& b) { re -= b.re; im -= b.im; return *this; }
    GaussianRational& operator*=(const GaussianRational& b) { *this = *this * b; return *this; }
    GaussianRational& operator/=(const GaussianRational& b) { *this = *this / b; return *this; }

    GaussianRational inverse() const { return GaussianRational(1) / *this; }
};

inline GaussianRational gr_i() { return {Rational(0), Rational(1)}; }

// Text format: `a/b`, `a/b+c/d*i`, `a/b-c/d*i`; `/1` may be omitted; bare `i`
// accepted. format_scalar(parse_scalar(s)) round-trips values exactly.
std::string format_scalar(const GaussianRational& x);
GaussianRational parse_scalar(const std::string& s);

std::string format_rational(const Rational& x);
Rational parse_rational(const std::string& s);

} // namespace matslocc

#endif
