#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <complex>
#include <string>

namespace haarpoly {

using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

/** floor(q) as an exact integer (rounds toward minus infinity). */
Integer rational_floor(const Rational& q);

/** Canonical text form: "3", "-3/4". */
std::string rational_str(const Rational& q);

/** Parse "3", "-3/4", "+1/2". Throws ParseError on anything else. */
Rational parse_rational_str(const std::string& text);

/** Exact element of Q(i). Plain value type; all arithmetic is exact. */
struct GaussianRational {
    Rational re;
    Rational im;

    GaussianRational() : re(0), im(0) {}
    GaussianRational(int v) : re(v), im(0) {}                     // NOLINT(google-explicit-constructor)
    GaussianRational(Rational r) : re(std::move(r)), im(0) {}     // NOLINT(google-explicit-constructor)
    GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

    static GaussianRational i() { return {Rational(0), Rational(1)}; }

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }

    GaussianRational conj() const { return {re, -im}; }

    /** |value|^2 as an exact rational. */
    Rational norm2() const { return re * re + im * im; }

    std::complex<double> to_complex() const {
        return {re.convert_to<double>(), im.convert_to<double>()};
    }

    /** "0", "1/2", "-i", "3/4i", "1/2+3/4i", "2-i". */
    std::string str() const;

    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

    GaussianRational& operator+=(const GaussianRational& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    GaussianRational& operator-=(const GaussianRational& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    GaussianRational& operator*=(const GaussianRational& o) {
        Rational r = re * o.re - im * o.im;
        im = re * o.im + im * o.re;
        re = std::move(r);
        return *this;
    }
    /** Throws DomainError on division by zero. */
    GaussianRational& operator/=(const GaussianRational& o);

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
    friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
    friend GaussianRational operator-(GaussianRational a) {
        a.re = -a.re;
        a.im = -a.im;
        return a;
    }
};

} // namespace haarpoly
