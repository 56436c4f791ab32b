#pragma once

#include <gmpxx.h>
#include <stdexcept>
#include <string>
#include <string_view>

namespace purefull {

// Exact rational scalars. mpq_class keeps values gcd-reduced as long as all
// manipulation goes through arithmetic operators; the parsing helper below
// canonicalizes explicitly.
using Rational = mpq_class;

inline Rational rational_from_string(std::string_view s) {
    std::string t(s);
    if (t.empty()) throw std::invalid_argument("empty rational literal");
    mpq_class q;
    if (q.set_str(t, 10) != 0)
        throw std::invalid_argument("bad rational literal: " + t);
    q.canonicalize();
    if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + t);
    return q;
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

inline Rational abs(const Rational& q) { return q < 0 ? Rational(-q) : q; }

// Gaussian rationals a + b*i. A field: division goes through the norm.
struct GaussianRational {
    Rational re, im;

    GaussianRational() : re(0), im(0) {}
    GaussianRational(const Rational& r) : re(r), im(0) {}
    GaussianRational(long r) : re(r), im(0) {}
    GaussianRational(const Rational& r, const Rational& i) : re(r), im(i) {}

    static GaussianRational i() { return {Rational(0), Rational(1)}; }

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }

    GaussianRational conj() const { return {re, Rational(-im)}; }
    Rational norm() const { return re * re + im * im; }

    GaussianRational operator-() const { return {Rational(-re), Rational(-im)}; }

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
        re = r;
        return *this;
    }
    GaussianRational& operator/=(const GaussianRational& o) {
        Rational n = o.norm();
        if (n == 0) throw std::domain_error("division by zero Gaussian rational");
        Rational r = (re * o.re + im * o.im) / n;
        im = (im * o.re - re * o.im) / n;
        re = r;
        return *this;
    }

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
    friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }
};

GaussianRational gaussian_from_string(std::string_view s);

// "a/b" for real values, "a/b+c/d i" / "a/b-c/d i" otherwise, "i" shorthands.
std::string to_string(const GaussianRational& z);

} // namespace purefull
