#pragma once

#include <variant>

#include "purefull/rational.hpp"
#include "purefull/series.hpp"

namespace purefull {

// One exact scalar value in the three-storey tower
//   rational  <  Gaussian rational  <  truncated series in t, tbar.
// Binary operations promote to the higher tower; results are demoted back to
// the lowest tower able to represent them, so equality is tower-independent.
// No rounding ever occurs.
class Scalar {
public:
    Scalar() : v_(Rational(0)) {}
    Scalar(long n) : v_(Rational(n)) {}
    Scalar(int n) : v_(Rational(n)) {}
    Scalar(const Rational& q) : v_(q) {}
    Scalar(const GaussianRational& z) { assign(z); }
    Scalar(const TruncatedSeries& s) { assign(s); }

    static Scalar i() { return Scalar(GaussianRational::i()); }
    static Scalar t(int order) { return Scalar(TruncatedSeries::t(order)); }
    static Scalar tbar(int order) { return Scalar(TruncatedSeries::tbar(order)); }

    bool is_rational() const { return std::holds_alternative<Rational>(v_); }
    bool is_gaussian() const { return !std::holds_alternative<TruncatedSeries>(v_); }
    bool is_series() const { return std::holds_alternative<TruncatedSeries>(v_); }

    bool is_zero() const;
    bool is_real() const;

    // Throwing views into the lower towers.
    const Rational& as_rational() const;
    GaussianRational as_gaussian() const;
    TruncatedSeries as_series(int order) const;

    Scalar conj() const;
    // Collapses any series by the substitution t := value, tbar := conj(value).
    Scalar substitute_t(const GaussianRational& value) const;
    Scalar real_part() const { return (*this + conj()) / Rational(2); }
    Scalar imag_part() const;

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    // Division by a (nonzero) rational or Gaussian scalar; series divisors
    // are rejected.
    Scalar& operator/=(const Scalar& o);

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
    friend bool operator==(const Scalar& a, const Scalar& b);
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

private:
    void assign(const GaussianRational& z);
    void assign(const TruncatedSeries& s);
    std::variant<Rational, GaussianRational, TruncatedSeries> v_;
};

std::string to_string(const Scalar& s);

} // namespace purefull
