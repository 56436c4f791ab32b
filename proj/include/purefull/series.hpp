#pragma once

#include <map>
#include <utility>

#include "purefull/rational.hpp"

namespace purefull {

// Truncated power series in a formal deformation parameter t and its
// conjugate tbar, with Gaussian-rational coefficients. All terms of total
// order > order() are discarded; the truncation order is carried along and
// binary operations truncate to the smaller of the two.
//
// Equality compares the stored polynomial data only, not the truncation
// order; two series with the same surviving terms are equal.
class TruncatedSeries {
public:
    using Key = std::pair<int, int>; // (power of t, power of tbar)

    explicit TruncatedSeries(int order) : order_(order) {}
    TruncatedSeries(const GaussianRational& c, int order) : order_(order) {
        if (!c.is_zero()) c_[{0, 0}] = c;
    }

    static TruncatedSeries t(int order);
    static TruncatedSeries tbar(int order);

    int order() const { return order_; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const;
    GaussianRational coefficient(int j, int k) const;
    GaussianRational constant_term() const { return coefficient(0, 0); }
    const std::map<Key, GaussianRational>& terms() const { return c_; }

    TruncatedSeries conj() const;
    // Substitutes t := value and tbar := conj(value); exact.
    GaussianRational substitute(const GaussianRational& value) const;
    TruncatedSeries truncated(int order) const;

    TruncatedSeries operator-() const;
    friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
    friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b);
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) { return a.c_ == b.c_; }
    friend bool operator!=(const TruncatedSeries& a, const TruncatedSeries& b) { return !(a == b); }

    void set(int j, int k, const GaussianRational& v);

private:
    int order_;
    std::map<Key, GaussianRational> c_; // zero coefficients never stored
};

std::string to_string(const TruncatedSeries& s);

} // namespace purefull
