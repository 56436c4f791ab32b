#include "purefull/scalar.hpp"

#include <sstream>

namespace purefull {

namespace {
constexpr int kDefaultOrderForConstants = 1 << 20; // effectively untruncated
}

std::string to_string(const GaussianRational& z) {
    if (z.im == 0) return z.re.get_str();
    std::ostringstream os;
    std::string im = purefull::abs(z.im) == 1 ? "" : purefull::abs(z.im).get_str() + " ";
    if (z.re == 0)
        os << (z.im < 0 ? "-" : "") << im << "i";
    else
        os << z.re.get_str() << (z.im < 0 ? "-" : "+") << im << "i";
    return os.str();
}

GaussianRational gaussian_from_string(std::string_view sv) {
    // Accepts "a/b", "i", "-i", "a/b i", "a/b+c/d i", "a/b-c/d i".
    std::string s(sv);
    std::erase(s, ' ');
    if (s.empty()) throw std::invalid_argument("empty scalar literal");
    auto parse_imag_coeff = [](std::string body) {
        if (body.empty() || body == "+") return Rational(1);
        if (body == "-") return Rational(-1);
        return rational_from_string(body);
    };
    if (s.back() == 'i') {
        std::string body = s.substr(0, s.size() - 1);
        if (!body.empty() && body.back() == '*') body.pop_back();
        // Split at the last top-level +/- that is not a leading sign.
        for (size_t k = body.size(); k-- > 1;) {
            if ((body[k] == '+' || body[k] == '-') && body[k - 1] != '/') {
                Rational re = rational_from_string(body.substr(0, k));
                std::string rest = body.substr(k);
                return GaussianRational(re, parse_imag_coeff(rest));
            }
        }
        return GaussianRational(Rational(0), parse_imag_coeff(body));
    }
    return GaussianRational(rational_from_string(s));
}

void Scalar::assign(const GaussianRational& z) {
    if (z.is_real())
        v_ = z.re;
    else
        v_ = z;
}

void Scalar::assign(const TruncatedSeries& s) {
    if (s.is_constant())
        assign(s.constant_term());
    else
        v_ = s;
}

bool Scalar::is_zero() const {
    if (auto* q = std::get_if<Rational>(&v_)) return *q == 0;
    if (auto* z = std::get_if<GaussianRational>(&v_)) return z->is_zero();
    return std::get<TruncatedSeries>(v_).is_zero();
}

bool Scalar::is_real() const { return conj() == *this; }

const Rational& Scalar::as_rational() const {
    if (auto* q = std::get_if<Rational>(&v_)) return *q;
    throw std::domain_error("scalar is not rational: " + to_string(*this));
}

GaussianRational Scalar::as_gaussian() const {
    if (auto* q = std::get_if<Rational>(&v_)) return GaussianRational(*q);
    if (auto* z = std::get_if<GaussianRational>(&v_)) return *z;
    throw std::domain_error("scalar is a series, not a Gaussian rational: " + to_string(*this));
}

TruncatedSeries Scalar::as_series(int order) const {
    if (auto* s = std::get_if<TruncatedSeries>(&v_)) return s->truncated(std::min(order, s->order()));
    return TruncatedSeries(as_gaussian(), order);
}

Scalar Scalar::conj() const {
    if (auto* q = std::get_if<Rational>(&v_)) return Scalar(*q);
    if (auto* z = std::get_if<GaussianRational>(&v_)) return Scalar(z->conj());
    return Scalar(std::get<TruncatedSeries>(v_).conj());
}

Scalar Scalar::substitute_t(const GaussianRational& value) const {
    if (auto* s = std::get_if<TruncatedSeries>(&v_)) return Scalar(s->substitute(value));
    return *this;
}

Scalar Scalar::imag_part() const {
    Scalar d = *this - conj(); // 2i * imag
    return d / GaussianRational(Rational(0), Rational(2));
}

Scalar Scalar::operator-() const {
    if (auto* q = std::get_if<Rational>(&v_)) return Scalar(Rational(-*q));
    if (auto* z = std::get_if<GaussianRational>(&v_)) return Scalar(-*z);
    return Scalar(-std::get<TruncatedSeries>(v_));
}

namespace {
template <typename Op>
Scalar combine(const Scalar& a, const Scalar& b, Op op) {
    if (a.is_series() || b.is_series()) {
        int order = kDefaultOrderForConstants;
        if (a.is_series()) order = std::min(order, a.as_series(order).order());
        if (b.is_series()) order = std::min(order, b.as_series(order).order());
        return Scalar(op(a.as_series(order), b.as_series(order)));
    }
    if (!a.is_rational() || !b.is_rational()) return Scalar(op(a.as_gaussian(), b.as_gaussian()));
    return Scalar(op(a.as_rational(), b.as_rational()));
}
} // namespace

Scalar& Scalar::operator+=(const Scalar& o) {
    *this = combine(*this, o, [](const auto& x, const auto& y) { return x + y; });
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
    *this = combine(*this, o, [](const auto& x, const auto& y) { return x - y; });
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
    *this = combine(*this, o, [](const auto& x, const auto& y) { return x * y; });
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
    if (o.is_zero()) throw std::domain_error("scalar division by zero");
    GaussianRational d = o.as_gaussian(); // throws for series divisors
    if (auto* s = std::get_if<TruncatedSeries>(&v_)) {
        TruncatedSeries r(s->order());
        GaussianRational inv = GaussianRational(1) / d;
        for (const auto& [k, v] : s->terms()) r.set(k.first, k.second, v * inv);
        assign(r);
        return *this;
    }
    if (is_rational() && d.is_real()) {
        v_ = Rational(as_rational() / d.re);
        return *this;
    }
    assign(as_gaussian() / d);
    return *this;
}

bool operator==(const Scalar& a, const Scalar& b) {
    if (a.is_series() != b.is_series()) return false;
    if (a.is_series()) {
        int order = kDefaultOrderForConstants;
        return a.as_series(order) == b.as_series(order);
    }
    return a.as_gaussian() == b.as_gaussian();
}

std::string to_string(const Scalar& s) {
    if (s.is_series()) return to_string(s.as_series(1 << 20));
    return to_string(s.as_gaussian());
}

} // namespace purefull
