#include "purefull/series.hpp"

#include <sstream>

namespace purefull {

TruncatedSeries TruncatedSeries::t(int order) {
    TruncatedSeries s(order);
    if (order >= 1) s.c_[{1, 0}] = GaussianRational(1);
    return s;
}

TruncatedSeries TruncatedSeries::tbar(int order) {
    TruncatedSeries s(order);
    if (order >= 1) s.c_[{0, 1}] = GaussianRational(1);
    return s;
}

bool TruncatedSeries::is_constant() const {
    return c_.empty() || (c_.size() == 1 && c_.begin()->first == Key{0, 0});
}

GaussianRational TruncatedSeries::coefficient(int j, int k) const {
    auto it = c_.find({j, k});
    return it == c_.end() ? GaussianRational() : it->second;
}

void TruncatedSeries::set(int j, int k, const GaussianRational& v) {
    if (j + k > order_ || v.is_zero())
        c_.erase({j, k});
    else
        c_[{j, k}] = v;
}

TruncatedSeries TruncatedSeries::conj() const {
    TruncatedSeries r(order_);
    for (const auto& [k, v] : c_) r.c_[{k.second, k.first}] = v.conj();
    return r;
}

GaussianRational TruncatedSeries::substitute(const GaussianRational& value) const {
    GaussianRational acc;
    GaussianRational vbar = value.conj();
    for (const auto& [k, v] : c_) {
        GaussianRational term = v;
        for (int a = 0; a < k.first; ++a) term *= value;
        for (int a = 0; a < k.second; ++a) term *= vbar;
        acc += term;
    }
    return acc;
}

TruncatedSeries TruncatedSeries::truncated(int order) const {
    TruncatedSeries r(order);
    for (const auto& [k, v] : c_)
        if (k.first + k.second <= order) r.c_[k] = v;
    return r;
}

TruncatedSeries TruncatedSeries::operator-() const {
    TruncatedSeries r(order_);
    for (const auto& [k, v] : c_) r.c_[k] = -v;
    return r;
}

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
    TruncatedSeries r(std::min(a.order_, b.order_));
    r.c_ = a.c_;
    for (const auto& [k, v] : b.c_) {
        auto it = r.c_.find(k);
        if (it == r.c_.end())
            r.c_[k] = v;
        else {
            it->second += v;
            if (it->second.is_zero()) r.c_.erase(it);
        }
    }
    return r.truncated(r.order_);
}

TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) { return a + (-b); }

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    TruncatedSeries r(std::min(a.order_, b.order_));
    for (const auto& [ka, va] : a.c_)
        for (const auto& [kb, vb] : b.c_) {
            int j = ka.first + kb.first, k = ka.second + kb.second;
            if (j + k > r.order_) continue;
            auto key = TruncatedSeries::Key{j, k};
            auto it = r.c_.find(key);
            if (it == r.c_.end()) {
                GaussianRational p = va * vb;
                if (!p.is_zero()) r.c_[key] = p;
            } else {
                it->second += va * vb;
                if (it->second.is_zero()) r.c_.erase(it);
            }
        }
    return r;
}

std::string to_string(const TruncatedSeries& s) {
    if (s.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, v] : s.terms()) {
        std::string c = to_string(v);
        if (!first) os << " + ";
        first = false;
        if (k.first == 0 && k.second == 0) {
            os << c;
            continue;
        }
        if (c == "1")
            ;
        else if (c == "-1")
            os << "-";
        else
            os << "(" << c << ")*";
        for (int a = 0; a < k.first; ++a) os << "t";
        for (int a = 0; a < k.second; ++a) os << "~t";
    }
    return os.str();
}

} // namespace purefull
