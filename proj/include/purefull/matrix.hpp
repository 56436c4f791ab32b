#pragma once

#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <utility>
#include <vector>

namespace purefull {

// Dense matrix over an exact scalar ring. Row-major.
template <typename T>
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), d_(rows * cols) {}
    Matrix(std::size_t rows, std::size_t cols, std::initializer_list<T> init)
        : rows_(rows), cols_(cols), d_(init) {
        if (d_.size() != rows * cols) throw std::invalid_argument("matrix initializer size mismatch");
    }

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    T& operator()(std::size_t r, std::size_t c) { return d_[r * cols_ + c]; }
    const T& operator()(std::size_t r, std::size_t c) const { return d_[r * cols_ + c]; }

    Matrix transpose() const {
        Matrix m(cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c) m(c, r) = (*this)(r, c);
        return m;
    }

    template <typename F>
    auto map(F f) const -> Matrix<decltype(f(std::declval<const T&>()))> {
        Matrix<decltype(f(std::declval<const T&>()))> m(rows_, cols_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c) m(r, c) = f((*this)(r, c));
        return m;
    }

    friend Matrix operator+(const Matrix& a, const Matrix& b) {
        check_same(a, b);
        Matrix m(a.rows_, a.cols_);
        for (std::size_t k = 0; k < a.d_.size(); ++k) m.d_[k] = a.d_[k] + b.d_[k];
        return m;
    }
    friend Matrix operator-(const Matrix& a, const Matrix& b) {
        check_same(a, b);
        Matrix m(a.rows_, a.cols_);
        for (std::size_t k = 0; k < a.d_.size(); ++k) m.d_[k] = a.d_[k] - b.d_[k];
        return m;
    }
    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product shape mismatch");
        Matrix m(a.rows_, b.cols_);
        for (std::size_t r = 0; r < a.rows_; ++r)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const T& x = a(r, k);
                if (x == T(0)) continue;
                for (std::size_t c = 0; c < b.cols_; ++c) m(r, c) += x * b(k, c);
            }
        return m;
    }
    friend Matrix operator*(const T& s, const Matrix& a) {
        Matrix m(a.rows_, a.cols_);
        for (std::size_t k = 0; k < a.d_.size(); ++k) m.d_[k] = s * a.d_[k];
        return m;
    }
    Matrix operator-() const {
        Matrix m(rows_, cols_);
        for (std::size_t k = 0; k < d_.size(); ++k) m.d_[k] = -d_[k];
        return m;
    }

    std::vector<T> apply(const std::vector<T>& v) const {
        if (v.size() != cols_) throw std::invalid_argument("matrix apply shape mismatch");
        std::vector<T> out(rows_, T(0));
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c)
                if (!((*this)(r, c) == T(0))) out[r] += (*this)(r, c) * v[c];
        return out;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.d_ == b.d_;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    bool is_zero() const {
        for (const auto& x : d_)
            if (!(x == T(0))) return false;
        return true;
    }

private:
    static void check_same(const Matrix& a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            throw std::invalid_argument("matrix shape mismatch");
    }
    std::size_t rows_, cols_;
    std::vector<T> d_;
};

} // namespace purefull
