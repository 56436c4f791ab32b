#pragma once

#include <optional>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "purefull/matrix.hpp"

namespace purefull {

// Exact Gauss-Jordan elimination over a field (Rational or GaussianRational).
//
// The reduced row echelon form is canonical, so the serial reference and the
// OpenMP elimination produce identical matrices; tests compare them and
// tools/bench_linalg.cpp measures them against each other. Pivoting is
// deterministic: first nonzero entry scanning rows top-down, columns
// left-to-right.

enum class ExecPolicy { Serial, Parallel, Auto };

namespace detail {
inline bool use_parallel(ExecPolicy p, std::size_t rows, std::size_t cols) {
#ifdef _OPENMP
    if (p == ExecPolicy::Serial) return false;
    if (p == ExecPolicy::Parallel) return true;
    return rows >= 48 && cols >= 24 && omp_get_max_threads() > 1;
#else
    (void)p;
    (void)rows;
    (void)cols;
    return false;
#endif
}
} // namespace detail

template <typename T>
struct RrefResult {
    Matrix<T> m;
    std::vector<std::size_t> pivot_cols; // one per pivot row, increasing
    std::size_t rank() const { return pivot_cols.size(); }
};

template <typename T>
RrefResult<T> rref_serial(Matrix<T> m) {
    RrefResult<T> res{std::move(m), {}};
    Matrix<T>& a = res.m;
    std::size_t lead = 0;
    for (std::size_t col = 0; col < a.cols() && lead < a.rows(); ++col) {
        std::size_t piv = lead;
        while (piv < a.rows() && a(piv, col) == T(0)) ++piv;
        if (piv == a.rows()) continue;
        if (piv != lead)
            for (std::size_t c = col; c < a.cols(); ++c) std::swap(a(piv, c), a(lead, c));
        T inv = T(1) / a(lead, col);
        for (std::size_t c = col; c < a.cols(); ++c) a(lead, c) = a(lead, c) * inv;
        for (std::size_t r = 0; r < a.rows(); ++r) {
            if (r == lead || a(r, col) == T(0)) continue;
            T f = a(r, col);
            for (std::size_t c = col; c < a.cols(); ++c) a(r, c) = a(r, c) - f * a(lead, c);
        }
        res.pivot_cols.push_back(col);
        ++lead;
    }
    return res;
}

template <typename T>
RrefResult<T> rref_parallel(Matrix<T> m) {
    RrefResult<T> res{std::move(m), {}};
    Matrix<T>& a = res.m;
    std::size_t lead = 0;
    for (std::size_t col = 0; col < a.cols() && lead < a.rows(); ++col) {
        std::size_t piv = lead;
        while (piv < a.rows() && a(piv, col) == T(0)) ++piv;
        if (piv == a.rows()) continue;
        if (piv != lead)
            for (std::size_t c = col; c < a.cols(); ++c) std::swap(a(piv, c), a(lead, c));
        T inv = T(1) / a(lead, col);
        for (std::size_t c = col; c < a.cols(); ++c) a(lead, c) = a(lead, c) * inv;
        // Rows are independent once the pivot row is normalized.
        const std::size_t nrows = a.rows();
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 8)
#endif
        for (std::size_t r = 0; r < nrows; ++r) {
            if (r == lead || a(r, col) == T(0)) continue;
            T f = a(r, col);
            for (std::size_t c = col; c < a.cols(); ++c) a(r, c) = a(r, c) - f * a(lead, c);
        }
        res.pivot_cols.push_back(col);
        ++lead;
    }
    return res;
}

template <typename T>
RrefResult<T> rref(Matrix<T> m, ExecPolicy policy = ExecPolicy::Auto) {
    if (detail::use_parallel(policy, m.rows(), m.cols())) return rref_parallel(std::move(m));
    return rref_serial(std::move(m));
}

template <typename T>
std::size_t rank(const Matrix<T>& m, ExecPolicy policy = ExecPolicy::Auto) {
    return rref(m, policy).rank();
}

// Canonical basis of the right null space {x : A x = 0}, one vector per free
// column, in increasing free-column order.
template <typename T>
std::vector<std::vector<T>> kernel_basis(const Matrix<T>& a, ExecPolicy policy = ExecPolicy::Auto) {
    RrefResult<T> r = rref(a, policy);
    std::vector<bool> is_pivot(a.cols(), false);
    for (auto c : r.pivot_cols) is_pivot[c] = true;
    std::vector<std::vector<T>> basis;
    for (std::size_t f = 0; f < a.cols(); ++f) {
        if (is_pivot[f]) continue;
        std::vector<T> v(a.cols(), T(0));
        v[f] = T(1);
        for (std::size_t row = 0; row < r.pivot_cols.size(); ++row)
            v[r.pivot_cols[row]] = -r.m(row, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

// Solves A x = b. On success, the canonical particular solution (free
// variables zero). On failure, a certificate functional f with f^T A = 0 and
// f^T b = 1, extracted from the recorded row operations.
template <typename T>
struct SolveOutcome {
    std::optional<std::vector<T>> solution;
    std::vector<T> certificate; // empty when solvable
};

template <typename T>
SolveOutcome<T> solve_with_certificate(const Matrix<T>& a, const std::vector<T>& b,
                                       ExecPolicy policy = ExecPolicy::Auto) {
    if (b.size() != a.rows()) throw std::invalid_argument("solve shape mismatch");
    // Augment with b and with the identity to track row operations.
    Matrix<T> aug(a.rows(), a.cols() + 1 + a.rows());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c) aug(r, c) = a(r, c);
        aug(r, a.cols()) = b[r];
        aug(r, a.cols() + 1 + r) = T(1);
    }
    // Restrict pivot search to the [A | b] block.
    RrefResult<T> res{std::move(aug), {}};
    Matrix<T>& m = res.m;
    std::size_t lead = 0;
    for (std::size_t col = 0; col < a.cols() + 1 && lead < m.rows(); ++col) {
        std::size_t piv = lead;
        while (piv < m.rows() && m(piv, col) == T(0)) ++piv;
        if (piv == m.rows()) continue;
        if (piv != lead)
            for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(piv, c), m(lead, c));
        T inv = T(1) / m(lead, col);
        for (std::size_t c = 0; c < m.cols(); ++c) m(lead, c) = m(lead, c) * inv;
        const std::size_t nrows = m.rows();
        const bool par = detail::use_parallel(policy, nrows, m.cols());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 8) if (par)
#else
        (void)par;
#endif
        for (std::size_t r = 0; r < nrows; ++r) {
            if (r == lead || m(r, col) == T(0)) continue;
            T f = m(r, col);
            for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = m(r, c) - f * m(lead, c);
        }
        res.pivot_cols.push_back(col);
        ++lead;
    }
    SolveOutcome<T> out;
    for (std::size_t row = 0; row < res.pivot_cols.size(); ++row) {
        if (res.pivot_cols[row] == a.cols()) {
            // Inconsistent: this row reads 0 = 1; its recorded combination of
            // the original rows is the certificate.
            out.certificate.resize(a.rows());
            for (std::size_t r = 0; r < a.rows(); ++r)
                out.certificate[r] = m(row, a.cols() + 1 + r);
            return out;
        }
    }
    std::vector<T> x(a.cols(), T(0));
    for (std::size_t row = 0; row < res.pivot_cols.size(); ++row)
        x[res.pivot_cols[row]] = m(row, a.cols());
    out.solution = std::move(x);
    return out;
}

template <typename T>
std::optional<std::vector<T>> solve(const Matrix<T>& a, const std::vector<T>& b,
                                    ExecPolicy policy = ExecPolicy::Auto) {
    return solve_with_certificate(a, b, policy).solution;
}

template <typename T>
std::optional<Matrix<T>> inverse(const Matrix<T>& a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("inverse of non-square matrix");
    std::size_t n = a.rows();
    Matrix<T> aug(n, 2 * n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) aug(r, c) = a(r, c);
        aug(r, n + r) = T(1);
    }
    RrefResult<T> res = rref(std::move(aug), ExecPolicy::Serial);
    if (res.rank() < n || res.pivot_cols[n - 1] != n - 1) return std::nullopt;
    Matrix<T> inv(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) inv(r, c) = res.m(r, n + c);
    return inv;
}

template <typename T>
T determinant(Matrix<T> a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("determinant of non-square matrix");
    T det(1);
    std::size_t n = a.rows();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a(piv, col) == T(0)) ++piv;
        if (piv == n) return T(0);
        if (piv != col) {
            for (std::size_t c = col; c < n; ++c) std::swap(a(piv, c), a(col, c));
            det = -det;
        }
        det = det * a(col, col);
        T inv = T(1) / a(col, col);
        for (std::size_t r = col + 1; r < n; ++r) {
            if (a(r, col) == T(0)) continue;
            T f = a(r, col) * inv;
            for (std::size_t c = col; c < n; ++c) a(r, c) = a(r, c) - f * a(col, c);
        }
    }
    return det;
}

// ---- Row-span (subspace) utilities. A subspace is a list of coordinate
// rows; canonical form is the nonzero rows of the RREF.

template <typename T>
Matrix<T> rows_to_matrix(const std::vector<std::vector<T>>& rows, std::size_t ncols) {
    Matrix<T> m(rows.size(), ncols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != ncols) throw std::invalid_argument("row length mismatch");
        for (std::size_t c = 0; c < ncols; ++c) m(r, c) = rows[r][c];
    }
    return m;
}

template <typename T>
std::vector<std::vector<T>> span_canonical(const std::vector<std::vector<T>>& rows, std::size_t ncols) {
    RrefResult<T> r = rref(rows_to_matrix(rows, ncols));
    std::vector<std::vector<T>> out;
    for (std::size_t i = 0; i < r.rank(); ++i) {
        std::vector<T> v(ncols);
        for (std::size_t c = 0; c < ncols; ++c) v[c] = r.m(i, c);
        out.push_back(std::move(v));
    }
    return out;
}

template <typename T>
std::size_t span_dim(const std::vector<std::vector<T>>& rows, std::size_t ncols) {
    return rank(rows_to_matrix(rows, ncols));
}

template <typename T>
std::vector<std::vector<T>> span_sum(const std::vector<std::vector<T>>& a,
                                     const std::vector<std::vector<T>>& b, std::size_t ncols) {
    std::vector<std::vector<T>> all = a;
    all.insert(all.end(), b.begin(), b.end());
    return span_canonical(all, ncols);
}

// Intersection via the kernel of [A^T | -B^T].
template <typename T>
std::vector<std::vector<T>> span_intersection(const std::vector<std::vector<T>>& a,
                                              const std::vector<std::vector<T>>& b, std::size_t ncols) {
    if (a.empty() || b.empty()) return {};
    Matrix<T> m(ncols, a.size() + b.size());
    for (std::size_t c = 0; c < a.size(); ++c)
        for (std::size_t r = 0; r < ncols; ++r) m(r, c) = a[c][r];
    for (std::size_t c = 0; c < b.size(); ++c)
        for (std::size_t r = 0; r < ncols; ++r) m(r, a.size() + c) = -b[c][r];
    auto ker = kernel_basis(m);
    std::vector<std::vector<T>> rows;
    for (const auto& k : ker) {
        std::vector<T> v(ncols, T(0));
        for (std::size_t i = 0; i < a.size(); ++i)
            for (std::size_t c = 0; c < ncols; ++c) v[c] += k[i] * a[i][c];
        rows.push_back(std::move(v));
    }
    return span_canonical(rows, ncols);
}

template <typename T>
bool span_contains(const std::vector<std::vector<T>>& span, const std::vector<T>& v, std::size_t ncols) {
    auto base = span_canonical(span, ncols);
    auto with = base;
    with.push_back(v);
    return span_dim(with, ncols) == base.size();
}

} // namespace purefull
