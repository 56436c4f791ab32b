#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "purefull/matrix.hpp"
#include "purefull/scalar.hpp"

namespace purefull {

// Basis index subsets of {1, ..., dim} are stored as bitmasks (bit i-1 for
// index i) and enumerated in lexicographic order of the index tuples.
using Mask = std::uint32_t;

Mask mask_from_indices(const std::vector<int>& indices, int dim);
std::vector<int> indices_from_mask(Mask m);

// Sign of merging two disjoint sorted index sets (transposition count); 0 if
// they intersect.
int merge_sign(Mask a, Mask b);

// All k-subset masks of {1..dim} in lexicographic tuple order (shared,
// cached).
const std::vector<Mask>& subset_masks(int dim, int k);
// Position of a mask in subset_masks(dim, popcount).
std::size_t subset_position(int dim, Mask m);

// Element of the exterior algebra over a dim-dimensional space: homogeneous
// degree, sparse exact coefficients. Values are immutable in spirit — all
// operations return fresh forms — and safe to share across threads.
class Form {
public:
    Form() : dim_(0), degree_(0) {}
    Form(int dim, int degree);

    static Form zero(int dim, int degree) { return Form(dim, degree); }
    static Form unit(int dim) { return basis(dim, {}); } // constant 1
    static Form basis(int dim, const std::vector<int>& indices);

    int dim() const { return dim_; }
    int degree() const { return degree_; }
    bool is_zero() const { return c_.empty(); }
    bool is_real() const;
    std::size_t term_count() const { return c_.size(); }

    const std::map<Mask, Scalar>& terms() const { return c_; }
    Scalar coefficient(Mask m) const;
    Scalar coefficient(const std::vector<int>& indices) const;
    void set(Mask m, const Scalar& v); // drops exact zeros

    Form operator-() const;
    friend Form operator+(const Form& a, const Form& b);
    friend Form operator-(const Form& a, const Form& b);
    friend Form operator*(const Scalar& s, const Form& a);
    friend bool operator==(const Form& a, const Form& b);
    friend bool operator!=(const Form& a, const Form& b) { return !(a == b); }

    Form conj() const;
    Form real_part() const;
    Form imag_part() const;
    // Collapses series coefficients at t := value.
    Form substitute_t(const GaussianRational& value) const;

    // Coordinates in the lexicographic wedge basis.
    std::vector<Scalar> coordinates() const;
    static Form from_coordinates(int dim, int degree, const std::vector<Scalar>& coords);

private:
    int dim_, degree_;
    std::map<Mask, Scalar> c_;
};

Form wedge(const Form& a, const Form& b);
Form conjugate(const Form& a);
Form wedge_power(const Form& a, int k);

// phi(A X_1, ..., A X_k) for a square matrix A on the frame; contravariant.
Form pullback_endo(const Form& phi, const Matrix<Scalar>& a);
Form pullback_endo(const Form& phi, const Matrix<GaussianRational>& a);
Form pullback_endo(const Form& phi, const Matrix<Rational>& a);

// For degree-2 alpha: (X, Y) |-> alpha(L X, Y) + alpha(X, L Y).
Form twist(const Form& alpha, const Matrix<Rational>& l);

// Antisymmetric matrix of a degree-2 form and back.
Matrix<Scalar> bilinear_matrix(const Form& alpha);
Form form_from_bilinear(int dim, const Matrix<Scalar>& m);

// Value of a degree-k form on k frame-coordinate vectors.
Scalar evaluate(const Form& phi, const std::vector<std::vector<Scalar>>& vectors);

std::string to_string(const Form& f);

} // namespace purefull
