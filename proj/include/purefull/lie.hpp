#pragma once

#include <optional>
#include <string>
#include <vector>

#include "purefull/form.hpp"

namespace purefull {

// A Lie algebra given by the differentials of a coframe (structure
// equations). In complex mode the underlying real coframe is the
// realification e^{2a-1} = Re phi^a, e^{2a} = Im phi^a, and the complex
// d-images are kept alongside; phi-basis forms live over "u-indices"
// 1..n = phi^a, n+1..2n = conj(phi^a).
struct LieAlgebraPresentation {
    int dim = 0;             // 2n
    std::vector<Form> d;     // d e^j, degree-2 rational forms over the e-basis
    bool complex_mode = false;
    std::vector<Form> complex_d; // d phi^a over u-indices (complex mode only)
    std::string text;            // source notation when parsed

    int half_dim() const { return dim / 2; }
};

struct JacobiFailure {
    int basis_index; // 1-based e^k with d(d e^k) != 0
    Form d_squared;
};

// Builds and validates (d о d = 0 on degree 1). Throws MathError carrying the
// failing basis element unless validate is false.
LieAlgebraPresentation make_presentation(std::vector<Form> d_images, bool validate = true);

enum class PresentationMode { Real, Complex };

// Salamon-style structure equation notation, e.g. "(0^3, 12, 14, 24)".
// Compact digit pairs are allowed only when indices stay below 10; use the
// caret syntax "1^2" (with optional conjugation primes in complex mode,
// "1'^2") otherwise. Complex entries may be scaled: "2*dphi=-12'-1'2'" means
// 2 d phi^k = -phi^1 ^ conj(phi^2) - conj(phi^1) ^ conj(phi^2).
LieAlgebraPresentation parse_presentation(const std::string& text, PresentationMode mode);

// Anti-derivation extension of the stored differential; Scalar-linear.
Form ce_differential(const LieAlgebraPresentation& p, const Form& a);

// phi^a and conj as forms over the e-basis (complex mode realification).
std::vector<Form> realified_complex_coframe(const LieAlgebraPresentation& p);

// Structure constants via e^k([X_i, X_j]) = -(d e^k)(X_i, X_j).
// ad_matrix(i) maps column j to the components of [X_i, X_j].
Matrix<Rational> ad_matrix(const LieAlgebraPresentation& p, int i);
std::vector<Scalar> bracket(const LieAlgebraPresentation& p, const std::vector<Scalar>& x,
                            const std::vector<Scalar>& y);

struct StructureReport {
    bool jacobi = false;
    std::optional<JacobiFailure> jacobi_failure;
    bool nilpotent = false;
    int nilpotency_step = 0; // smallest s with g^{(s)} = 0 in the lower central series
    bool solvable = false;
    // Necessary condition only: solvable and every basis ad matrix has all
    // real eigenvalues. Authoritative flags for catalog entries are data.
    bool completely_solvable_heuristic = false;
    bool unimodular = false;
};

StructureReport check_presentation(const LieAlgebraPresentation& p);

// Rewrites the presentation in the coframe f = S e (S invertible, rational).
LieAlgebraPresentation change_coframe_basis(const LieAlgebraPresentation& p,
                                            const Matrix<Rational>& s);

// True when the rational matrix has only real eigenvalues (exact Sturm count
// on the squarefree part of the characteristic polynomial).
bool all_eigenvalues_real(const Matrix<Rational>& a);

} // namespace purefull
