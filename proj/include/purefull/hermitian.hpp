#pragma once

#include "purefull/cohomology.hpp"

namespace purefull {

// Invariant Hermitian data: metric Gram matrices on each Lambda^k, volume
// form, fundamental form. The metric is either the default g built from the
// (1,0)-coframe (phi^a unitary) or derived from a compatible pair (omega, J)
// via g = omega(., J.).
struct HermitianData {
    LieAlgebraPresentation pres;
    AlmostComplexStructure j;
    Matrix<Rational> gram1; // coframe inner products on Lambda^1, SPD
    Form omega;             // fundamental 2-form
    Form vol;               // positive multiple of e^{1..2n} with <vol,vol> = 1

    const Matrix<Rational>& gram(int k) const; // induced Gram on Lambda^k
    int dim() const { return pres.dim; }

    mutable std::vector<Matrix<Rational>> gram_cache_;
    mutable std::vector<bool> gram_ready_;
};

HermitianData make_hermitian_default(const LieAlgebraPresentation& p,
                                     const AlmostComplexStructure& j);
HermitianData make_hermitian_from_pair(const LieAlgebraPresentation& p,
                                       const AlmostComplexStructure& j, const Form& omega);

// <a, b> with the sesquilinear extension (conjugate-linear in b).
GaussianRational inner_product(const HermitianData& h, const Form& a, const Form& b);

// a ^ star(b) = <a, b> vol for real forms; complex-bilinear extension.
Form hodge_star(const HermitianData& h, const Form& a);

// ker d  ∩  ker d* in degree k; the basis is canonical.
std::vector<Form> harmonic_space(const HermitianData& h, int k);

enum class DiffOp { D, Del, DelBar };

// Matrix of the operator on Lambda^k (into Lambda^{k+1}); Del/DelBar act
// through the type decomposition of J.
Matrix<GaussianRational> operator_matrix(const HermitianData& h, DiffOp op, int k);
// True adjoint with respect to the exact Gram matrices: Lambda^{k+1} -> Lambda^k.
Matrix<GaussianRational> adjoint_matrix(const HermitianData& h, DiffOp op, int k);
// Adjoint applied to a degree-(k+1) form.
Form apply_adjoint(const HermitianData& h, DiffOp op, const Form& a);

// ---------------------------------------------------------------------------

struct PredicateReport {
    bool nondegenerate = false; // omega^n != 0
    bool taming = false;        // omega(., J.) has positive-definite symmetric part
    bool compatible = false;    // taming and omega(J., J.) = omega
    bool closed = false;        // d omega = 0
    bool almost_kahler = false;
    bool semi_kahler = false;   // compatible and d(omega^{n-1}) = 0
    bool integrable = false;
    bool balanced = false;      // semi-Kahler with integrable J
    std::optional<bool> hlc;    // only evaluated when omega is closed
    Form d_omega;
    Form d_omega_power; // d(omega^{n-1})
};

PredicateReport form_predicates(const LieAlgebraPresentation& p, const AlmostComplexStructure& j,
                                const Form& omega);

// Exact positive-definiteness via leading principal minors.
bool positive_definite(const Matrix<Rational>& sym);

// ---------------------------------------------------------------------------

// Positivity of a real (2n-2)-form on complex (n-1)-subspaces. The sampler
// refutes; it never certifies. The exact path applies when phi is supplied as
// the (n-1)-st power of a J-taming real (1,1)-form.
struct PositivityVerdict {
    enum class Status { ExactPositive, Counterexample, NoCounterexampleFound };
    Status status = Status::NoCounterexampleFound;
    int trials_run = 0;
    std::vector<std::vector<Rational>> counterexample; // X_1 .. X_{n-1}
    Rational value;                                    // phi on the witness subspace
    std::string note;
};

PositivityVerdict positivity_on_complex_hyperplanes(const LieAlgebraPresentation& p,
                                                    const AlmostComplexStructure& j,
                                                    const Form& phi,
                                                    const std::optional<Form>& power_root,
                                                    int trials, unsigned seed);

} // namespace purefull
