#pragma once

#include <map>

#include "purefull/lie.hpp"

namespace purefull {

// Invariant almost-complex structure: J on the frame with J^2 = -id, plus the
// cached (1,0)-coframe (n complex 1-forms spanning the +i eigenspace of the
// dual action e -> e о J). Entries are Gaussian rational; structures arising
// from coframes are real.
struct AlmostComplexStructure {
    int dim = 0; // 2n
    Matrix<GaussianRational> frame;
    std::vector<Form> coframe10;

    int half_dim() const { return dim / 2; }
    bool is_real() const;
};

// The unique J with phi о J = i phi for every spec entry. Entries plus their
// conjugates must span; all entries degree 1.
AlmostComplexStructure acs_from_coframe(int dim, const std::vector<Form>& spec);

// Matrix route; the (1,0)-coframe is the canonical kernel basis of J^T - i.
AlmostComplexStructure acs_from_matrix(const Matrix<GaussianRational>& j);
AlmostComplexStructure acs_from_matrix(const Matrix<Rational>& j);

// Standard structure phi^a = e^{2a-1} + i e^{2a} (the complex-mode coframe).
AlmostComplexStructure standard_acs(int dim);

// Change of basis between the real coframe e and the complex coframe
// u = (phi^1..phi^n, conj phi^1..conj phi^n); forms over u-indices reuse the
// Form type with indices 1..n holomorphic and n+1..2n anti-holomorphic.
Form to_phi_basis(const Form& e_form, const AlmostComplexStructure& j);
Form from_phi_basis(const Form& u_form, const AlmostComplexStructure& j);

// Component of a in Lambda^{p,q}; requires p + q = deg a.
Form type_project(const Form& a, int p, int q, const AlmostComplexStructure& j);
std::map<std::pair<int, int>, Form> type_components(const Form& a, const AlmostComplexStructure& j);

// Matrix of pullback_endo(., J) on degree-k forms in the lexicographic wedge
// basis.
Matrix<GaussianRational> pullback_matrix(const AlmostComplexStructure& j, int k);

// Nij(X, Y) = [JX, JY] - J[JX, Y] - J[X, JY] - [X, Y] on frame pairs i < j.
using NijenhuisTable = std::map<std::pair<int, int>, std::vector<GaussianRational>>;
NijenhuisTable nijenhuis(const LieAlgebraPresentation& p, const AlmostComplexStructure& j);

// Nijenhuis route and the pi^{0,2}(d phi^a) route are both computed and must
// agree; disagreement throws.
bool is_integrable(const LieAlgebraPresentation& p, const AlmostComplexStructure& j);

// d phi^a expanded in the phi / conj-phi wedge basis, one u-form per a.
std::vector<Form> complex_structure_equations(const LieAlgebraPresentation& p,
                                              const AlmostComplexStructure& j);

// "phi^{12'}"-style rendering of forms over u-indices.
std::string phi_form_to_string(const Form& u_form, int n);

} // namespace purefull
