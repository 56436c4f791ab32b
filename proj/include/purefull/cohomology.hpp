#pragma once

#include <optional>

#include "purefull/complexstruct.hpp"

namespace purefull {

using GVec = std::vector<GaussianRational>;
using GRows = std::vector<GVec>;

// Matrix of d: Lambda^k -> Lambda^{k+1} in the lexicographic wedge bases.
Matrix<Rational> d_matrix(const LieAlgebraPresentation& p, int k);

// Invariant cohomology of one degree, with canonical closed representatives
// (reduced-row-echelon rows of the cocycle space, reduced modulo
// coboundaries). The same type doubles as invariant-current homology, where
// the boundary is the pairing-adjoint of d.
class CohomologySpace {
public:
    // closed_op: operator leaving degree k (closedness test);
    // boundary_op: operator arriving in degree k (its image is divided out).
    CohomologySpace(int dim2n, int degree, bool currents, Matrix<Rational> closed_op,
                    const Matrix<Rational>& boundary_op);

    int degree() const { return degree_; }
    int dim2n() const { return dim2n_; }
    bool currents_side() const { return currents_; }
    int betti() const { return int(reps_.size()); }
    const std::vector<Form>& representatives() const { return reps_; }

    // Coordinates of a closed element in the canonical representative basis.
    // Throws MathError carrying d a when a is not closed.
    GVec class_coordinates(const Form& a) const;
    bool is_exact(const Form& a) const;
    bool is_closed(const Form& a) const;
    Form d_of(const Form& a) const;

private:
    int dim2n_, degree_;
    bool currents_;
    Matrix<Rational> closed_op_;
    std::vector<Form> reps_;
    Matrix<Rational> solve_m_; // columns: representatives, then boundary basis
};

enum class Field { Real, Complex };

CohomologySpace cohomology_space(const LieAlgebraPresentation& p, int k,
                                 Field field = Field::Real);
CohomologySpace current_homology_space(const LieAlgebraPresentation& p, int k);

// H_k x H^k duality pairing on canonical representatives.
Matrix<Rational> homology_cohomology_pairing(const CohomologySpace& currents,
                                             const CohomologySpace& forms);

// ---------------------------------------------------------------------------

using TypeSet = std::vector<std::pair<int, int>>;

// Image in H^k (or H_k) of the closed elements of the chosen pure-type sum.
struct TypeSubgroup {
    TypeSet s;
    int degree = 0;
    bool real_flag = false;
    bool currents = false;
    GRows coord_rows; // canonical span inside the canonical coordinates
    int dim() const { return int(coord_rows.size()); }
};

TypeSubgroup type_subgroup(const CohomologySpace& space, const LieAlgebraPresentation& p,
                           const AlmostComplexStructure& j, const TypeSet& s, bool realness);

// ---------------------------------------------------------------------------

struct SubspaceSpec {
    enum class Kind { All, JInvariant, JAntiInvariant, Span } kind = Kind::All;
    const AlmostComplexStructure* j = nullptr; // for the J-variants
    std::vector<Form> span;                    // for Kind::Span

    static SubspaceSpec all() { return {}; }
    static SubspaceSpec j_invariant(const AlmostComplexStructure& j);
    static SubspaceSpec j_anti_invariant(const AlmostComplexStructure& j);
    static SubspaceSpec of_span(std::vector<Form> fs);
};

// Either a witness beta in the subspace with d beta = target, or a
// certificate functional (coordinates on Lambda^{deg target}) vanishing on
// d(subspace) and taking value 1 on target.
struct DSolveResult {
    std::optional<Form> witness;
    std::optional<GVec> certificate;
    bool solvable() const { return witness.has_value(); }
};

DSolveResult solve_d_in_subspace(const LieAlgebraPresentation& p, const Form& target,
                                 const SubspaceSpec& subspace);

// ---------------------------------------------------------------------------

struct CupResult {
    Matrix<GaussianRational> matrix; // dst coords of gamma ^ rep_i per column
    bool injective = false, surjective = false, iso = false;
};

CupResult cup_map(const CohomologySpace& src, const CohomologySpace& dst,
                  const LieAlgebraPresentation& p, const Form& gamma);

struct HlcReport {
    std::vector<bool> iso_per_power; // omega^k: H^{n-k} -> H^{n+k}, k = 0..n
    bool hlc = false;
};

HlcReport hlc_check(const LieAlgebraPresentation& p, const Form& omega);

// ---------------------------------------------------------------------------

struct StageSideReport {
    // One entry per conjugation pair {(p,q),(q,p)}, p >= q, p+q = stage.
    std::vector<int> pair_dims;
    bool pure = false, full = false;
    // Individual complex subgroups H^{(p,q)}, p from stage down to 0.
    std::vector<int> complex_dims;
    bool complex_pure = false, complex_full = false;
};

struct StageReport {
    int stage = 0;
    int betti = 0;
    StageSideReport forms, currents;
    int h_plus = -1, h_minus = -1, h_intersection = -1; // stage 2 only
};

struct PureFullReport {
    std::vector<StageReport> stages; // 0 .. 2n
    const StageReport& stage(int k) const { return stages.at(std::size_t(k)); }
};

PureFullReport purefull_report(const LieAlgebraPresentation& p, const AlmostComplexStructure& j);
StageReport purefull_stage(const LieAlgebraPresentation& p, const AlmostComplexStructure& j,
                           int stage);

} // namespace purefull
