#pragma once

#include <variant>

#include "purefull/cohomology.hpp"

namespace purefull {

// J_t = (id - tL) J (id - tL)^{-1}. The representation is unique when
// LJ + JL = 0; that anticommutation is required by the obstruction solver.
struct EndomorphismCurve {
    AlmostComplexStructure base;
    Matrix<Rational> direction;
};

// Deformed (1,0)-coframe with entries polynomial in t and conj(t), stored as
// Series-scalar forms over the fixed real coframe.
struct CoframeCurve {
    int dim = 0;
    std::vector<Form> entries;
};

using DeformationCurve = std::variant<EndomorphismCurve, CoframeCurve>;

bool anticommutes(const AlmostComplexStructure& j, const Matrix<Rational>& l);

// Exact evaluation; t conjugates are substituted exactly. Degenerate inputs
// (singular id - tL, non-spanning coframe) raise MathError.
AlmostComplexStructure evaluate_curve(const DeformationCurve& curve, const GaussianRational& t);

// Truncated series of J_t; the coefficient of t^j is 2 J L^j.
Matrix<Scalar> series_expand_curve(const EndomorphismCurve& curve, int order);

// ---------------------------------------------------------------------------

enum class ObstructionMode { PaperLiteral, Projected };

struct ObstructionOrderResult {
    int order = 0;
    bool solvable = false;
    std::optional<Form> witness;
    std::optional<GVec> certificate;
};

struct ObstructionReport {
    ObstructionMode mode = ObstructionMode::Projected;
    int requested_order = 0;
    std::vector<ObstructionOrderResult> orders;
    bool all_solvable = false;
    // Projected mode, all orders solvable: eta_t = (alpha_t + J_t alpha_t)/2
    // rebuilt from the chosen witnesses, with d eta_t checked to vanish
    // through this series order.
    std::optional<int> eta_closed_verified_order;
    std::optional<Form> eta_t;
};

// Order-by-order closedness conditions for keeping a J-invariant class along
// J_t = (id - tL) J (id - tL)^{-1}.
//
// PaperLiteral solves the printed order-j equations with beta_j ranging over
// all invariant real 2-forms (the order-1 equation is then always solvable).
// Projected re-derives the conditions from the expansion of
// eta_t = (alpha_t + J_t alpha_t)/2, where only the J-invariant part of
// beta_j enters at order j; witnesses are searched in the J-invariant
// 2-forms and certificates are produced when no solution exists.
ObstructionReport obstruction(const LieAlgebraPresentation& p, const AlmostComplexStructure& j,
                              const Form& alpha, const Matrix<Rational>& l, int order,
                              ObstructionMode mode);

// ---------------------------------------------------------------------------

// L = [[A, B], [B, -A]] with 3x3 rational blocks; anticommutes with the
// block structure J = [[0, -1], [1, 0]].
Matrix<Rational> block_direction(const Matrix<Rational>& a, const Matrix<Rational>& b);

struct TwistFormulaCheck {
    bool equal = false;
    Form engine;        // d(twist(alpha, L)) computed by the kernels
    Form transcription; // the displayed 10-term polynomial at the given entries
};

// Compares the engine's d(alpha(L.,.) + alpha(.,L.)) on the 6-dimensional
// solvmanifold (12,0,-36,24,56,0) with alpha = e^{14} against the reference
// 10-term polynomial in a_1^2, a_1^3, b_1^2, b_1^3.
TwistFormulaCheck validate_twist_formula(const LieAlgebraPresentation& p,
                                         const AlmostComplexStructure& j, const Form& alpha,
                                         const Matrix<Rational>& a, const Matrix<Rational>& b);

// ---------------------------------------------------------------------------

struct ScanRow {
    GaussianRational t;
    bool ok = false;
    std::string error;
    int h_plus = -1, h_minus = -1, h_intersection = -1;
    bool pure = false, full = false;
};

// Per-sample h+/h-, stage-2 pure/full flags and the intersection dimension.
// Samples are independent and evaluated concurrently; the output order is the
// input order.
std::vector<ScanRow> semicontinuity_scan(const LieAlgebraPresentation& p,
                                         const DeformationCurve& curve,
                                         const std::vector<GaussianRational>& samples);

} // namespace purefull
