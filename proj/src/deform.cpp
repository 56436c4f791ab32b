#include "purefull/deform.hpp"

#include "purefull/errors.hpp"
#include "purefull/linalg.hpp"

namespace purefull {

namespace {

using GMat = Matrix<GaussianRational>;
using SMat = Matrix<Scalar>;

SMat scalar_mat(const Matrix<Rational>& m) {
    return m.map([](const Rational& q) { return Scalar(q); });
}

SMat scalar_mat(const GMat& m) {
    return m.map([](const GaussianRational& z) { return Scalar(z); });
}

} // namespace

bool anticommutes(const AlmostComplexStructure& j, const Matrix<Rational>& l) {
    GMat lg = l.map([](const Rational& q) { return GaussianRational(q); });
    return (lg * j.frame + j.frame * lg).is_zero();
}

AlmostComplexStructure evaluate_curve(const DeformationCurve& curve, const GaussianRational& t) {
    if (const auto* ec = std::get_if<EndomorphismCurve>(&curve)) {
        GMat m = GMat::identity(ec->base.dim);
        for (int r = 0; r < ec->base.dim; ++r)
            for (int c = 0; c < ec->base.dim; ++c)
                m(r, c) -= t * GaussianRational(ec->direction(r, c));
        auto minv = inverse(m);
        if (!minv) throw MathError("singular id - tL at t = " + to_string(t));
        return acs_from_matrix(m * ec->base.frame * (*minv));
    }
    const auto& cc = std::get<CoframeCurve>(curve);
    std::vector<Form> spec;
    for (const auto& e : cc.entries) spec.push_back(e.substitute_t(t));
    try {
        return acs_from_coframe(cc.dim, spec);
    } catch (const MathError& e) {
        throw MathError("degenerate deformed coframe at t = " + to_string(t) + ": " + e.what());
    }
}

Matrix<Scalar> series_expand_curve(const EndomorphismCurve& curve, int order) {
    int dim = curve.base.dim;
    SMat l = scalar_mat(curve.direction);
    SMat j = scalar_mat(curve.base.frame);
    Scalar t = Scalar::t(order);
    SMat id = SMat::identity(dim);
    SMat m(dim, dim), minv(dim, dim);
    // (id - tL)^{-1} = sum t^j L^j in the truncated ring.
    SMat lpow = id;
    minv = id;
    for (int k = 1; k <= order; ++k) {
        lpow = lpow * l;
        Scalar tk(1);
        for (int a = 0; a < k; ++a) tk *= t;
        minv = minv + tk * lpow;
    }
    m = id - t * l;
    return m * j * minv;
}

// ---------------------------------------------------------------------------

namespace {

// Bilinear-form matrices for the printed obstruction terms.
SMat one_sided_left(const Form& beta, const Matrix<Rational>& lpow) {
    // beta(L^a ., .)
    return scalar_mat(lpow).transpose() * bilinear_matrix(beta);
}

SMat one_sided_right(const Form& beta, const Matrix<Rational>& lpow) {
    // beta(., L^a .)
    return bilinear_matrix(beta) * scalar_mat(lpow);
}

SMat two_sided(const Form& alpha, const Matrix<Rational>& la, const Matrix<Rational>& lb) {
    // alpha(L^a ., L^b .)
    return scalar_mat(la).transpose() * bilinear_matrix(alpha) * scalar_mat(lb);
}

Form antisymmetrized(int dim, const SMat& m) {
    SMat anti(dim, dim);
    for (int r = 0; r < dim; ++r)
        for (int c = 0; c < dim; ++c) anti(r, c) = (m(r, c) - m(c, r)) / Scalar(2);
    return form_from_bilinear(dim, anti);
}

std::vector<Matrix<Rational>> l_powers(const Matrix<Rational>& l, int order) {
    std::vector<Matrix<Rational>> pow{Matrix<Rational>::identity(l.rows())};
    for (int k = 1; k <= order; ++k) pow.push_back(pow.back() * l);
    return pow;
}

Form series_coefficient(const Form& f, int j) {
    Form out(f.dim(), f.degree());
    for (const auto& [m, v] : f.terms()) {
        GaussianRational c = v.as_series(j).coefficient(j, 0);
        if (!c.is_zero()) out.set(m, Scalar(c));
    }
    return out;
}

} // namespace

ObstructionReport obstruction(const LieAlgebraPresentation& p, const AlmostComplexStructure& j,
                              const Form& alpha, const Matrix<Rational>& l, int order,
                              ObstructionMode mode) {
    if (order < 1) throw MathError("obstruction order must be >= 1");
    if (!alpha.is_real()) throw MathError("alpha must be real");
    if (!ce_differential(p, alpha).is_zero()) throw MathError("alpha must be closed");
    if (type_project(alpha, 1, 1, j) != alpha) throw MathError("alpha must have type (1,1)");
    if (!anticommutes(j, l)) throw MathError("direction must satisfy LJ + JL = 0");

    ObstructionReport rep;
    rep.mode = mode;
    rep.requested_order = order;
    int dim = p.dim;
    auto lp = l_powers(l, order);

    if (mode == ObstructionMode::PaperLiteral) {
        std::vector<Form> betas; // chosen witnesses, carried into higher orders
        for (int jj = 1; jj <= order; ++jj) {
            SMat acc(dim, dim);
            acc = acc + Scalar(2) * one_sided_left(alpha, lp[jj]);
            for (int k = 1; k <= jj - 1; ++k)
                acc = acc + Scalar(4) * two_sided(alpha, lp[jj - k], lp[k]);
            acc = acc + Scalar(2) * one_sided_right(alpha, lp[jj]);
            for (int h = 1; h <= jj - 1; ++h) {
                acc = acc + Scalar(2) * one_sided_left(betas[h - 1], lp[jj - h]);
                for (int k = 1; k <= jj - h - 1; ++k)
                    acc = acc + Scalar(4) * two_sided(alpha, lp[jj - h - k], lp[k]);
                acc = acc + Scalar(2) * one_sided_right(alpha, lp[jj - h]);
            }
            Form tau = antisymmetrized(dim, acc);
            Form target = -ce_differential(p, tau);
            auto res = solve_d_in_subspace(p, target, SubspaceSpec::all());
            ObstructionOrderResult ores;
            ores.order = jj;
            ores.solvable = res.solvable();
            ores.witness = res.witness;
            ores.certificate = res.certificate;
            rep.orders.push_back(ores);
            if (!res.solvable()) break;
            betas.push_back(*res.witness);
        }
        rep.all_solvable = int(rep.orders.size()) == order && rep.orders.back().solvable;
        return rep;
    }

    // Projected mode: honest series expansion of eta_t = (alpha_t + J_t alpha_t)/2.
    EndomorphismCurve curve{j, l};
    SMat jt = series_expand_curve(curve, order);
    auto eta_of = [&](const std::vector<Form>& betas) {
        Form alpha_t = alpha;
        for (std::size_t h = 0; h < betas.size(); ++h) {
            Scalar th(1);
            for (std::size_t a = 0; a <= h; ++a) th *= Scalar::t(order);
            alpha_t = alpha_t + th * betas[h];
        }
        Form pulled = pullback_endo(alpha_t, jt);
        return Scalar(Rational(1, 2)) * (alpha_t + pulled);
    };

    std::vector<Form> betas;
    for (int jj = 1; jj <= order; ++jj) {
        Form deta = ce_differential(p, eta_of(betas));
        Form known = series_coefficient(deta, jj);
        auto res = solve_d_in_subspace(p, -known, SubspaceSpec::j_invariant(j));
        ObstructionOrderResult ores;
        ores.order = jj;
        ores.solvable = res.solvable();
        ores.witness = res.witness;
        ores.certificate = res.certificate;
        rep.orders.push_back(ores);
        if (!res.solvable()) break;
        betas.push_back(*res.witness);
    }
    rep.all_solvable = int(rep.orders.size()) == order && rep.orders.back().solvable;
    if (rep.all_solvable) {
        Form eta = eta_of(betas);
        Form deta = ce_differential(p, eta);
        for (int jj = 0; jj <= order; ++jj)
            if (!series_coefficient(deta, jj).is_zero())
                throw MathError("internal: d eta_t fails to vanish at solved order " +
                                std::to_string(jj));
        rep.eta_closed_verified_order = order;
        rep.eta_t = eta;
    }
    return rep;
}

// ---------------------------------------------------------------------------

Matrix<Rational> block_direction(const Matrix<Rational>& a, const Matrix<Rational>& b) {
    if (a.rows() != 3 || a.cols() != 3 || b.rows() != 3 || b.cols() != 3)
        throw MathError("block direction requires 3x3 blocks");
    Matrix<Rational> l(6, 6);
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) {
            l(r, c) = a(r, c);
            l(r, c + 3) = b(r, c);
            l(r + 3, c) = b(r, c);
            l(r + 3, c + 3) = -a(r, c);
        }
    return l;
}

TwistFormulaCheck validate_twist_formula(const LieAlgebraPresentation& p,
                                         const AlmostComplexStructure& j,
                                         const Form& alpha, const Matrix<Rational>& a,
                                         const Matrix<Rational>& b) {
    Matrix<Rational> l = block_direction(a, b);
    if (!anticommutes(j, l)) throw MathError("block direction fails LJ + JL = 0");
    TwistFormulaCheck check;
    check.engine = ce_differential(p, twist(alpha, l));
    // Reference polynomial in a_1^2, a_1^3, b_1^2, b_1^3 (entries = row 1 of
    // the blocks); the two a_1^2 signs are as re-derived, see tests.
    Rational a12 = a(0, 1), a13 = a(0, 2), b12 = b(0, 1), b13 = b(0, 2);
    auto term = [&](const Rational& c, std::vector<int> idx) {
        return Scalar(c) * Form::basis(6, std::move(idx));
    };
    check.transcription = term(b13, {1, 2, 3}) + term(-a12, {1, 2, 5}) + term(-a13, {1, 2, 6}) +
                          term(b13, {1, 3, 6}) + term(a12, {1, 5, 6}) + term(a13, {2, 3, 4}) +
                          term(-b12, {2, 4, 5}) + term(-b13, {2, 4, 6}) + term(a13, {3, 4, 6}) +
                          term(b12, {4, 5, 6});
    check.equal = check.engine == check.transcription;
    return check;
}

// ---------------------------------------------------------------------------

std::vector<ScanRow> semicontinuity_scan(const LieAlgebraPresentation& p,
                                         const DeformationCurve& curve,
                                         const std::vector<GaussianRational>& samples) {
    std::vector<ScanRow> rows(samples.size());
    const std::ptrdiff_t n = std::ptrdiff_t(samples.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (n > 1)
#endif
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        ScanRow row;
        row.t = samples[std::size_t(i)];
        try {
            auto jt = evaluate_curve(curve, row.t);
            if (!jt.is_real()) throw MathError("J_t is not a real structure at this sample");
            auto stage = purefull_stage(p, jt, 2);
            row.h_plus = stage.h_plus;
            row.h_minus = stage.h_minus;
            row.h_intersection = stage.h_intersection;
            row.pure = stage.forms.pure;
            row.full = stage.forms.full;
            row.ok = true;
        } catch (const std::exception& e) {
            row.ok = false;
            row.error = e.what();
        }
        rows[std::size_t(i)] = std::move(row);
    }
    return rows;
}

} // namespace purefull
