#include "purefull/cohomology.hpp"

#include <algorithm>
#include <set>

#include "purefull/errors.hpp"
#include "purefull/linalg.hpp"

namespace purefull {

namespace {

using GMat = Matrix<GaussianRational>;

GMat to_gaussian(const Matrix<Rational>& m) {
    return m.map([](const Rational& q) { return GaussianRational(q); });
}

GVec form_coords_gaussian(const Form& f) {
    auto sc = f.coordinates();
    GVec out(sc.size());
    for (std::size_t i = 0; i < sc.size(); ++i) out[i] = sc[i].as_gaussian();
    return out;
}

Form form_from_gaussian(int dim, int degree, const GVec& v) {
    std::vector<Scalar> sc(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) sc[i] = Scalar(v[i]);
    return Form::from_coordinates(dim, degree, sc);
}

std::vector<Rational> rational_vec(const GVec& v) {
    std::vector<Rational> out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (!v[i].is_real()) throw MathError("expected a rational coordinate vector");
        out[i] = v[i].re;
    }
    return out;
}

} // namespace

Matrix<Rational> d_matrix(const LieAlgebraPresentation& p, int k) {
    const auto& src = subset_masks(p.dim, k);
    const auto& dst = subset_masks(p.dim, k + 1);
    Matrix<Rational> m(dst.size(), src.size());
    if (k < 0 || k >= p.dim) return m;
    for (std::size_t c = 0; c < src.size(); ++c) {
        Form b(p.dim, k);
        b.set(src[c], Scalar(1));
        Form db = ce_differential(p, b);
        for (const auto& [mask, v] : db.terms())
            m(subset_position(p.dim, mask), c) = v.as_rational();
    }
    return m;
}

CohomologySpace::CohomologySpace(int dim2n, int degree, bool currents, Matrix<Rational> closed_op,
                                 const Matrix<Rational>& boundary_op)
    : dim2n_(dim2n), degree_(degree), currents_(currents), closed_op_(std::move(closed_op)) {
    const std::size_t n = subset_masks(dim2n, degree).size();
    if (closed_op_.cols() != n || boundary_op.rows() != n)
        throw MathError("cohomology operator shape mismatch");

    // Canonical cocycle basis.
    auto z_rows = kernel_basis(closed_op_);
    z_rows = span_canonical(z_rows, n);
    // Canonical coboundary basis (columns of boundary_op as rows).
    std::vector<std::vector<Rational>> b_rows;
    for (std::size_t c = 0; c < boundary_op.cols(); ++c) {
        std::vector<Rational> v(n);
        bool nonzero = false;
        for (std::size_t r = 0; r < n; ++r) {
            v[r] = boundary_op(r, c);
            if (v[r] != 0) nonzero = true;
        }
        if (nonzero) b_rows.push_back(std::move(v));
    }
    b_rows = span_canonical(b_rows, n);

    // Pick representatives: canonical cocycle rows that enlarge the span.
    std::vector<std::vector<Rational>> span = b_rows;
    std::size_t current_rank = b_rows.size();
    std::vector<std::vector<Rational>> rep_vecs;
    for (const auto& z : z_rows) {
        span.push_back(z);
        std::size_t r = span_dim(span, n);
        if (r > current_rank) {
            current_rank = r;
            rep_vecs.push_back(z);
        } else {
            span.pop_back();
        }
    }
    for (const auto& v : rep_vecs) {
        std::vector<Scalar> sc(v.size());
        for (std::size_t i = 0; i < v.size(); ++i) sc[i] = Scalar(v[i]);
        reps_.push_back(Form::from_coordinates(dim2n, degree, sc));
    }
    solve_m_ = Matrix<Rational>(n, rep_vecs.size() + b_rows.size());
    for (std::size_t c = 0; c < rep_vecs.size(); ++c)
        for (std::size_t r = 0; r < n; ++r) solve_m_(r, c) = rep_vecs[c][r];
    for (std::size_t c = 0; c < b_rows.size(); ++c)
        for (std::size_t r = 0; r < n; ++r) solve_m_(r, rep_vecs.size() + c) = b_rows[c][r];
}

Form CohomologySpace::d_of(const Form& a) const {
    GVec coords = form_coords_gaussian(a);
    GVec image = to_gaussian(closed_op_).apply(coords);
    int out_degree = currents_ ? degree_ - 1 : degree_ + 1;
    return form_from_gaussian(dim2n_, out_degree, image);
}

bool CohomologySpace::is_closed(const Form& a) const { return d_of(a).is_zero(); }

GVec CohomologySpace::class_coordinates(const Form& a) const {
    if (a.dim() != dim2n_) throw MathError("form dimension mismatch");
    if (!a.is_zero() && a.degree() != degree_) throw MathError("form degree mismatch");
    Form da = d_of(a);
    if (!da.is_zero())
        throw MathError(std::string(currents_ ? "current" : "form") +
                            " is not closed; d a = " + to_string(da),
                        to_string(da));
    GVec coords = a.is_zero() ? GVec(subset_masks(dim2n_, degree_).size()) : form_coords_gaussian(a);
    auto sol = solve(to_gaussian(solve_m_), coords);
    if (!sol) throw MathError("closed element outside the cocycle space");
    GVec out(reps_.size());
    for (std::size_t i = 0; i < reps_.size(); ++i) out[i] = (*sol)[i];
    return out;
}

bool CohomologySpace::is_exact(const Form& a) const {
    for (const auto& c : class_coordinates(a))
        if (!c.is_zero()) return false;
    return true;
}

CohomologySpace cohomology_space(const LieAlgebraPresentation& p, int k, Field) {
    if (k < 0 || k > p.dim) throw MathError("degree out of range");
    return CohomologySpace(p.dim, k, false, d_matrix(p, k), d_matrix(p, k - 1));
}

CohomologySpace current_homology_space(const LieAlgebraPresentation& p, int k) {
    if (k < 0 || k > p.dim) throw MathError("degree out of range");
    return CohomologySpace(p.dim, k, true, d_matrix(p, k - 1).transpose(),
                           d_matrix(p, k).transpose());
}

Matrix<Rational> homology_cohomology_pairing(const CohomologySpace& currents,
                                             const CohomologySpace& forms) {
    if (currents.degree() != forms.degree() || !currents.currents_side() || forms.currents_side())
        throw MathError("pairing requires a current space and a form space of equal degree");
    Matrix<Rational> p(forms.betti(), currents.betti());
    for (int i = 0; i < forms.betti(); ++i)
        for (int j = 0; j < currents.betti(); ++j) {
            Rational acc(0);
            const Form& a = forms.representatives()[i];
            const Form& v = currents.representatives()[j];
            for (const auto& [m, c] : a.terms()) {
                Scalar w = v.coefficient(m);
                if (!w.is_zero()) acc += c.as_rational() * w.as_rational();
            }
            p(i, j) = acc;
        }
    return p;
}

// ---------------------------------------------------------------------------

namespace {

// (1,0) tangent frame: canonical kernel basis of (J - i id).
std::vector<Form> holomorphic_frame(const AlmostComplexStructure& j) {
    GMat m = j.frame;
    for (int r = 0; r < j.dim; ++r) m(r, r) -= GaussianRational::i();
    auto ker = kernel_basis(m);
    if (int(ker.size()) != j.half_dim()) throw MathError("J has defective i-eigenspace");
    std::vector<Form> out;
    for (const auto& v : ker) {
        Form f(j.dim, 1);
        for (int c = 0; c < j.dim; ++c)
            if (!v[c].is_zero()) f.set(Mask(1) << c, Scalar(v[c]));
        out.push_back(f);
    }
    return out;
}

// Columns spanning the pure-type sum in degree-k coordinates.
std::vector<GVec> typed_basis_columns(const LieAlgebraPresentation& /*p*/,
                                      const AlmostComplexStructure& j, const TypeSet& s, int k,
                                      bool currents) {
    int n = j.half_dim();
    std::set<std::pair<int, int>> types(s.begin(), s.end());
    std::vector<GVec> cols;
    std::vector<Form> gens; // phi^a resp. Z_a
    if (currents)
        gens = holomorphic_frame(j);
    else
        gens = j.coframe10;
    std::vector<Form> gens_bar;
    for (const auto& g : gens) gens_bar.push_back(g.conj());
    for (const auto& [pp, qq] : types) {
        if (pp < 0 || qq < 0 || pp > n || qq > n || pp + qq != k)
            throw MathError("inconsistent type set entry (" + std::to_string(pp) + "," +
                            std::to_string(qq) + ")");
        for (Mask a : subset_masks(n, pp))
            for (Mask b : subset_masks(n, qq)) {
                Form w = Form::unit(j.dim);
                for (int i : indices_from_mask(a)) w = wedge(w, gens[i - 1]);
                for (int i : indices_from_mask(b)) w = wedge(w, gens_bar[i - 1]);
                cols.push_back(form_coords_gaussian(w));
            }
    }
    return cols;
}

GMat columns_to_matrix(const std::vector<GVec>& cols, std::size_t nrows) {
    GMat m(nrows, cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c)
        for (std::size_t r = 0; r < nrows; ++r) m(r, c) = cols[c][r];
    return m;
}

} // namespace

TypeSubgroup type_subgroup(const CohomologySpace& space, const LieAlgebraPresentation& p,
                           const AlmostComplexStructure& j, const TypeSet& s, bool realness) {
    int k = space.degree();
    if (realness) {
        std::set<std::pair<int, int>> types(s.begin(), s.end());
        for (const auto& [pp, qq] : types)
            if (!types.count({qq, pp}))
                throw MathError("real type subgroup requires a conjugation-stable type set");
        if (!j.is_real()) throw MathError("real type subgroup requires a real structure");
    }
    auto cols = typed_basis_columns(p, j, s, k, space.currents_side());
    TypeSubgroup out;
    out.s = s;
    out.degree = k;
    out.real_flag = realness;
    out.currents = space.currents_side();
    if (cols.empty()) return out;

    const std::size_t n = subset_masks(space.dim2n(), k).size();
    // Closed combinations: kernel of (closed_op applied to each column).
    std::vector<GVec> image_cols;
    std::size_t out_rows = 0;
    for (const auto& c : cols) {
        Form w = form_from_gaussian(space.dim2n(), k, c);
        Form dw = space.d_of(w);
        auto v = dw.is_zero() ? GVec(subset_masks(space.dim2n(), dw.degree()).size())
                              : form_coords_gaussian(dw);
        out_rows = v.size();
        image_cols.push_back(std::move(v));
    }
    auto combos = kernel_basis(columns_to_matrix(image_cols, out_rows));

    std::vector<Form> closed_typed;
    for (const auto& c : combos) {
        GVec v(n, GaussianRational(0));
        for (std::size_t i = 0; i < cols.size(); ++i) {
            if (c[i].is_zero()) continue;
            for (std::size_t r = 0; r < n; ++r) v[r] += c[i] * cols[i][r];
        }
        closed_typed.push_back(form_from_gaussian(space.dim2n(), k, v));
    }

    GRows coord_rows;
    if (realness) {
        for (const auto& w : closed_typed) {
            for (const Form& part : {w.real_part(), w.imag_part()}) {
                if (part.is_zero()) continue;
                coord_rows.push_back(space.class_coordinates(part));
            }
        }
    } else {
        for (const auto& w : closed_typed) coord_rows.push_back(space.class_coordinates(w));
    }
    out.coord_rows = span_canonical(coord_rows, space.betti());
    return out;
}

// ---------------------------------------------------------------------------

SubspaceSpec SubspaceSpec::j_invariant(const AlmostComplexStructure& j) {
    SubspaceSpec s;
    s.kind = Kind::JInvariant;
    s.j = &j;
    return s;
}

SubspaceSpec SubspaceSpec::j_anti_invariant(const AlmostComplexStructure& j) {
    SubspaceSpec s;
    s.kind = Kind::JAntiInvariant;
    s.j = &j;
    return s;
}

SubspaceSpec SubspaceSpec::of_span(std::vector<Form> fs) {
    SubspaceSpec s;
    s.kind = Kind::Span;
    s.span = std::move(fs);
    return s;
}

DSolveResult solve_d_in_subspace(const LieAlgebraPresentation& p, const Form& target,
                                 const SubspaceSpec& subspace) {
    int k = target.degree() - 1;
    if (k < 0 || k > p.dim) throw MathError("target degree out of range");
    const std::size_t nsrc = subset_masks(p.dim, k).size();
    std::vector<GVec> w_cols;
    switch (subspace.kind) {
        case SubspaceSpec::Kind::All:
            for (std::size_t i = 0; i < nsrc; ++i) {
                GVec v(nsrc, GaussianRational(0));
                v[i] = GaussianRational(1);
                w_cols.push_back(std::move(v));
            }
            break;
        case SubspaceSpec::Kind::JInvariant:
        case SubspaceSpec::Kind::JAntiInvariant: {
            if (!subspace.j) throw MathError("missing structure for J-subspace");
            GMat pm = pullback_matrix(*subspace.j, k);
            GaussianRational sign(subspace.kind == SubspaceSpec::Kind::JInvariant
                                      ? Rational(-1)
                                      : Rational(1));
            for (std::size_t r = 0; r < pm.rows(); ++r) pm(r, r) += sign;
            w_cols = kernel_basis(pm);
            break;
        }
        case SubspaceSpec::Kind::Span:
            for (const auto& f : subspace.span) {
                if (f.degree() != k || f.dim() != p.dim)
                    throw MathError("span entry degree mismatch");
                w_cols.push_back(form_coords_gaussian(f));
            }
            break;
    }

    GMat d = to_gaussian(d_matrix(p, k));
    GMat a(d.rows(), w_cols.size());
    for (std::size_t c = 0; c < w_cols.size(); ++c) {
        GVec img = d.apply(w_cols[c]);
        for (std::size_t r = 0; r < d.rows(); ++r) a(r, c) = img[r];
    }
    GVec b = target.is_zero() ? GVec(d.rows()) : form_coords_gaussian(target);
    if (b.size() != a.rows()) throw MathError("target degree mismatch");
    auto outcome = solve_with_certificate(a, b);
    DSolveResult res;
    if (outcome.solution) {
        GVec v(nsrc, GaussianRational(0));
        for (std::size_t c = 0; c < w_cols.size(); ++c) {
            if ((*outcome.solution)[c].is_zero()) continue;
            for (std::size_t r = 0; r < nsrc; ++r) v[r] += (*outcome.solution)[c] * w_cols[c][r];
        }
        res.witness = form_from_gaussian(p.dim, k, v);
    } else {
        res.certificate = outcome.certificate;
    }
    return res;
}

// ---------------------------------------------------------------------------

CupResult cup_map(const CohomologySpace& src, const CohomologySpace& dst,
                  const LieAlgebraPresentation& p, const Form& gamma) {
    if (!ce_differential(p, gamma).is_zero())
        throw MathError("cup map requires a closed form; d gamma = " +
                        to_string(ce_differential(p, gamma)));
    CupResult out;
    out.matrix = GMat(dst.betti(), src.betti());
    for (int c = 0; c < src.betti(); ++c) {
        Form w = wedge(gamma, src.representatives()[c]);
        GVec coords = dst.class_coordinates(w);
        for (int r = 0; r < dst.betti(); ++r) out.matrix(r, c) = coords[r];
    }
    std::size_t rk = rank(out.matrix);
    out.injective = rk == std::size_t(src.betti());
    out.surjective = rk == std::size_t(dst.betti());
    out.iso = out.injective && out.surjective;
    return out;
}

HlcReport hlc_check(const LieAlgebraPresentation& p, const Form& omega) {
    if (omega.degree() != 2) throw MathError("HLC requires a 2-form");
    if (!ce_differential(p, omega).is_zero()) throw MathError("HLC requires a closed 2-form");
    int n = p.dim / 2;
    HlcReport rep;
    for (int k = 0; k <= n; ++k) {
        auto src = cohomology_space(p, n - k);
        auto dst = cohomology_space(p, n + k);
        auto cup = cup_map(src, dst, p, wedge_power(omega, k));
        rep.iso_per_power.push_back(cup.iso);
    }
    rep.hlc = std::all_of(rep.iso_per_power.begin(), rep.iso_per_power.end(),
                          [](bool b) { return b; });
    return rep;
}

// ---------------------------------------------------------------------------

namespace {

StageSideReport stage_side(const CohomologySpace& space, const LieAlgebraPresentation& p,
                           const AlmostComplexStructure& j, int k) {
    StageSideReport side;
    int n = j.half_dim();
    std::vector<GRows> pair_spans;
    for (int pp = k; pp >= (k + 1) / 2; --pp) {
        int qq = k - pp;
        if (pp > n || qq > n || qq < 0) continue;
        TypeSet s{{pp, qq}};
        if (pp != qq) s.push_back({qq, pp});
        auto sub = type_subgroup(space, p, j, s, true);
        side.pair_dims.push_back(sub.dim());
        pair_spans.push_back(sub.coord_rows);
    }
    std::size_t b = std::size_t(space.betti());
    side.pure = true;
    for (std::size_t i = 0; i < pair_spans.size(); ++i)
        for (std::size_t l = i + 1; l < pair_spans.size(); ++l)
            if (!span_intersection(pair_spans[i], pair_spans[l], b).empty()) side.pure = false;
    GRows all;
    for (const auto& s : pair_spans) all.insert(all.end(), s.begin(), s.end());
    side.full = span_dim(all, b) == b;

    std::vector<GRows> cplx_spans;
    for (int pp = k; pp >= 0; --pp) {
        int qq = k - pp;
        if (pp > n || qq > n || qq < 0) continue;
        auto sub = type_subgroup(space, p, j, TypeSet{{pp, qq}}, false);
        side.complex_dims.push_back(sub.dim());
        cplx_spans.push_back(sub.coord_rows);
    }
    side.complex_pure = true;
    for (std::size_t i = 0; i < cplx_spans.size(); ++i)
        for (std::size_t l = i + 1; l < cplx_spans.size(); ++l)
            if (!span_intersection(cplx_spans[i], cplx_spans[l], b).empty())
                side.complex_pure = false;
    GRows call;
    for (const auto& s : cplx_spans) call.insert(call.end(), s.begin(), s.end());
    side.complex_full = span_dim(call, b) == b;
    return side;
}

} // namespace

StageReport purefull_stage(const LieAlgebraPresentation& p, const AlmostComplexStructure& j,
                           int stage) {
    if (!j.is_real()) throw MathError("pure/full classification requires a real structure");
    StageReport rep;
    rep.stage = stage;
    auto forms = cohomology_space(p, stage);
    auto currents = current_homology_space(p, stage);
    rep.betti = forms.betti();
    rep.forms = stage_side(forms, p, j, stage);
    rep.currents = stage_side(currents, p, j, stage);
    if (stage == 2) {
        auto plus = type_subgroup(forms, p, j, TypeSet{{1, 1}}, true);
        auto minus = type_subgroup(forms, p, j, TypeSet{{2, 0}, {0, 2}}, true);
        rep.h_plus = plus.dim();
        rep.h_minus = minus.dim();
        rep.h_intersection =
            int(span_intersection(plus.coord_rows, minus.coord_rows, std::size_t(forms.betti()))
                    .size());
    }
    return rep;
}

PureFullReport purefull_report(const LieAlgebraPresentation& p, const AlmostComplexStructure& j) {
    PureFullReport rep;
    for (int k = 0; k <= p.dim; ++k) rep.stages.push_back(purefull_stage(p, j, k));
    return rep;
}

} // namespace purefull
