#include "purefull/hermitian.hpp"

#include <random>

#include "purefull/errors.hpp"
#include "purefull/linalg.hpp"

namespace purefull {

namespace {

using GMat = Matrix<GaussianRational>;

GMat to_gaussian(const Matrix<Rational>& m) {
    return m.map([](const Rational& q) { return GaussianRational(q); });
}

Rational leading_minor(const Matrix<Rational>& m, std::size_t k) {
    Matrix<Rational> sub(k, k);
    for (std::size_t r = 0; r < k; ++r)
        for (std::size_t c = 0; c < k; ++c) sub(r, c) = m(r, c);
    return determinant(sub);
}

Form fundamental_form(const AlmostComplexStructure& j) {
    // (i/2) sum phi^a ^ conj(phi^a); real by construction.
    Form omega(j.dim, 2);
    Scalar half_i = Scalar(GaussianRational(Rational(0), Rational(1, 2)));
    for (const auto& phi : j.coframe10) omega = omega + half_i * wedge(phi, phi.conj());
    if (!omega.is_real()) throw MathError("fundamental form is not real");
    return omega;
}

Rational factorial(int n) {
    Rational f(1);
    for (int k = 2; k <= n; ++k) f *= k;
    return f;
}

void finish(HermitianData& h) {
    int dim = h.pres.dim;
    if (!positive_definite(h.gram1)) throw MathError("metric is not positive definite");
    // Volume: omega^n / n!, normalized to a positive coefficient.
    Form top = wedge_power(h.omega, dim / 2);
    Mask full = dim == 32 ? ~Mask(0) : (Mask(1) << dim) - 1;
    Scalar c = top.coefficient(full) / Scalar(factorial(dim / 2));
    if (c.is_zero()) throw MathError("degenerate fundamental form");
    Rational coeff = c.as_rational();
    if (coeff < 0) coeff = -coeff;
    h.vol = Form(dim, dim);
    h.vol.set(full, Scalar(coeff));
    // <vol, vol> = coeff^2 det(gram1) must be exactly 1.
    Matrix<Rational> g = h.gram1;
    if (coeff * coeff * determinant(g) != 1)
        throw MathError("volume normalization failed: <vol,vol> != 1");
    h.gram_cache_.assign(std::size_t(dim) + 1, Matrix<Rational>());
    h.gram_ready_.assign(std::size_t(dim) + 1, false);
}

} // namespace

bool positive_definite(const Matrix<Rational>& sym) {
    if (sym.rows() != sym.cols()) return false;
    for (std::size_t r = 0; r < sym.rows(); ++r)
        for (std::size_t c = r + 1; c < sym.cols(); ++c)
            if (sym(r, c) != sym(c, r)) return false;
    for (std::size_t k = 1; k <= sym.rows(); ++k)
        if (leading_minor(sym, k) <= 0) return false;
    return true;
}

const Matrix<Rational>& HermitianData::gram(int k) const {
    if (k < 0 || k > pres.dim) throw MathError("gram degree out of range");
    if (gram_ready_[std::size_t(k)]) return gram_cache_[std::size_t(k)];
    const auto& basis = subset_masks(pres.dim, k);
    Matrix<Rational> g(basis.size(), basis.size());
    bool identity1 = gram1 == Matrix<Rational>::identity(pres.dim);
    if (identity1) {
        for (std::size_t i = 0; i < basis.size(); ++i) g(i, i) = 1;
    } else {
        for (std::size_t i = 0; i < basis.size(); ++i) {
            auto rows = indices_from_mask(basis[i]);
            for (std::size_t l = i; l < basis.size(); ++l) {
                auto cols = indices_from_mask(basis[l]);
                Matrix<Rational> minor(rows.size(), cols.size());
                for (std::size_t r = 0; r < rows.size(); ++r)
                    for (std::size_t c = 0; c < cols.size(); ++c)
                        minor(r, c) = gram1(rows[r] - 1, cols[c] - 1);
                Rational v = k == 0 ? Rational(1) : determinant(minor);
                g(i, l) = v;
                g(l, i) = v;
            }
        }
    }
    gram_cache_[std::size_t(k)] = std::move(g);
    gram_ready_[std::size_t(k)] = true;
    return gram_cache_[std::size_t(k)];
}

HermitianData make_hermitian_default(const LieAlgebraPresentation& p,
                                     const AlmostComplexStructure& j) {
    if (p.dim != j.dim) throw MathError("presentation/structure dimension mismatch");
    HermitianData h{p, j, Matrix<Rational>(), Form(), Form(), {}, {}};
    // g = sum Re phi (x) Re phi + Im phi (x) Im phi on vectors; the coframe
    // Gram matrix is the inverse of C^T C for C the realified coframe rows.
    int dim = p.dim;
    Matrix<Rational> cmat(dim, dim);
    for (int a = 0; a < dim / 2; ++a) {
        Form re = j.coframe10[a].real_part();
        Form im = j.coframe10[a].imag_part();
        for (int col = 0; col < dim; ++col) {
            cmat(2 * a, col) = re.coefficient(Mask(1) << col).as_rational();
            cmat(2 * a + 1, col) = im.coefficient(Mask(1) << col).as_rational();
        }
    }
    auto gv = cmat.transpose() * cmat;
    auto inv = inverse(gv);
    if (!inv) throw MathError("degenerate coframe metric");
    h.gram1 = *inv;
    h.omega = fundamental_form(j);
    finish(h);
    return h;
}

HermitianData make_hermitian_from_pair(const LieAlgebraPresentation& p,
                                       const AlmostComplexStructure& j, const Form& omega) {
    auto pred = form_predicates(p, j, omega);
    if (!pred.compatible) throw MathError("(omega, J) is not a compatible pair");
    HermitianData h{p, j, Matrix<Rational>(), Form(), Form(), {}, {}};
    int dim = p.dim;
    // g(X, Y) = omega(X, JY) on the frame: G = M_omega * J.
    Matrix<Scalar> m = bilinear_matrix(omega);
    Matrix<Scalar> g = m * j.frame.map([](const GaussianRational& z) { return Scalar(z); });
    Matrix<Rational> gv(dim, dim);
    for (int r = 0; r < dim; ++r)
        for (int c = 0; c < dim; ++c) gv(r, c) = g(r, c).as_rational();
    auto inv = inverse(gv);
    if (!inv) throw MathError("degenerate metric from (omega, J)");
    h.gram1 = *inv;
    h.omega = omega;
    finish(h);
    return h;
}

GaussianRational inner_product(const HermitianData& h, const Form& a, const Form& b) {
    if (a.dim() != h.pres.dim || b.dim() != h.pres.dim) throw MathError("dimension mismatch");
    if (a.is_zero() || b.is_zero()) return GaussianRational(0);
    if (a.degree() != b.degree()) throw MathError("inner product degree mismatch");
    const auto& g = h.gram(a.degree());
    GaussianRational acc(0);
    for (const auto& [ma, va] : a.terms()) {
        std::size_t i = subset_position(h.pres.dim, ma);
        for (const auto& [mb, vb] : b.terms()) {
            std::size_t l = subset_position(h.pres.dim, mb);
            if (g(i, l) == 0) continue;
            acc += va.as_gaussian() * vb.as_gaussian().conj() * GaussianRational(g(i, l));
        }
    }
    return acc;
}

Form hodge_star(const HermitianData& h, const Form& a) {
    int dim = h.pres.dim;
    if (a.dim() != dim) throw MathError("dimension mismatch");
    int k = a.degree();
    const auto& g = h.gram(k);
    const auto& basis = subset_masks(dim, k);
    Mask full = (Mask(1) << dim) - 1;
    Rational vcoeff = h.vol.coefficient(full).as_rational();
    // (star a)_{I^c} = vcoeff * (G_k a)_I * sign(I, I^c), complex-bilinear.
    std::vector<Scalar> coords = a.coordinates();
    Form out(dim, dim - k);
    for (std::size_t i = 0; i < basis.size(); ++i) {
        Scalar gi(0);
        for (std::size_t l = 0; l < basis.size(); ++l)
            if (g(i, l) != 0 && !coords[l].is_zero()) gi += Scalar(g(i, l)) * coords[l];
        if (gi.is_zero()) continue;
        Mask ic = full & ~basis[i];
        int sgn = merge_sign(basis[i], ic);
        Scalar v = Scalar(vcoeff) * gi;
        if (sgn < 0) v = -v;
        Scalar cur = out.coefficient(ic) + v;
        out.set(ic, cur);
    }
    return out;
}

Matrix<GaussianRational> operator_matrix(const HermitianData& h, DiffOp op, int k) {
    const auto& src = subset_masks(h.pres.dim, k);
    const auto& dst = subset_masks(h.pres.dim, k + 1);
    GMat m(dst.size(), src.size());
    for (std::size_t c = 0; c < src.size(); ++c) {
        Form b(h.pres.dim, k);
        b.set(src[c], Scalar(1));
        Form image(h.pres.dim, k + 1);
        if (op == DiffOp::D) {
            image = ce_differential(h.pres, b);
        } else {
            for (const auto& [pq, comp] : type_components(b, h.j)) {
                Form dcomp = ce_differential(h.pres, comp);
                int pp = op == DiffOp::Del ? pq.first + 1 : pq.first;
                int qq = op == DiffOp::Del ? pq.second : pq.second + 1;
                if (pp > h.j.half_dim() || qq > h.j.half_dim()) continue;
                image = image + type_project(dcomp, pp, qq, h.j);
            }
        }
        for (const auto& [mask, v] : image.terms())
            m(subset_position(h.pres.dim, mask), c) = v.as_gaussian();
    }
    return m;
}

Matrix<GaussianRational> adjoint_matrix(const HermitianData& h, DiffOp op, int k) {
    // <P a, b>_{k+1} = <a, P* b>_k  =>  P* = G_k^{-1} P^H G_{k+1}.
    GMat pm = operator_matrix(h, op, k);
    GMat ph = pm.transpose().map([](const GaussianRational& z) { return z.conj(); });
    auto gk_inv = inverse(to_gaussian(h.gram(k)));
    if (!gk_inv) throw MathError("singular Gram matrix");
    return (*gk_inv) * ph * to_gaussian(h.gram(k + 1));
}

Form apply_adjoint(const HermitianData& h, DiffOp op, const Form& a) {
    int k = a.degree() - 1;
    if (k < 0) return Form(h.pres.dim, 0);
    GMat adj = adjoint_matrix(h, op, k);
    std::vector<Scalar> coords = a.coordinates();
    GVec v(coords.size());
    for (std::size_t i = 0; i < coords.size(); ++i) v[i] = coords[i].as_gaussian();
    GVec image = adj.apply(v);
    std::vector<Scalar> sc(image.size());
    for (std::size_t i = 0; i < image.size(); ++i) sc[i] = Scalar(image[i]);
    return Form::from_coordinates(h.pres.dim, k, sc);
}

std::vector<Form> harmonic_space(const HermitianData& h, int k) {
    auto d = d_matrix(h.pres, k);
    GMat dg = to_gaussian(d);
    GMat dstar = k == 0 ? GMat(1, subset_masks(h.pres.dim, 0).size())
                        : adjoint_matrix(h, DiffOp::D, k - 1);
    GMat stacked(dg.rows() + dstar.rows(), dg.cols());
    for (std::size_t r = 0; r < dg.rows(); ++r)
        for (std::size_t c = 0; c < dg.cols(); ++c) stacked(r, c) = dg(r, c);
    for (std::size_t r = 0; r < dstar.rows(); ++r)
        for (std::size_t c = 0; c < dstar.cols(); ++c) stacked(dg.rows() + r, c) = dstar(r, c);
    auto ker = kernel_basis(stacked);
    std::vector<Form> out;
    for (const auto& v : ker) {
        std::vector<Scalar> sc(v.size());
        for (std::size_t i = 0; i < v.size(); ++i) sc[i] = Scalar(v[i]);
        out.push_back(Form::from_coordinates(h.pres.dim, k, sc));
    }
    return out;
}

// ---------------------------------------------------------------------------

PredicateReport form_predicates(const LieAlgebraPresentation& p, const AlmostComplexStructure& j,
                                const Form& omega) {
    if (omega.degree() != 2) throw MathError("predicates require a degree-2 form");
    if (!omega.is_real()) throw MathError("predicates require a real form");
    if (omega.dim() != p.dim || j.dim != p.dim) throw MathError("dimension mismatch");
    PredicateReport rep;
    int n = p.dim / 2;
    rep.nondegenerate = !wedge_power(omega, n).is_zero();
    // Taming: symmetric part of omega(., J.) positive definite.
    Matrix<Scalar> b =
        bilinear_matrix(omega) * j.frame.map([](const GaussianRational& z) { return Scalar(z); });
    Matrix<Rational> sym(p.dim, p.dim);
    for (int r = 0; r < p.dim; ++r)
        for (int c = 0; c < p.dim; ++c) {
            Scalar s = (b(r, c) + b(c, r)) / Scalar(2);
            sym(r, c) = s.as_rational();
        }
    rep.taming = positive_definite(sym);
    rep.compatible = rep.taming && pullback_endo(omega, j.frame) == omega;
    rep.d_omega = ce_differential(p, omega);
    rep.closed = rep.d_omega.is_zero();
    rep.almost_kahler = rep.compatible && rep.closed;
    rep.d_omega_power = ce_differential(p, wedge_power(omega, n - 1));
    rep.semi_kahler = rep.compatible && rep.d_omega_power.is_zero();
    rep.integrable = is_integrable(p, j);
    rep.balanced = rep.semi_kahler && rep.integrable;
    if (rep.closed) rep.hlc = hlc_check(p, omega).hlc;
    return rep;
}

// ---------------------------------------------------------------------------

PositivityVerdict positivity_on_complex_hyperplanes(const LieAlgebraPresentation& p,
                                                    const AlmostComplexStructure& j,
                                                    const Form& phi,
                                                    const std::optional<Form>& power_root,
                                                    int trials, unsigned seed) {
    int n = p.dim / 2;
    if (phi.degree() != p.dim - 2) throw MathError("positivity requires a (2n-2)-form");
    if (!phi.is_real()) throw MathError("positivity requires a real form");
    PositivityVerdict v;
    if (power_root) {
        const Form& psi = *power_root;
        if (psi.degree() != 2 || !psi.is_real()) throw MathError("power root must be a real 2-form");
        if (wedge_power(psi, n - 1) != phi)
            throw MathError("power root does not reproduce the form");
        bool j_invariant = pullback_endo(psi, j.frame) == psi;
        auto pred = form_predicates(p, j, psi);
        if (j_invariant && pred.taming) {
            v.status = PositivityVerdict::Status::ExactPositive;
            v.note = "exact: (n-1)-st power of a J-taming real (1,1)-form";
            return v;
        }
    }
    std::mt19937 rng(seed);
    auto rand_rational = [&rng]() {
        long num = long(rng() % 19) - 9;
        long den = long(rng() % 3) + 1;
        Rational q(num, den);
        q.canonicalize();
        return q;
    };
    Matrix<Scalar> js = j.frame.map([](const GaussianRational& z) { return Scalar(z); });
    for (int t = 0; t < trials; ++t) {
        std::vector<std::vector<Rational>> xs;
        std::vector<std::vector<Scalar>> span;
        for (int a = 0; a < n - 1; ++a) {
            std::vector<Rational> x(p.dim);
            std::vector<Scalar> xsc(p.dim);
            for (int i = 0; i < p.dim; ++i) {
                x[i] = rand_rational();
                xsc[i] = Scalar(x[i]);
            }
            xs.push_back(std::move(x));
            std::vector<Scalar> jx(p.dim, Scalar(0));
            for (int r = 0; r < p.dim; ++r)
                for (int c = 0; c < p.dim; ++c)
                    if (!js(r, c).is_zero()) jx[r] += js(r, c) * xsc[c];
            span.push_back(std::move(xsc));
            span.push_back(std::move(jx));
        }
        // The sampled subspace must be a genuine complex (n-1)-plane.
        Matrix<Rational> rows(span.size(), p.dim);
        for (std::size_t r = 0; r < span.size(); ++r)
            for (int c = 0; c < p.dim; ++c) rows(r, c) = span[r][c].as_rational();
        if (rank(rows) != span.size()) continue;
        ++v.trials_run;
        Scalar value = evaluate(phi, span);
        Rational q = value.as_rational();
        if (q <= 0) {
            v.status = PositivityVerdict::Status::Counterexample;
            v.counterexample = xs;
            v.value = q;
            v.note = "non-positive value on a sampled complex (n-1)-subspace";
            return v;
        }
    }
    v.status = PositivityVerdict::Status::NoCounterexampleFound;
    v.note = "no counterexample found in " + std::to_string(v.trials_run) +
             " trials (sampling refutes, it does not certify)";
    return v;
}

} // namespace purefull
