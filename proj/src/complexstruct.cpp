#include "purefull/complexstruct.hpp"

#include <bit>
#include <sstream>

#include "purefull/errors.hpp"
#include "purefull/linalg.hpp"

namespace purefull {

namespace {

using GMat = Matrix<GaussianRational>;

GMat coframe_rows(int dim, const std::vector<Form>& coframe10) {
    int n = dim / 2;
    GMat p(dim, dim);
    for (int a = 0; a < n; ++a) {
        const Form& phi = coframe10[a];
        for (const auto& [m, v] : phi.terms()) {
            int col = std::countr_zero(m);
            p(a, col) = v.as_gaussian();
            p(n + a, col) = v.as_gaussian().conj();
        }
    }
    return p;
}

void check_square(const AlmostComplexStructure& j) {
    GMat sq = j.frame * j.frame;
    GMat minus_id = -GMat::identity(j.dim);
    if (sq != minus_id) throw MathError("J^2 != -id");
}

} // namespace

bool AlmostComplexStructure::is_real() const {
    for (std::size_t r = 0; r < frame.rows(); ++r)
        for (std::size_t c = 0; c < frame.cols(); ++c)
            if (!frame(r, c).is_real()) return false;
    return true;
}

AlmostComplexStructure acs_from_coframe(int dim, const std::vector<Form>& spec) {
    int n = dim / 2;
    if (int(spec.size()) != n)
        throw MathError("coframe spec needs " + std::to_string(n) + " entries");
    for (const auto& f : spec) {
        if (f.degree() != 1) throw MathError("coframe spec entries must have degree 1");
        if (f.dim() != dim) throw MathError("coframe spec dimension mismatch");
    }
    GMat p = coframe_rows(dim, spec);
    auto pinv = inverse(p);
    if (!pinv) throw MathError("coframe spec entries plus conjugates do not span");
    // phi о J = i phi row-wise: P J = D P with D = diag(i, .., -i, ..).
    GMat dp(dim, dim);
    for (int r = 0; r < dim; ++r)
        for (int c = 0; c < dim; ++c)
            dp(r, c) = (r < n ? GaussianRational::i() : -GaussianRational::i()) * p(r, c);
    AlmostComplexStructure j;
    j.dim = dim;
    j.frame = (*pinv) * dp;
    j.coframe10 = spec;
    check_square(j);
    if (!j.is_real()) throw MathError("coframe spec does not define a real structure");
    return j;
}

AlmostComplexStructure acs_from_matrix(const Matrix<GaussianRational>& jm) {
    if (jm.rows() != jm.cols()) throw MathError("J must be square");
    AlmostComplexStructure j;
    j.dim = int(jm.rows());
    j.frame = jm;
    check_square(j);
    // Rows phi with phi J = i phi, i.e. ker(J^T - i id).
    GMat m = jm.transpose();
    for (int r = 0; r < j.dim; ++r) m(r, r) -= GaussianRational::i();
    auto ker = kernel_basis(m);
    if (int(ker.size()) != j.dim / 2) throw MathError("J has defective i-eigenspace");
    for (const auto& v : ker) {
        Form f(j.dim, 1);
        for (int c = 0; c < j.dim; ++c)
            if (!v[c].is_zero()) f.set(Mask(1) << c, Scalar(v[c]));
        j.coframe10.push_back(f);
    }
    return j;
}

AlmostComplexStructure acs_from_matrix(const Matrix<Rational>& jm) {
    return acs_from_matrix(jm.map([](const Rational& q) { return GaussianRational(q); }));
}

AlmostComplexStructure standard_acs(int dim) {
    std::vector<Form> spec;
    for (int a = 1; a <= dim / 2; ++a) {
        Form f(dim, 1);
        f.set(Mask(1) << (2 * a - 2), Scalar(1));
        f.set(Mask(1) << (2 * a - 1), Scalar::i());
        spec.push_back(f);
    }
    return acs_from_coframe(dim, spec);
}

namespace {

Matrix<Scalar> scalar_mat(const GMat& m) {
    return m.map([](const GaussianRational& z) { return Scalar(z); });
}

struct PhiChange {
    Matrix<Scalar> p;    // u = P e
    Matrix<Scalar> pinv; // e = P^{-1} u
};

PhiChange phi_change(const AlmostComplexStructure& j) {
    GMat p = coframe_rows(j.dim, j.coframe10);
    auto pinv = inverse(p);
    if (!pinv) throw MathError("degenerate (1,0)-coframe");
    return {scalar_mat(p), scalar_mat(*pinv)};
}

} // namespace

Form to_phi_basis(const Form& e_form, const AlmostComplexStructure& j) {
    if (e_form.dim() != j.dim) throw MathError("form dimension mismatch");
    // e^i = sum_r (P^{-1})_{ir} u^r: substitute and re-expand over u-indices.
    return pullback_endo(e_form, phi_change(j).pinv);
}

Form from_phi_basis(const Form& u_form, const AlmostComplexStructure& j) {
    if (u_form.dim() != j.dim) throw MathError("form dimension mismatch");
    return pullback_endo(u_form, phi_change(j).p);
}

Form type_project(const Form& a, int p, int q, const AlmostComplexStructure& j) {
    if (p + q != a.degree()) throw MathError("type projection requires p + q = deg");
    if (p < 0 || q < 0 || p > j.half_dim() || q > j.half_dim()) return Form(a.dim(), a.degree());
    Form u = to_phi_basis(a, j);
    Mask holo = (Mask(1) << j.half_dim()) - 1;
    Form filtered(a.dim(), a.degree());
    for (const auto& [m, v] : u.terms()) {
        int pp = std::popcount(m & holo);
        int qq = std::popcount(m & ~holo);
        if (pp == p && qq == q) filtered.set(m, v);
    }
    return from_phi_basis(filtered, j);
}

std::map<std::pair<int, int>, Form> type_components(const Form& a, const AlmostComplexStructure& j) {
    std::map<std::pair<int, int>, Form> out;
    Form u = to_phi_basis(a, j);
    Mask holo = (Mask(1) << j.half_dim()) - 1;
    std::map<std::pair<int, int>, Form> filtered;
    for (const auto& [m, v] : u.terms()) {
        int pp = std::popcount(m & holo);
        int qq = std::popcount(m & ~holo);
        auto key = std::make_pair(pp, qq);
        auto it = filtered.find(key);
        if (it == filtered.end()) it = filtered.emplace(key, Form(a.dim(), a.degree())).first;
        it->second.set(m, v);
    }
    for (const auto& [key, f] : filtered) out[key] = from_phi_basis(f, j);
    return out;
}

Matrix<GaussianRational> pullback_matrix(const AlmostComplexStructure& j, int k) {
    const auto& basis = subset_masks(j.dim, k);
    GMat out(basis.size(), basis.size());
    Matrix<Scalar> js = scalar_mat(j.frame);
    for (std::size_t col = 0; col < basis.size(); ++col) {
        Form b(j.dim, k);
        b.set(basis[col], Scalar(1));
        Form image = pullback_endo(b, js);
        for (const auto& [m, v] : image.terms())
            out(subset_position(j.dim, m), col) = v.as_gaussian();
    }
    return out;
}

NijenhuisTable nijenhuis(const LieAlgebraPresentation& p, const AlmostComplexStructure& j) {
    if (p.dim != j.dim) throw MathError("structure/presentation dimension mismatch");
    NijenhuisTable table;
    auto col = [&](const GMat& m, int c) {
        std::vector<Scalar> v(p.dim);
        for (int r = 0; r < p.dim; ++r) v[r] = Scalar(m(r, c));
        return v;
    };
    auto apply_j = [&](const std::vector<Scalar>& x) {
        std::vector<Scalar> out(p.dim, Scalar(0));
        for (int r = 0; r < p.dim; ++r)
            for (int c = 0; c < p.dim; ++c)
                if (!j.frame(r, c).is_zero()) out[r] += Scalar(j.frame(r, c)) * x[c];
        return out;
    };
    for (int i = 1; i <= p.dim; ++i)
        for (int k = i + 1; k <= p.dim; ++k) {
            std::vector<Scalar> x(p.dim, Scalar(0)), y(p.dim, Scalar(0));
            x[i - 1] = Scalar(1);
            y[k - 1] = Scalar(1);
            auto jx = col(j.frame, i - 1), jy = col(j.frame, k - 1);
            auto term1 = bracket(p, jx, jy);
            auto term2 = apply_j(bracket(p, jx, y));
            auto term3 = apply_j(bracket(p, x, jy));
            auto term4 = bracket(p, x, y);
            std::vector<GaussianRational> nij(p.dim);
            bool nonzero = false;
            for (int r = 0; r < p.dim; ++r) {
                Scalar s = term1[r] - term2[r] - term3[r] - term4[r];
                nij[r] = s.as_gaussian();
                if (!nij[r].is_zero()) nonzero = true;
            }
            if (nonzero) table[{i, k}] = std::move(nij);
        }
    return table;
}

bool is_integrable(const LieAlgebraPresentation& p, const AlmostComplexStructure& j) {
    bool via_nij = nijenhuis(p, j).empty();
    bool via_type = true;
    for (const auto& phi : j.coframe10) {
        Form d = ce_differential(p, phi);
        if (!type_project(d, 0, 2, j).is_zero()) {
            via_type = false;
            break;
        }
    }
    if (via_nij != via_type)
        throw MathError("integrability routes disagree (Nijenhuis vs pi^{0,2} d)");
    return via_nij;
}

std::vector<Form> complex_structure_equations(const LieAlgebraPresentation& p,
                                              const AlmostComplexStructure& j) {
    std::vector<Form> out;
    for (const auto& phi : j.coframe10) out.push_back(to_phi_basis(ce_differential(p, phi), j));
    return out;
}

std::string phi_form_to_string(const Form& u_form, int n) {
    if (u_form.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, v] : u_form.terms()) {
        std::string idx;
        bool compact = n <= 9;
        for (int i : indices_from_mask(m)) {
            if (!idx.empty() && !compact) idx += ",";
            idx += i <= n ? std::to_string(i) : std::to_string(i - n) + "'";
        }
        std::string coeff = to_string(v);
        std::string body = u_form.degree() == 0 ? "" : "phi^{" + idx + "}";
        bool simple = coeff.find_first_of("+ ", 1) == std::string::npos;
        std::string term;
        if (!body.empty() && coeff == "1")
            term = body;
        else if (!body.empty() && coeff == "-1")
            term = "-" + body;
        else if (simple)
            term = coeff + (body.empty() ? "" : " " + body);
        else
            term = "(" + coeff + ")" + (body.empty() ? "" : " " + body);
        if (first)
            os << term;
        else if (term[0] == '-')
            os << " - " << term.substr(1);
        else
            os << " + " << term;
        first = false;
    }
    return os.str();
}

} // namespace purefull
