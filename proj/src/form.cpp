#include "purefull/form.hpp"

#include <algorithm>
#include <bit>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include "purefull/errors.hpp"

namespace purefull {

Mask mask_from_indices(const std::vector<int>& indices, int dim) {
    Mask m = 0;
    for (int i : indices) {
        if (i < 1 || i > dim) throw MathError("basis index out of range: " + std::to_string(i));
        Mask bit = Mask(1) << (i - 1);
        if (m & bit) throw MathError("repeated basis index: " + std::to_string(i));
        m |= bit;
    }
    return m;
}

std::vector<int> indices_from_mask(Mask m) {
    std::vector<int> out;
    for (int i = 0; m; ++i, m >>= 1)
        if (m & 1) out.push_back(i + 1);
    return out;
}

int merge_sign(Mask a, Mask b) {
    if (a & b) return 0;
    int inversions = 0;
    for (Mask bb = b; bb;) {
        int j = std::countr_zero(bb);
        bb &= bb - 1;
        inversions += std::popcount(a >> (j + 1));
    }
    return (inversions & 1) ? -1 : 1;
}

namespace {
void combinations(int dim, int k, std::vector<Mask>& out) {
    if (k < 0 || k > dim) return;
    if (k == 0) {
        out.push_back(0);
        return;
    }
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i + 1;
    while (true) {
        Mask m = 0;
        for (int i : idx) m |= Mask(1) << (i - 1);
        out.push_back(m);
        int p = k - 1;
        while (p >= 0 && idx[p] == dim - (k - 1 - p)) --p;
        if (p < 0) break;
        ++idx[p];
        for (int q = p + 1; q < k; ++q) idx[q] = idx[q - 1] + 1;
    }
}
} // namespace

const std::vector<Mask>& subset_masks(int dim, int k) {
    static std::map<std::pair<int, int>, std::vector<Mask>> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(dim, k);
    auto it = cache.find(key);
    if (it == cache.end()) {
        std::vector<Mask> v;
        combinations(dim, k, v);
        it = cache.emplace(key, std::move(v)).first;
    }
    return it->second;
}

std::size_t subset_position(int dim, Mask m) {
    const auto& list = subset_masks(dim, std::popcount(m));
    auto it = std::find(list.begin(), list.end(), m);
    if (it == list.end()) throw MathError("mask outside basis range");
    return std::size_t(it - list.begin());
}

Form::Form(int dim, int degree) : dim_(dim), degree_(degree) {
    if (dim < 0 || degree < 0) throw MathError("negative form dimension or degree");
}

Form Form::basis(int dim, const std::vector<int>& indices) {
    Form f(dim, int(indices.size()));
    std::vector<int> sorted = indices;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != indices) throw MathError("basis indices must be strictly increasing");
    f.c_[mask_from_indices(indices, dim)] = Scalar(1);
    return f;
}

bool Form::is_real() const { return conj() == *this; }

Scalar Form::coefficient(Mask m) const {
    auto it = c_.find(m);
    return it == c_.end() ? Scalar(0) : it->second;
}

Scalar Form::coefficient(const std::vector<int>& indices) const {
    return coefficient(mask_from_indices(indices, dim_));
}

void Form::set(Mask m, const Scalar& v) {
    if (std::popcount(m) != degree_) throw MathError("coefficient mask has wrong degree");
    if (v.is_zero())
        c_.erase(m);
    else
        c_[m] = v;
}

Form Form::operator-() const {
    Form f(dim_, degree_);
    for (const auto& [m, v] : c_) f.c_[m] = -v;
    return f;
}

Form operator+(const Form& a, const Form& b) {
    if (a.dim_ != b.dim_) throw MathError("form dimension mismatch");
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.degree_ != b.degree_) throw MathError("form degree mismatch in sum");
    Form f = a;
    for (const auto& [m, v] : b.c_) {
        auto it = f.c_.find(m);
        if (it == f.c_.end())
            f.c_[m] = v;
        else {
            it->second += v;
            if (it->second.is_zero()) f.c_.erase(it);
        }
    }
    return f;
}

Form operator-(const Form& a, const Form& b) { return a + (-b); }

Form operator*(const Scalar& s, const Form& a) {
    Form f(a.dim_, a.degree_);
    if (s.is_zero()) return f;
    for (const auto& [m, v] : a.c_) {
        Scalar p = s * v;
        if (!p.is_zero()) f.c_[m] = p;
    }
    return f;
}

bool operator==(const Form& a, const Form& b) {
    if (a.dim_ != b.dim_) return false;
    if (a.is_zero() && b.is_zero()) return true;
    return a.degree_ == b.degree_ && a.c_ == b.c_;
}

Form Form::conj() const {
    Form f(dim_, degree_);
    for (const auto& [m, v] : c_) f.c_[m] = v.conj();
    return f;
}

Form Form::real_part() const {
    Scalar half = Scalar(Rational(1, 2));
    return half * (*this + conj());
}

Form Form::imag_part() const {
    Form d = *this - conj();
    Scalar inv2i = Scalar(1) / Scalar(GaussianRational(Rational(0), Rational(2)));
    return inv2i * d;
}

Form Form::substitute_t(const GaussianRational& value) const {
    Form f(dim_, degree_);
    for (const auto& [m, v] : c_) {
        Scalar s = v.substitute_t(value);
        if (!s.is_zero()) f.c_[m] = s;
    }
    return f;
}

std::vector<Scalar> Form::coordinates() const {
    const auto& basis = subset_masks(dim_, degree_);
    std::vector<Scalar> out(basis.size(), Scalar(0));
    for (const auto& [m, v] : c_) out[subset_position(dim_, m)] = v;
    return out;
}

Form Form::from_coordinates(int dim, int degree, const std::vector<Scalar>& coords) {
    const auto& basis = subset_masks(dim, degree);
    if (coords.size() != basis.size()) throw MathError("coordinate vector has wrong length");
    Form f(dim, degree);
    for (std::size_t i = 0; i < basis.size(); ++i)
        if (!coords[i].is_zero()) f.c_[basis[i]] = coords[i];
    return f;
}

Form wedge(const Form& a, const Form& b) {
    if (a.dim() != b.dim()) throw MathError("form dimension mismatch in wedge");
    int deg = a.degree() + b.degree();
    if (deg > a.dim()) return Form::zero(a.dim(), std::min(deg, a.dim()));
    Form f(a.dim(), deg);
    for (const auto& [ma, va] : a.terms())
        for (const auto& [mb, vb] : b.terms()) {
            int s = merge_sign(ma, mb);
            if (s == 0) continue;
            Scalar term = va * vb;
            if (s < 0) term = -term;
            Mask m = ma | mb;
            Scalar cur = f.coefficient(m) + term;
            f.set(m, cur);
        }
    return f;
}

Form conjugate(const Form& a) { return a.conj(); }

Form wedge_power(const Form& a, int k) {
    Form acc = Form::unit(a.dim());
    for (int i = 0; i < k; ++i) acc = wedge(acc, a);
    return acc;
}

Form pullback_endo(const Form& phi, const Matrix<Scalar>& a) {
    if (a.rows() != a.cols() || int(a.rows()) != phi.dim())
        throw MathError("endomorphism dimension mismatch in pullback");
    int dim = phi.dim();
    // Substitution on the coframe: e^i |-> row i of A.
    std::vector<Form> rows(dim);
    for (int i = 0; i < dim; ++i) {
        Form r(dim, 1);
        for (int j = 0; j < dim; ++j) {
            Scalar v = a(i, j);
            if (!v.is_zero()) r.set(Mask(1) << j, v);
        }
        rows[i] = r;
    }
    Form out(dim, phi.degree());
    for (const auto& [m, v] : phi.terms()) {
        Form prod = Form::unit(dim);
        for (int i : indices_from_mask(m)) prod = wedge(prod, rows[i - 1]);
        out = out + v * prod;
    }
    return out;
}

Form pullback_endo(const Form& phi, const Matrix<GaussianRational>& a) {
    return pullback_endo(phi, a.map([](const GaussianRational& z) { return Scalar(z); }));
}

Form pullback_endo(const Form& phi, const Matrix<Rational>& a) {
    return pullback_endo(phi, a.map([](const Rational& q) { return Scalar(q); }));
}

Matrix<Scalar> bilinear_matrix(const Form& alpha) {
    if (alpha.degree() != 2) throw MathError("bilinear matrix requires a degree-2 form");
    int n = alpha.dim();
    Matrix<Scalar> m(n, n);
    for (const auto& [mask, v] : alpha.terms()) {
        auto idx = indices_from_mask(mask);
        m(idx[0] - 1, idx[1] - 1) = v;
        m(idx[1] - 1, idx[0] - 1) = -v;
    }
    return m;
}

Form form_from_bilinear(int dim, const Matrix<Scalar>& m) {
    Form f(dim, 2);
    for (int i = 0; i < dim; ++i)
        for (int j = i + 1; j < dim; ++j) {
            Scalar v = m(i, j);
            if (!v.is_zero()) f.set((Mask(1) << i) | (Mask(1) << j), v);
        }
    return f;
}

Form twist(const Form& alpha, const Matrix<Rational>& l) {
    if (alpha.degree() != 2) throw MathError("twist requires a degree-2 form");
    if (l.rows() != l.cols() || int(l.rows()) != alpha.dim())
        throw MathError("endomorphism dimension mismatch in twist");
    Matrix<Scalar> ls = l.map([](const Rational& q) { return Scalar(q); });
    Matrix<Scalar> m = bilinear_matrix(alpha);
    Matrix<Scalar> t = ls.transpose() * m + m * ls;
    return form_from_bilinear(alpha.dim(), t);
}

Scalar evaluate(const Form& phi, const std::vector<std::vector<Scalar>>& vectors) {
    if (int(vectors.size()) != phi.degree()) throw MathError("evaluate arity mismatch");
    int dim = phi.dim();
    // Pair with the multivector X_1 ^ ... ^ X_k built by the same wedge code.
    Form multi = Form::unit(dim);
    for (const auto& x : vectors) {
        if (int(x.size()) != dim) throw MathError("vector dimension mismatch in evaluate");
        Form v(dim, 1);
        for (int j = 0; j < dim; ++j)
            if (!x[j].is_zero()) v.set(Mask(1) << j, x[j]);
        multi = wedge(multi, v);
    }
    Scalar acc(0);
    for (const auto& [m, v] : phi.terms()) acc += v * multi.coefficient(m);
    return acc;
}

std::string to_string(const Form& f) {
    if (f.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, v] : f.terms()) {
        std::string idx;
        bool compact = f.dim() <= 9;
        for (int i : indices_from_mask(m)) {
            if (!idx.empty() && !compact) idx += ",";
            idx += std::to_string(i);
        }
        std::string coeff = to_string(v);
        std::string body = f.degree() == 0 ? "" : "e^{" + idx + "}";
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
