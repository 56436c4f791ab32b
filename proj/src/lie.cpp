#include "purefull/lie.hpp"

#include <algorithm>
#include <cctype>

#include "purefull/errors.hpp"
#include "purefull/linalg.hpp"

namespace purefull {

namespace {

Form d_monomial(const LieAlgebraPresentation& p, Mask m) {
    // d(e^{i1..ik}) = sum_a (-1)^(a-1) (d e^{ia}) ^ e^{I \ ia}
    auto idx = indices_from_mask(m);
    Form acc(p.dim, int(idx.size()) + 1);
    for (std::size_t a = 0; a < idx.size(); ++a) {
        const Form& di = p.d[idx[a] - 1];
        if (di.is_zero()) continue;
        Mask rest = m & ~(Mask(1) << (idx[a] - 1));
        Form restf(p.dim, int(idx.size()) - 1);
        restf.set(rest, Scalar(1));
        Form term = wedge(di, restf);
        acc = (a % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}

} // namespace

Form ce_differential(const LieAlgebraPresentation& p, const Form& a) {
    if (a.dim() != p.dim) throw MathError("form dimension does not match presentation");
    Form acc(p.dim, a.degree() + 1);
    if (a.degree() >= p.dim) return acc;
    for (const auto& [m, v] : a.terms()) acc = acc + v * d_monomial(p, m);
    return acc;
}

LieAlgebraPresentation make_presentation(std::vector<Form> d_images, bool validate) {
    LieAlgebraPresentation p;
    p.dim = int(d_images.size());
    for (const auto& f : d_images) {
        if (f.dim() != p.dim) throw MathError("structure equation dimension mismatch");
        if (!f.is_zero() && f.degree() != 2) throw MathError("structure equations must be 2-forms");
        for (const auto& [m, v] : f.terms())
            if (!v.is_rational())
                throw MathError("real presentation requires rational coefficients");
    }
    p.d = std::move(d_images);
    if (validate) {
        for (int k = 1; k <= p.dim; ++k) {
            Form dd = ce_differential(p, p.d[k - 1]);
            if (!dd.is_zero())
                throw MathError("Jacobi identity fails: d(d e^" + std::to_string(k) + ") = " +
                                    to_string(dd),
                                "e^" + std::to_string(k));
        }
    }
    return p;
}

// ---------------------------------------------------------------------------
// Parser

namespace {

struct Cursor {
    const std::string& s;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    bool accept(char c) {
        if (peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }
    void expect(char c, const char* what) {
        if (!accept(c)) throw ParseError(std::string("expected '") + c + "' " + what, pos);
    }
};

struct TermSpec {
    GaussianRational coeff;
    int i = 0, j = 0;       // 1-based indices
    bool ci = false, cj = false; // conjugation markers (complex mode)
};

struct EntrySpec {
    GaussianRational lhs_scale = GaussianRational(1); // c in "c*dphi=..."
    std::vector<TermSpec> terms;                      // empty means zero entry
};

bool is_digit(char c) { return c >= '0' && c <= '9'; }

long parse_uint(Cursor& c) {
    c.skip_ws();
    std::size_t start = c.pos;
    while (c.pos < c.s.size() && is_digit(c.s[c.pos])) ++c.pos;
    if (c.pos == start) throw ParseError("expected an integer", c.pos);
    return std::stol(c.s.substr(start, c.pos - start));
}

// RATIONAL := INT ('/' INT)?; optionally followed by 'i' in complex mode.
GaussianRational parse_coefficient(Cursor& c, bool complex_mode, bool& found) {
    c.skip_ws();
    found = false;
    std::size_t save = c.pos;
    if (complex_mode && c.peek() == 'i') {
        ++c.pos;
        found = true;
        return GaussianRational::i();
    }
    if (!is_digit(c.peek())) return GaussianRational(1);
    long num = parse_uint(c);
    long den = 1;
    std::size_t after_num = c.pos;
    if (c.peek() == '/') {
        ++c.pos;
        if (!is_digit(c.peek())) {
            c.pos = after_num; // not a fraction
        } else {
            den = parse_uint(c);
            if (den == 0) throw ParseError("zero denominator", c.pos);
        }
    }
    Rational q(num, den);
    q.canonicalize();
    if (complex_mode && c.peek() == 'i') {
        ++c.pos;
        found = true;
        return GaussianRational(Rational(0), q);
    }
    // A coefficient must be followed by '*'; otherwise these digits belong to
    // a compact index pair.
    if (c.peek() == '*') {
        found = true;
        return GaussianRational(q);
    }
    c.pos = save;
    return GaussianRational(1);
}

// pair := DIGIT DIGIT | INT '^' INT, with optional primes in complex mode.
void parse_pair(Cursor& c, bool complex_mode, TermSpec& t, bool& used_compact) {
    c.skip_ws();
    std::size_t start = c.pos;
    if (!is_digit(c.peek())) throw ParseError("expected an index pair", c.pos);
    long first = parse_uint(c);
    bool ci = false;
    if (complex_mode && c.peek() == '\'') {
        ci = true;
        ++c.pos;
    }
    if (c.peek() == '^') {
        ++c.pos;
        long second = parse_uint(c);
        bool cj = false;
        if (complex_mode && c.peek() == '\'') {
            cj = true;
            ++c.pos;
        }
        t.i = int(first);
        t.j = int(second);
        t.ci = ci;
        t.cj = cj;
        used_compact = false;
        return;
    }
    // Compact form: "first" must be a two-digit token (or one digit already
    // consumed plus the next digit), possibly with primes.
    std::string digits = c.s.substr(start, c.pos - start);
    if (ci) {
        // "2'3" style: first index with prime, second digit follows
        if (digits.size() != 1) throw ParseError("compact pair needs single-digit indices", c.pos);
        if (!is_digit(c.peek())) throw ParseError("expected second index", c.pos);
        t.i = digits[0] - '0';
        t.ci = true;
        t.j = c.s[c.pos++] - '0';
        if (complex_mode && c.peek() == '\'') {
            t.cj = true;
            ++c.pos;
        }
        used_compact = true;
        return;
    }
    if (digits.size() == 2) {
        t.i = digits[0] - '0';
        t.j = digits[1] - '0';
    } else if (digits.size() == 1 && is_digit(c.peek())) {
        t.i = digits[0] - '0';
        t.j = c.s[c.pos++] - '0';
    } else {
        throw ParseError("malformed index pair '" + digits + "'", c.pos);
    }
    if (complex_mode && c.peek() == '\'') {
        t.cj = true;
        ++c.pos;
    }
    used_compact = true;
}

EntrySpec parse_entry_terms(Cursor& c, bool complex_mode, bool& used_compact) {
    EntrySpec e;
    bool first = true;
    while (true) {
        c.skip_ws();
        char ch = c.peek();
        if (ch == ',' || ch == ')' || ch == '\0') break;
        GaussianRational sign(1);
        if (c.accept('+'))
            ;
        else if (c.accept('-'))
            sign = GaussianRational(Rational(-1));
        else if (!first)
            throw ParseError("expected '+', '-' or end of entry", c.pos);
        bool has_coeff = false;
        GaussianRational coeff = parse_coefficient(c, complex_mode, has_coeff);
        if (has_coeff) c.accept('*');
        TermSpec t;
        parse_pair(c, complex_mode, t, used_compact);
        t.coeff = sign * coeff;
        e.terms.push_back(t);
        first = false;
    }
    if (e.terms.empty()) throw ParseError("empty entry", c.pos);
    return e;
}

std::vector<EntrySpec> parse_entries(const std::string& text, bool complex_mode, bool& used_compact) {
    Cursor c{text};
    c.expect('(', "to open the presentation");
    std::vector<EntrySpec> entries;
    used_compact = false;
    while (true) {
        c.skip_ws();
        if (c.peek() == '0') {
            std::size_t save = c.pos;
            ++c.pos;
            // "0" alone or "0^k"; a digit right after means a compact pair
            // starting with 0, which is invalid anyway.
            if (c.peek() == '^') {
                ++c.pos;
                long k = parse_uint(c);
                if (k <= 0) throw ParseError("zero repetition must be positive", c.pos);
                for (long r = 0; r < k; ++r) entries.push_back(EntrySpec{});
            } else if (c.peek() == ',' || c.peek() == ')') {
                entries.push_back(EntrySpec{});
            } else {
                c.pos = save;
                throw ParseError("index 0 is out of range", c.pos);
            }
        } else {
            // Optional complex prefix "c*dphi=".
            EntrySpec e;
            std::size_t save = c.pos;
            bool prefixed = false;
            if (complex_mode) {
                bool has_coeff = false;
                GaussianRational scale = parse_coefficient(c, true, has_coeff);
                c.accept('*');
                c.skip_ws();
                if (c.s.compare(c.pos, 4, "dphi") == 0) {
                    c.pos += 4;
                    c.expect('=', "after dphi");
                    e.lhs_scale = scale;
                    prefixed = true;
                } else {
                    c.pos = save;
                }
            }
            EntrySpec terms = parse_entry_terms(c, complex_mode, used_compact);
            terms.lhs_scale = prefixed ? e.lhs_scale : GaussianRational(1);
            entries.push_back(terms);
        }
        c.skip_ws();
        if (c.accept(',')) continue;
        c.expect(')', "to close the presentation");
        break;
    }
    c.skip_ws();
    if (!c.eof()) throw ParseError("trailing characters after presentation", c.pos);
    return entries;
}

} // namespace

std::vector<Form> realified_complex_coframe(const LieAlgebraPresentation& p) {
    // u^a = phi^a = e^{2a-1} + i e^{2a}, u^{n+a} = conj(phi^a).
    std::vector<Form> out;
    int n = p.half_dim();
    for (int a = 1; a <= n; ++a) {
        Form f(p.dim, 1);
        f.set(Mask(1) << (2 * a - 2), Scalar(1));
        f.set(Mask(1) << (2 * a - 1), Scalar::i());
        out.push_back(f);
    }
    for (int a = 1; a <= n; ++a) out.push_back(out[a - 1].conj());
    return out;
}

LieAlgebraPresentation parse_presentation(const std::string& text, PresentationMode mode) {
    bool complex_mode = mode == PresentationMode::Complex;
    bool used_compact = false;
    auto entries = parse_entries(text, complex_mode, used_compact);
    int count = int(entries.size());

    if (!complex_mode) {
        int dim = count;
        if (used_compact && dim > 9)
            throw ParseError("compact digit pairs require dimension <= 9; use '1^2' syntax", 0);
        std::vector<Form> d;
        for (const auto& e : entries) {
            Form f(dim, 2);
            for (const auto& t : e.terms) {
                if (t.ci || t.cj) throw ParseError("conjugation markers are complex-mode only", 0);
                if (t.i < 1 || t.i > dim || t.j < 1 || t.j > dim)
                    throw ParseError("index out of range in pair " + std::to_string(t.i) + "," +
                                         std::to_string(t.j),
                                     0);
                if (!t.coeff.is_real()) throw ParseError("imaginary coefficient in real mode", 0);
                Form pair = wedge(Form::basis(dim, {t.i}), Form::basis(dim, {t.j}));
                f = f + Scalar(t.coeff) * pair;
            }
            d.push_back(f);
        }
        auto p = make_presentation(std::move(d));
        p.text = text;
        return p;
    }

    int n = count;
    int dim = 2 * n;
    if (used_compact && n > 9)
        throw ParseError("compact digit pairs require <= 9 complex indices; use '1^2' syntax", 0);
    // Complex d phi^a over u-indices 1..n (phi) and n+1..2n (conj phi).
    std::vector<Form> complex_d;
    for (const auto& e : entries) {
        Form f(dim, 2);
        for (const auto& t : e.terms) {
            if (t.i < 1 || t.i > n || t.j < 1 || t.j > n)
                throw ParseError("complex index out of range", 0);
            int ui = t.ci ? n + t.i : t.i;
            int uj = t.cj ? n + t.j : t.j;
            Form pair = wedge(Form::basis(dim, {std::min(ui, uj)}), Form::basis(dim, {std::max(ui, uj)}));
            Scalar coeff = Scalar(t.coeff);
            if (ui > uj) coeff = -coeff;
            f = f + coeff * pair;
        }
        if (e.lhs_scale.is_zero()) throw ParseError("zero scale on dphi entry", 0);
        f = (Scalar(1) / Scalar(e.lhs_scale)) * f;
        complex_d.push_back(f);
    }
    // Realify: substitute u^j -> realified coframe forms, then split.
    LieAlgebraPresentation p;
    p.dim = dim;
    p.complex_mode = true;
    p.complex_d = complex_d;
    p.text = text;
    std::vector<Form> u = [&] {
        LieAlgebraPresentation tmp;
        tmp.dim = dim;
        return realified_complex_coframe(tmp);
    }();
    std::vector<Form> d(dim, Form(dim, 2));
    for (int a = 1; a <= n; ++a) {
        Form expanded(dim, 2);
        for (const auto& [m, v] : complex_d[a - 1].terms()) {
            auto idx = indices_from_mask(m);
            expanded = expanded + v * wedge(u[idx[0] - 1], u[idx[1] - 1]);
        }
        d[2 * a - 2] = expanded.real_part();
        d[2 * a - 1] = expanded.imag_part();
    }
    p.d = std::move(d);
    // Validate Jacobi on the realified presentation.
    auto validated = make_presentation(p.d);
    validated.complex_mode = true;
    validated.complex_d = std::move(p.complex_d);
    validated.text = text;
    return validated;
}

// ---------------------------------------------------------------------------
// Brackets and structure checks

Matrix<Rational> ad_matrix(const LieAlgebraPresentation& p, int i) {
    Matrix<Rational> m(p.dim, p.dim);
    Mask bi = Mask(1) << (i - 1);
    for (int j = 1; j <= p.dim; ++j) {
        if (j == i) continue;
        Mask bj = Mask(1) << (j - 1);
        for (int k = 1; k <= p.dim; ++k) {
            // e^k([X_i, X_j]) = -(d e^k)(X_i, X_j)
            Scalar c = p.d[k - 1].coefficient(Mask(bi | bj));
            if (c.is_zero()) continue;
            Rational v = c.as_rational();
            if (i > j) v = -v; // coefficient stored for the sorted pair
            m(k - 1, j - 1) = -v;
        }
    }
    return m;
}

std::vector<Scalar> bracket(const LieAlgebraPresentation& p, const std::vector<Scalar>& x,
                            const std::vector<Scalar>& y) {
    if (int(x.size()) != p.dim || int(y.size()) != p.dim)
        throw MathError("vector dimension mismatch in bracket");
    std::vector<Scalar> out(p.dim, Scalar(0));
    for (int k = 1; k <= p.dim; ++k) {
        const Form& dk = p.d[k - 1];
        for (const auto& [m, v] : dk.terms()) {
            auto idx = indices_from_mask(m);
            int i = idx[0], j = idx[1];
            // -(d e^k)(x, y) with d e^k = sum v e^{ij}
            Scalar contrib = v * (x[i - 1] * y[j - 1] - x[j - 1] * y[i - 1]);
            out[k - 1] -= contrib;
        }
    }
    return out;
}

namespace {

using Vec = std::vector<Rational>;

std::vector<Vec> bracket_span(const LieAlgebraPresentation& p, const std::vector<Vec>& a,
                              const std::vector<Vec>& b) {
    std::vector<Vec> rows;
    auto to_scalar = [&](const Vec& v) {
        std::vector<Scalar> s(v.size());
        for (std::size_t k = 0; k < v.size(); ++k) s[k] = Scalar(v[k]);
        return s;
    };
    for (const auto& x : a)
        for (const auto& y : b) {
            auto z = bracket(p, to_scalar(x), to_scalar(y));
            Vec r(p.dim);
            bool nonzero = false;
            for (int k = 0; k < p.dim; ++k) {
                r[k] = z[k].as_rational();
                if (r[k] != 0) nonzero = true;
            }
            if (nonzero) rows.push_back(std::move(r));
        }
    return span_canonical(rows, p.dim);
}

std::vector<Vec> full_basis(int dim) {
    std::vector<Vec> rows;
    for (int i = 0; i < dim; ++i) {
        Vec v(dim, Rational(0));
        v[i] = 1;
        rows.push_back(v);
    }
    return rows;
}

// Polynomial helpers for the all-real-eigenvalues test (coefficients low to
// high).
using Poly = std::vector<Rational>;

void poly_trim(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

int poly_deg(const Poly& p) { return int(p.size()) - 1; }

Poly poly_derivative(const Poly& p) {
    Poly d;
    for (std::size_t k = 1; k < p.size(); ++k) d.push_back(p[k] * Rational(long(k)));
    return d;
}

// Remainder of a by b.
Poly poly_rem(Poly a, const Poly& b) {
    poly_trim(a);
    while (poly_deg(a) >= poly_deg(b) && !a.empty()) {
        Rational f = a.back() / b.back();
        int shift = poly_deg(a) - poly_deg(b);
        for (std::size_t k = 0; k < b.size(); ++k) a[k + shift] -= f * b[k];
        poly_trim(a);
    }
    return a;
}

Poly poly_div(Poly a, const Poly& b) {
    poly_trim(a);
    Poly q(std::max<std::size_t>(a.size(), 1), Rational(0));
    while (poly_deg(a) >= poly_deg(b) && !a.empty()) {
        Rational f = a.back() / b.back();
        int shift = poly_deg(a) - poly_deg(b);
        q[shift] = f;
        for (std::size_t k = 0; k < b.size(); ++k) a[k + shift] -= f * b[k];
        poly_trim(a);
    }
    poly_trim(q);
    return q;
}

Poly poly_gcd(Poly a, Poly b) {
    poly_trim(a);
    poly_trim(b);
    while (!b.empty()) {
        Poly r = poly_rem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        Rational lead = a.back();
        for (auto& c : a) c /= lead;
    }
    return a;
}

int sign_at_infinity(const Poly& p, bool plus) {
    if (p.empty()) return 0;
    Rational lead = p.back();
    int s = lead > 0 ? 1 : -1;
    if (!plus && poly_deg(p) % 2 == 1) s = -s;
    return s;
}

int sturm_sign_changes(const std::vector<Poly>& chain, bool plus) {
    int changes = 0, prev = 0;
    for (const auto& p : chain) {
        int s = sign_at_infinity(p, plus);
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++changes;
        prev = s;
    }
    return changes;
}

} // namespace

bool all_eigenvalues_real(const Matrix<Rational>& a) {
    // Characteristic polynomial by Faddeev-LeVerrier.
    std::size_t n = a.rows();
    Poly p(n + 1, Rational(0));
    p[n] = 1;
    Matrix<Rational> m = Matrix<Rational>::identity(n);
    for (std::size_t k = 1; k <= n; ++k) {
        m = a * m;
        Rational tr(0);
        for (std::size_t i = 0; i < n; ++i) tr += m(i, i);
        Rational ck = -tr / Rational(long(k));
        p[n - k] = ck;
        for (std::size_t i = 0; i < n; ++i) m(i, i) += ck;
    }
    // Squarefree part, then Sturm count over all of R.
    Poly dp = poly_derivative(p);
    Poly g = poly_gcd(p, dp);
    Poly q = g.empty() || poly_deg(g) == 0 ? p : poly_div(p, g);
    poly_trim(q);
    if (poly_deg(q) <= 0) return true;
    std::vector<Poly> chain{q, poly_derivative(q)};
    while (poly_deg(chain.back()) > 0) {
        Poly r = poly_rem(chain[chain.size() - 2], chain.back());
        poly_trim(r);
        if (r.empty()) break;
        for (auto& c : r) c = -c;
        chain.push_back(std::move(r));
    }
    int distinct_real = sturm_sign_changes(chain, false) - sturm_sign_changes(chain, true);
    return distinct_real == poly_deg(q);
}

StructureReport check_presentation(const LieAlgebraPresentation& p) {
    StructureReport rep;
    rep.jacobi = true;
    for (int k = 1; k <= p.dim && rep.jacobi; ++k) {
        Form dd = ce_differential(p, p.d[k - 1]);
        if (!dd.is_zero()) {
            rep.jacobi = false;
            rep.jacobi_failure = JacobiFailure{k, dd};
        }
    }

    auto g = full_basis(p.dim);
    // Lower central series: g_1 = [g, g], g_{m+1} = [g, g_m].
    auto lcs = bracket_span(p, g, g);
    rep.nilpotency_step = 1;
    while (!lcs.empty()) {
        auto next = bracket_span(p, g, lcs);
        if (next.size() == lcs.size()) break; // stabilized, not nilpotent
        lcs = std::move(next);
        ++rep.nilpotency_step;
    }
    rep.nilpotent = lcs.empty();

    // Derived series.
    auto der = bracket_span(p, g, g);
    for (int guard = 0; guard < p.dim + 2 && !der.empty(); ++guard) {
        auto next = bracket_span(p, der, der);
        if (next.size() == der.size()) break;
        der = std::move(next);
    }
    rep.solvable = der.empty();

    rep.unimodular = true;
    bool all_real = true;
    for (int i = 1; i <= p.dim; ++i) {
        auto ad = ad_matrix(p, i);
        Rational tr(0);
        for (int k = 0; k < p.dim; ++k) tr += ad(k, k);
        if (tr != 0) rep.unimodular = false;
        if (all_real && !all_eigenvalues_real(ad)) all_real = false;
    }
    rep.completely_solvable_heuristic = rep.solvable && all_real;
    return rep;
}

LieAlgebraPresentation change_coframe_basis(const LieAlgebraPresentation& p,
                                            const Matrix<Rational>& s) {
    if (s.rows() != s.cols() || int(s.rows()) != p.dim)
        throw MathError("basis change matrix has wrong shape");
    auto sinv = inverse(s);
    if (!sinv) throw MathError("basis change matrix is singular");
    // f^i = sum_j S_ij e^j; a form in the e-basis is rewritten in the f-basis
    // by substituting e^j = sum_i (S^{-1})_ji f^i, i.e. pulling back along
    // S^{-1} viewed as a coframe substitution.
    auto rewrite = [&](const Form& f) { return pullback_endo(f, *sinv); };
    std::vector<Form> d(p.dim, Form(p.dim, 2));
    for (int i = 0; i < p.dim; ++i) {
        Form dfi(p.dim, 2);
        for (int j = 0; j < p.dim; ++j)
            if (s(i, j) != 0) dfi = dfi + Scalar(s(i, j)) * p.d[j];
        d[i] = rewrite(dfi);
    }
    return make_presentation(std::move(d));
}

} // namespace purefull
