#include "purefull/formexpr.hpp"

#include <cctype>

#include "purefull/errors.hpp"

namespace purefull {

namespace {

struct Lex {
    std::string s;
    std::size_t pos = 0;
    void skip() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    char peek() {
        skip();
        return pos < s.size() ? s[pos] : '\0';
    }
    bool starts(const char* word) {
        skip();
        return s.compare(pos, std::string(word).size(), word) == 0;
    }
};

long lex_uint(Lex& lx) {
    lx.skip();
    std::size_t start = lx.pos;
    while (lx.pos < lx.s.size() && std::isdigit(static_cast<unsigned char>(lx.s[lx.pos]))) ++lx.pos;
    if (lx.pos == start) throw ParseError("expected an integer", lx.pos);
    return std::stol(lx.s.substr(start, lx.pos - start));
}

Form parse_atom(Lex& lx, const FormExprContext& ctx) {
    lx.skip();
    if (lx.starts("phibar")) {
        lx.pos += 6;
        long k = lex_uint(lx);
        if (ctx.coframe10.empty()) throw ParseError("phibar atom without a coframe context", lx.pos);
        if (k < 1 || k > long(ctx.coframe10.size())) throw ParseError("phibar index out of range", lx.pos);
        return ctx.coframe10[std::size_t(k - 1)].conj();
    }
    if (lx.starts("phi")) {
        lx.pos += 3;
        long k = lex_uint(lx);
        if (ctx.coframe10.empty()) throw ParseError("phi atom without a coframe context", lx.pos);
        if (k < 1 || k > long(ctx.coframe10.size())) throw ParseError("phi index out of range", lx.pos);
        return ctx.coframe10[std::size_t(k - 1)];
    }
    if (lx.peek() == 'e') {
        ++lx.pos;
        std::vector<int> idx;
        if (lx.peek() == '{') {
            ++lx.pos;
            while (true) {
                idx.push_back(int(lex_uint(lx)));
                if (lx.peek() == ',') {
                    ++lx.pos;
                    continue;
                }
                if (lx.peek() == '}') {
                    ++lx.pos;
                    break;
                }
                throw ParseError("expected ',' or '}' in index list", lx.pos);
            }
        } else {
            lx.skip();
            if (!std::isdigit(static_cast<unsigned char>(lx.peek())))
                throw ParseError("expected indices after 'e'", lx.pos);
            while (lx.pos < lx.s.size() && std::isdigit(static_cast<unsigned char>(lx.s[lx.pos]))) {
                idx.push_back(lx.s[lx.pos] - '0');
                ++lx.pos;
            }
            if (ctx.dim > 9)
                throw ParseError("compact e-indices need dimension <= 9; use e{..}", lx.pos);
        }
        for (std::size_t a = 1; a < idx.size(); ++a)
            if (idx[a] <= idx[a - 1]) throw ParseError("indices must be strictly increasing", lx.pos);
        for (int i : idx)
            if (i < 1 || i > ctx.dim) throw ParseError("index out of range", lx.pos);
        return Form::basis(ctx.dim, idx);
    }
    throw ParseError("expected a form atom", lx.pos);
}

std::optional<Scalar> try_factor(Lex& lx, const FormExprContext& ctx) {
    lx.skip();
    if (lx.starts("tbar")) {
        lx.pos += 4;
        return Scalar::tbar(ctx.series_order);
    }
    // 't' but not the start of an atom keyword.
    if (lx.peek() == 't') {
        ++lx.pos;
        return Scalar::t(ctx.series_order);
    }
    if (lx.peek() == 'i') {
        ++lx.pos;
        return Scalar::i();
    }
    if (std::isdigit(static_cast<unsigned char>(lx.peek()))) {
        long num = lex_uint(lx);
        long den = 1;
        if (lx.peek() == '/') {
            ++lx.pos;
            den = lex_uint(lx);
            if (den == 0) throw ParseError("zero denominator", lx.pos);
        }
        Rational q(num, den);
        q.canonicalize();
        return Scalar(q);
    }
    return std::nullopt;
}

Form parse_term(Lex& lx, const FormExprContext& ctx) {
    Scalar coeff(1);
    while (true) {
        lx.skip();
        // An atom?
        char c = lx.peek();
        if (c == 'e' || lx.starts("phi")) break;
        if (c == 't' || c == 'i' || std::isdigit(static_cast<unsigned char>(c))) {
            auto f = try_factor(lx, ctx);
            if (!f) throw ParseError("expected a scalar factor", lx.pos);
            coeff *= *f;
            lx.skip();
            if (lx.peek() == '*') {
                ++lx.pos;
                continue;
            }
            // Implicit multiplication before an atom or another factor.
            char n = lx.peek();
            if (n == 'e' || lx.starts("phi") || n == 't' || n == 'i' ||
                std::isdigit(static_cast<unsigned char>(n)))
                continue;
            // Pure scalar term (degree 0).
            return coeff * Form::unit(ctx.dim);
        }
        throw ParseError("expected a term", lx.pos);
    }
    Form atom = parse_atom(lx, ctx);
    return coeff * atom;
}

} // namespace

Form parse_form_expr(const std::string& text, const FormExprContext& ctx) {
    if (ctx.dim <= 0) throw ConfigError("form expression context needs a dimension");
    Lex lx{text};
    Form acc(ctx.dim, 0);
    bool first = true;
    bool any = false;
    while (true) {
        lx.skip();
        if (lx.pos >= lx.s.size()) break;
        Scalar sign(1);
        if (lx.peek() == '+') {
            ++lx.pos;
        } else if (lx.peek() == '-') {
            sign = Scalar(-1);
            ++lx.pos;
        } else if (!first) {
            throw ParseError("expected '+' or '-'", lx.pos);
        }
        Form term = parse_term(lx, ctx);
        Form signed_term = sign * term;
        if (!any) {
            acc = signed_term;
            any = true;
        } else {
            acc = acc + signed_term;
        }
        first = false;
    }
    if (!any) throw ParseError("empty form expression", lx.pos);
    return acc;
}

} // namespace purefull
