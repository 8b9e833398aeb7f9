#include "orepoly/textio.hpp"

#include <cctype>
#include <cstdlib>

namespace orepoly {

// ---- field specs ----

FieldSpec parse_field_spec(const std::string& text) {
    FieldSpec spec;
    size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(uint8_t(text[pos]))) ++pos;
    };
    auto expect = [&](const std::string& tok) {
        skip_ws();
        if (text.compare(pos, tok.size(), tok) != 0)
            throw parse_error("expected '" + tok + "' in field spec", pos);
        pos += tok.size();
    };
    auto read_uint = [&]() -> uint64_t {
        skip_ws();
        if (pos >= text.size() || !std::isdigit(uint8_t(text[pos])))
            throw parse_error("expected a number in field spec", pos);
        uint64_t v = 0;
        while (pos < text.size() && std::isdigit(uint8_t(text[pos]))) {
            v = v * 10 + uint64_t(text[pos] - '0');
            if (v > (uint64_t(1) << 62)) throw parse_error("number too large", pos);
            ++pos;
        }
        return v;
    };
    expect("GF");
    expect("(");
    spec.p = uint32_t(read_uint());
    skip_ws();
    if (pos < text.size() && text[pos] == '^') {
        ++pos;
        spec.n = uint32_t(read_uint());
    } else {
        spec.n = 1;
    }
    skip_ws();
    spec.s = 1;
    while (pos < text.size() && text[pos] == ';') {
        ++pos;
        skip_ws();
        if (text.compare(pos, 7, "modulus") == 0) {
            pos += 7;
            expect("=");
            spec.modulus.clear();
            while (true) {
                spec.modulus.push_back(uint32_t(read_uint()));
                skip_ws();
                if (pos < text.size() && text[pos] == ',') {
                    ++pos;
                    continue;
                }
                break;
            }
        } else if (text.compare(pos, 4, "frob") == 0) {
            pos += 4;
            expect("=");
            spec.s = uint32_t(read_uint());
        } else {
            throw parse_error("unknown field spec clause", pos);
        }
        skip_ws();
    }
    expect(")");
    skip_ws();
    if (pos != text.size()) throw parse_error("trailing characters after field spec", pos);
    return spec;
}

std::unique_ptr<SkewContext> make_context(const FieldSpec& spec) {
    return std::make_unique<SkewContext>(spec.p, spec.n, spec.s, spec.modulus);
}

// ---- element rendering over an arbitrary Gf with a generator symbol ----

namespace {

std::string render_element(const Gf& F, uint64_t packed, char sym) {
    if (packed == 0) return "0";
    std::string out;
    for (int i = int(F.degree()) - 1; i >= 0; --i) {
        uint32_t d = F.digit(packed, uint32_t(i));
        if (!d) continue;
        if (!out.empty()) out += "+";
        if (i == 0) {
            out += std::to_string(d);
        } else {
            if (d != 1) out += std::to_string(d) + "*";
            out += sym;
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

bool is_single_term(const Gf& F, uint64_t packed) {
    int nonzero = 0;
    for (uint32_t i = 0; i < F.degree(); ++i)
        if (F.digit(packed, i)) ++nonzero;
    return nonzero <= 1;
}

// ---- expression parser, shared by skew and centre polynomials ----
//
// Values are polynomials in the target ring; multiplication is evaluated in
// the written order, so skew products come out right.
template <typename V, typename Ops>
struct ExprParser {
    const std::string& text;
    size_t pos = 0;
    Ops ops;

    explicit ExprParser(const std::string& t, Ops o) : text(t), ops(o) {}

    void skip_ws() {
        while (pos < text.size() && std::isspace(uint8_t(text[pos]))) ++pos;
    }
    bool peek(char c) {
        skip_ws();
        return pos < text.size() && text[pos] == c;
    }
    bool eat(char c) {
        if (peek(c)) {
            ++pos;
            return true;
        }
        return false;
    }
    uint64_t read_uint() {
        skip_ws();
        if (pos >= text.size() || !std::isdigit(uint8_t(text[pos])))
            throw parse_error("expected a number", pos);
        uint64_t v = 0;
        while (pos < text.size() && std::isdigit(uint8_t(text[pos]))) {
            v = v * 10 + uint64_t(text[pos] - '0');
            if (v > (uint64_t(1) << 62)) throw parse_error("number too large", pos);
            ++pos;
        }
        return v;
    }

    V parse() {
        V v = expr();
        skip_ws();
        if (pos != text.size()) throw parse_error("trailing characters in polynomial", pos);
        return v;
    }

    V expr() {
        V acc = eat('-') ? ops.neg(term()) : term();
        while (true) {
            if (eat('+'))
                acc = ops.add(acc, term());
            else if (eat('-'))
                acc = ops.sub(acc, term());
            else
                return acc;
        }
    }

    V term() {
        V acc = factor();
        while (eat('*')) acc = ops.mul(acc, factor());
        return acc;
    }

    V factor() {
        V base = primary();
        if (eat('^')) {
            uint64_t e = read_uint();
            V acc = ops.one();
            for (uint64_t i = 0; i < e; ++i) acc = ops.mul(acc, base);
            return acc;
        }
        return base;
    }

    V primary() {
        skip_ws();
        if (pos >= text.size()) throw parse_error("unexpected end of polynomial", pos);
        char c = text[pos];
        if (c == '(') {
            ++pos;
            V v = expr();
            if (!eat(')')) throw parse_error("missing ')'", pos);
            return v;
        }
        if (std::isdigit(uint8_t(c))) return ops.constant(read_uint());
        if (c == ops.var_symbol) {
            ++pos;
            return ops.variable();
        }
        if (c == ops.gen_symbol) {
            ++pos;
            return ops.generator();
        }
        throw parse_error(std::string("unexpected character '") + c + "'", pos);
    }
};

struct SkewOps {
    const SkewContext* ctx;
    char var_symbol = 'X';
    char gen_symbol = 'w';
    SkewPoly add(const SkewPoly& a, const SkewPoly& b) const { return orepoly::add(a, b); }
    SkewPoly sub(const SkewPoly& a, const SkewPoly& b) const { return orepoly::sub(a, b); }
    SkewPoly mul(const SkewPoly& a, const SkewPoly& b) const { return orepoly::mul(a, b); }
    SkewPoly neg(const SkewPoly& a) const { return orepoly::neg(a); }
    SkewPoly one() const { return skew_one(*ctx); }
    SkewPoly constant(uint64_t v) const {
        return skew_const(*ctx, ctx->field().from_int(int64_t(v)));
    }
    SkewPoly variable() const { return skew_x(*ctx); }
    SkewPoly generator() const { return skew_const(*ctx, ctx->field().var()); }
};

struct CentreOps {
    const SkewContext* ctx;
    char var_symbol = 'Y';
    char gen_symbol = 'u';
    CentrePoly add(const CentrePoly& a, const CentrePoly& b) const { return c_add(a, b); }
    CentrePoly sub(const CentrePoly& a, const CentrePoly& b) const { return c_sub(a, b); }
    CentrePoly mul(const CentrePoly& a, const CentrePoly& b) const { return c_mul(a, b); }
    CentrePoly neg(const CentrePoly& a) const {
        return c_sub(centre_zero(*ctx), a);
    }
    CentrePoly one() const { return centre_one(*ctx); }
    CentrePoly constant(uint64_t v) const {
        return centre_from(*ctx, gp::Poly{ctx->subfield().from_int(int64_t(v))});
    }
    CentrePoly variable() const { return centre_from(*ctx, gp::Poly{0, 1}); }
    CentrePoly generator() const {
        return centre_from(*ctx, gp::Poly{ctx->subfield().var()});
    }
};

std::string format_poly_generic(const Gf& F, const std::vector<uint64_t>& coeffs, char var,
                                char gen) {
    if (coeffs.empty()) return "0";
    std::string out;
    for (int i = int(coeffs.size()) - 1; i >= 0; --i) {
        uint64_t c = coeffs[size_t(i)];
        if (!c) continue;
        if (!out.empty()) out += " + ";
        if (i == 0) {
            out += render_element(F, c, gen);
            continue;
        }
        std::string xs = (i == 1) ? std::string(1, var) : std::string(1, var) + "^" + std::to_string(i);
        if (c == 1) {
            out += xs;
        } else if (is_single_term(F, c)) {
            out += render_element(F, c, gen) + "*" + xs;
        } else {
            out += "(" + render_element(F, c, gen) + ")*" + xs;
        }
    }
    return out.empty() ? "0" : out;
}

}  // namespace

std::string format_element(const SkewContext& ctx, uint64_t packed) {
    return render_element(ctx.field(), packed, 'w');
}

std::string format_subfield_element(const SkewContext& ctx, uint64_t packed) {
    return render_element(ctx.subfield(), packed, 'u');
}

SkewPoly parse_skew_poly(const SkewContext& ctx, const std::string& text) {
    ExprParser<SkewPoly, SkewOps> p(text, SkewOps{&ctx});
    return p.parse();
}

std::string format_skew_poly(const SkewPoly& p) {
    return format_poly_generic(p.ctx().field(), p.coeffs(), 'X', 'w');
}

CentrePoly parse_centre_poly(const SkewContext& ctx, const std::string& text) {
    std::string body = text;
    size_t hash = body.find('#');
    if (hash != std::string::npos) body = body.substr(0, hash);
    ExprParser<CentrePoly, CentreOps> p(body, CentreOps{&ctx});
    return p.parse();
}

std::string format_centre_poly(const CentrePoly& c, bool with_tag) {
    std::string s = format_poly_generic(c.ctx->subfield(), c.c, 'Y', 'u');
    if (with_tag) s += "  # Y = X^r";
    return s;
}

}  // namespace orepoly
