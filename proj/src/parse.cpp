#include "ktorus/parse.hpp"

#include <cctype>
#include <optional>

namespace ktorus {

namespace {

struct Parser {
    std::string_view text;
    std::size_t pos = 0;
    int vars;

    [[noreturn]] void fail(const std::string& what) const {
        throw InputError("parse error at position " + std::to_string(pos) + ": " + what);
    }

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }

    bool eat(char c) {
        skip_ws();
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    std::optional<long long> integer() {
        skip_ws();
        std::size_t start = pos;
        std::size_t p = pos;
        if (p < text.size() && (text[p] == '-' || text[p] == '+')) ++p;
        std::size_t digits = p;
        while (p < text.size() && std::isdigit(static_cast<unsigned char>(text[p]))) ++p;
        if (p == digits) return std::nullopt;
        long long v = 0;
        bool neg = text[start] == '-';
        for (std::size_t q = digits; q < p; ++q) {
            v = v * 10 + (text[q] - '0');
            if (v > (1ll << 62)) fail("integer literal too large");
        }
        pos = p;
        return neg ? -v : v;
    }

    // unsigned integer as an exact Rational (digits only)
    std::optional<Rational> natural() {
        skip_ws();
        std::size_t p = pos;
        if (p >= text.size() || !std::isdigit(static_cast<unsigned char>(text[p]))) return std::nullopt;
        Rational v = 0;
        while (p < text.size() && std::isdigit(static_cast<unsigned char>(text[p]))) {
            v = v * 10 + (text[p] - '0');
            ++p;
        }
        pos = p;
        return v;
    }

    bool keyword(std::string_view kw) {
        skip_ws();
        if (text.substr(pos, kw.size()) != kw) return false;
        std::size_t after = pos + kw.size();
        if (after < text.size() &&
            (std::isalnum(static_cast<unsigned char>(text[after])) || text[after] == '_'))
            return false;
        pos = after;
        return true;
    }

    AlgebraElement expr() {
        AlgebraElement acc = term();
        for (;;) {
            if (eat('+')) {
                acc += term();
            } else if (eat('-')) {
                acc -= term();
            } else {
                return acc;
            }
        }
    }

    AlgebraElement term() {
        AlgebraElement acc = factor();
        while (eat('*')) acc = acc * factor();
        return acc;
    }

    AlgebraElement factor() {
        if (eat('-')) return -factor();
        if (eat('+')) return factor();
        AlgebraElement base = primary();
        if (eat('^')) {
            auto k = integer();
            if (!k) fail("expected integer exponent after '^'");
            if (*k > 4096 || *k < -4096) fail("exponent out of range");
            if (*k >= 0) return pow(base, static_cast<int>(*k));
            return pow(invert_unit(base), static_cast<int>(-*k));
        }
        return base;
    }

    AlgebraElement primary() {
        skip_ws();
        if (pos >= text.size()) fail("unexpected end of input");
        if (eat('(')) {
            AlgebraElement inner = expr();
            if (!eat(')')) fail("expected ')'");
            return inner;
        }
        if (keyword("conj")) {
            if (!eat('(')) fail("expected '(' after conj");
            AlgebraElement inner = expr();
            if (!eat(')')) fail("expected ')'");
            return star(inner);
        }
        char c = text[pos];
        if (c == 's' || c == 'r') {
            std::size_t save = pos;
            ++pos;
            auto idx = natural();
            if (!idx) {
                pos = save;
                if (c == 's') fail("expected variable index after 's'");
                fail("expected variable index after 'r'");
            }
            long k = idx->convert_to<long>();
            if (k < 1 || k > vars) fail("variable index out of range");
            return c == 's' ? AlgebraElement::s(vars, static_cast<int>(k))
                            : AlgebraElement::r(vars, static_cast<int>(k));
        }
        if (c == 'i') {
            if (!keyword("i")) fail("unknown symbol");
            return AlgebraElement::constant(vars, GaussRational::i());
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            Rational num = *natural();
            if (eat('/')) {
                auto den = natural();
                if (!den) fail("expected denominator");
                if (*den == 0) fail("division by zero");
                return AlgebraElement::constant(vars, GaussRational(num / *den));
            }
            return AlgebraElement::constant(vars, GaussRational(num));
        }
        fail(std::string("unknown symbol '") + c + "'");
    }
};

}  // namespace

int scan_max_var(std::string_view text) {
    int best = 0;
    for (std::size_t p = 0; p + 1 < text.size(); ++p) {
        if (text[p] != 's' && text[p] != 'r') continue;
        if (p > 0 && (std::isalnum(static_cast<unsigned char>(text[p - 1])) || text[p - 1] == '_'))
            continue;
        std::size_t q = p + 1;
        int v = 0;
        while (q < text.size() && std::isdigit(static_cast<unsigned char>(text[q])) && v < 1000) {
            v = v * 10 + (text[q] - '0');
            ++q;
        }
        if (q > p + 1) best = std::max(best, v);
    }
    return best;
}

AlgebraElement parse_expr(std::string_view text, int min_vars) {
    int vars = std::max(min_vars, std::max(1, scan_max_var(text)));
    Parser p{text, 0, vars};
    AlgebraElement e = p.expr();
    p.skip_ws();
    if (p.pos != text.size()) p.fail("trailing input");
    return e;
}

}  // namespace ktorus
