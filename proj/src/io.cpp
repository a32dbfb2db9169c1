#include "bupoly/io.hpp"

#include <cctype>

namespace bupoly {

namespace {

/// Character cursor shared by the three grammars.
struct Cursor {
    std::string_view text;
    size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool done() {
        skip_ws();
        return pos >= text.size();
    }
    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }
    bool eat(char c) {
        if (peek() != c) return false;
        ++pos;
        return true;
    }
    void expect(char c, const char* what) {
        if (!eat(c))
            throw parse_error(std::string("expected '") + c + "' in " + what + " at position " +
                              std::to_string(pos) + " of \"" + std::string(text) + "\"");
    }
    long long number(const char* what) {
        skip_ws();
        size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start)
            throw parse_error(std::string("expected a number in ") + what + " at position " +
                              std::to_string(start) + " of \"" + std::string(text) + "\"");
        return std::stoll(std::string(text.substr(start, pos - start)));
    }
    [[noreturn]] void fail(const char* what) {
        throw parse_error(std::string("unexpected input in ") + what + " at position " +
                          std::to_string(pos) + " of \"" + std::string(text) + "\"");
    }
};

/// element := ['('] term (('+'|'-') term)* [')'] ; term := int ['*' 'a'] | 'a'
FieldElem parse_elem_at(const FieldCtx& ctx, Cursor& cur) {
    const bool wrapped = cur.eat('(');
    long long i = 0, j = 0;
    int sign = 1;
    if (cur.eat('-')) sign = -1;
    for (;;) {
        if (cur.peek() == 'a') {
            ++cur.pos;
            j += sign;
        } else {
            long long n = cur.number("element");
            // '*' binds to alpha only when 'a' follows; otherwise it belongs
            // to the enclosing polynomial grammar (e.g. "2*x").
            const size_t save = cur.pos;
            if (cur.eat('*') && cur.peek() == 'a') {
                ++cur.pos;
                j += sign * n;
            } else {
                cur.pos = save;
                i += sign * n;
            }
        }
        if (cur.eat('+')) {
            sign = 1;
        } else if (cur.eat('-')) {
            sign = -1;
        } else {
            break;
        }
    }
    if (wrapped) cur.expect(')', "element");
    return FieldElem(ctx, i, j);
}

bool compound(const FieldElem& e) { return e.j() != 0; }

}  // namespace

std::string to_string(const FieldElem& e) {
    if (e.j() == 0) return std::to_string(e.i());
    std::string out;
    if (e.i() != 0) out += std::to_string(e.i()) + "+";
    if (e.j() != 1) out += std::to_string(e.j()) + "*";
    out += "a";
    return out;
}

FieldElem parse_elem(const FieldCtx& ctx, std::string_view text) {
    Cursor cur{text};
    FieldElem e = parse_elem_at(ctx, cur);
    if (!cur.done()) cur.fail("element");
    return e;
}

std::string to_string(const Poly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (int k = p.degree(); k >= 0; --k) {
        const FieldElem c = p.coeff(k);
        if (c.is_zero()) continue;
        if (!out.empty()) out += "+";
        std::string cs = to_string(c);
        if (compound(c)) cs = "(" + cs + ")";
        if (k == 0) {
            out += cs;
        } else {
            if (!c.is_one()) out += cs + "*";
            out += (k == 1) ? "x" : "x^" + std::to_string(k);
        }
    }
    return out;
}

Poly parse_poly(const FieldCtx& ctx, std::string_view text) {
    Cursor cur{text};
    std::vector<FieldElem> acc;
    auto bump = [&](int k, const FieldElem& c) {
        while (static_cast<int>(acc.size()) <= k) acc.push_back(ctx.zero());
        acc[static_cast<size_t>(k)] = acc[static_cast<size_t>(k)] + c;
    };
    int sign = 1;
    if (cur.eat('-')) sign = -1;
    for (;;) {
        FieldElem coef = ctx.one();
        bool have_coef = false;
        if (cur.peek() != 'x') {
            coef = parse_elem_at(ctx, cur);
            have_coef = true;
        }
        int k = 0;
        if (cur.peek() == '*' || !have_coef) {
            if (have_coef) cur.expect('*', "polynomial");
            if (cur.peek() != 'x') cur.fail("polynomial");
            ++cur.pos;
            k = 1;
            if (cur.eat('^')) k = static_cast<int>(cur.number("exponent"));
        }
        bump(k, sign < 0 ? -coef : coef);
        if (cur.done()) break;
        if (cur.eat('+')) {
            sign = 1;
        } else if (cur.eat('-')) {
            sign = -1;
        } else {
            cur.fail("polynomial");
        }
    }
    return Poly(ctx, std::move(acc));
}

std::string to_string(const SplittingPoly& s) {
    if (s.exps.empty()) return "1";
    const char sign = (s.ctx.p == 2) ? '+' : '-';
    std::string out;
    for (const auto& [root, e] : s.exps) {
        if (!out.empty()) out += "*";
        out += "(x";
        out += sign;
        out += to_string(root);
        out += ")^" + std::to_string(e);
    }
    return out;
}

SplittingPoly parse_splitting(const FieldCtx& ctx, std::string_view text) {
    Cursor cur{text};
    SplittingPoly s(ctx);
    for (;;) {
        cur.expect('(', "factor");
        if (cur.peek() != 'x') cur.fail("factor");
        ++cur.pos;
        int sign;
        if (cur.eat('-')) {
            sign = 1;
        } else if (cur.eat('+')) {
            sign = -1;
        } else {
            cur.fail("factor");
        }
        FieldElem e = parse_elem_at(ctx, cur);
        cur.expect(')', "factor");
        int exp = 1;
        if (cur.eat('^')) exp = static_cast<int>(cur.number("exponent"));
        if (exp < 1) throw parse_error("factor exponent must be >= 1");
        s.add(sign > 0 ? e : -e, exp);
        if (cur.done()) break;
        cur.expect('*', "factored polynomial");
    }
    return s;
}

std::string to_string(const FieldCtx& ctx) {
    if (!ctx.quadratic) return "F_" + std::to_string(ctx.p);
    if (ctx.p == 2) return "F_4 (alpha^2 = alpha+1)";
    return "F_" + std::to_string(ctx.q()) + " (alpha^2 = " + std::to_string(ctx.c) + ")";
}

}  // namespace bupoly
