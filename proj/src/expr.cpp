#include "heatsym/expr.hpp"

#include <cctype>
#include <sstream>

namespace heatsym {

namespace {

struct Parser {
    const std::string& src;
    size_t pos = 0;

    void skip_ws() {
        while (pos < src.size() && std::isspace(static_cast<unsigned char>(src[pos]))) ++pos;
    }
    bool at_end() {
        skip_ws();
        return pos >= src.size();
    }
    char peek() {
        skip_ws();
        return pos < src.size() ? src[pos] : '\0';
    }
    [[noreturn]] void fail(const std::string& msg) { throw ExprError(pos, msg); }

    ExprAst parse() {
        ExprAst e = expr();
        if (!at_end()) fail("unexpected trailing input");
        return e;
    }

    ExprAst expr() {
        ExprAst acc;
        bool lead_neg = false;
        if (peek() == '-') {
            ++pos;
            lead_neg = true;
        } else if (peek() == '+') {
            ++pos;
        }
        acc = term();
        if (lead_neg) {
            ExprAst neg{ExprAst::Kind::neg};
            neg.children.push_back(std::move(acc));
            acc = std::move(neg);
        }
        while (!at_end()) {
            char c = peek();
            if (c != '+' && c != '-') break;
            ++pos;
            ExprAst node{c == '+' ? ExprAst::Kind::add : ExprAst::Kind::sub};
            node.children.push_back(std::move(acc));
            node.children.push_back(term());
            acc = std::move(node);
        }
        return acc;
    }

    ExprAst term() {
        ExprAst acc = factor();
        for (;;) {
            if (at_end()) break;
            char c = peek();
            if (c == '*') {
                ++pos;
            } else if (!starts_factor(c)) {
                break;
            }
            ExprAst node{ExprAst::Kind::mul};
            node.children.push_back(std::move(acc));
            node.children.push_back(factor());
            acc = std::move(node);
        }
        return acc;
    }

    static bool starts_factor(char c) {
        return std::isdigit(static_cast<unsigned char>(c)) || c == '(' || c == 'U' || c == 'x' ||
               c == 'y' || c == 'z' || c == 't';
    }

    ExprAst factor() {
        char c = peek();
        if (std::isdigit(static_cast<unsigned char>(c))) return number();
        if (c == '(') {
            ++pos;
            ExprAst inner = expr();
            if (peek() != ')') fail("expected ')'");
            ++pos;
            return inner;
        }
        if (c == 'U') return jet_symbol();
        if (c == 'x' || c == 'y' || c == 'z' || c == 't') return variable();
        if (c == '\0') fail("unexpected end of input");
        fail(std::string("unknown symbol '") + c + "'");
    }

    ExprAst number() {
        std::string digits = read_digits();
        std::string text = digits;
        size_t save = pos;
        skip_ws();
        if (pos < src.size() && src[pos] == '/') {
            ++pos;
            skip_ws();
            if (pos >= src.size() || !std::isdigit(static_cast<unsigned char>(src[pos])))
                fail("expected digits after '/'");
            text += "/" + read_digits();
        } else {
            pos = save;
        }
        ExprAst node{ExprAst::Kind::number};
        node.number = Rational::parse(text);
        return node;
    }

    std::string read_digits() {
        std::string s;
        while (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos])))
            s += src[pos++];
        return s;
    }

    ExprAst variable() {
        char c = src[pos++];
        ExprAst node{ExprAst::Kind::variable};
        node.variable = c == 'x' ? Var::x : c == 'y' ? Var::y : c == 'z' ? Var::z : Var::t;
        node.power = 1;
        size_t save = pos;
        skip_ws();
        if (pos < src.size() && src[pos] == '^') {
            ++pos;
            skip_ws();
            if (pos >= src.size() || !std::isdigit(static_cast<unsigned char>(src[pos])))
                fail("expected integer exponent after '^'");
            node.power = static_cast<unsigned>(std::stoul(read_digits()));
        } else {
            pos = save;
        }
        return node;
    }

    ExprAst jet_symbol() {
        ++pos;  // 'U'
        ExprAst node{ExprAst::Kind::jet};
        while (pos < src.size()) {
            char c = src[pos];
            if (c == 'x') node.jet.i++;
            else if (c == 'y') node.jet.j++;
            else if (c == 'z') node.jet.k++;
            else if (c == 't') node.jet.m++;
            else break;
            ++pos;
        }
        return node;
    }
};

// Affine value during lowering: a U-free polynomial plus a part linear in U.
struct LinValue {
    Polynomial poly;
    DiffFunction jet;
};

LinValue lower(const ExprAst& ast) {
    switch (ast.kind) {
        case ExprAst::Kind::number:
            return {Polynomial::constant(ast.number), {}};
        case ExprAst::Kind::variable:
            return {Polynomial::variable(ast.variable, ast.power), {}};
        case ExprAst::Kind::jet:
            return {{}, DiffFunction::term(ast.jet, Polynomial::one())};
        case ExprAst::Kind::neg: {
            LinValue v = lower(ast.children[0]);
            return {-v.poly, -v.jet};
        }
        case ExprAst::Kind::add: {
            LinValue a = lower(ast.children[0]), b = lower(ast.children[1]);
            return {a.poly + b.poly, a.jet + b.jet};
        }
        case ExprAst::Kind::sub: {
            LinValue a = lower(ast.children[0]), b = lower(ast.children[1]);
            return {a.poly - b.poly, a.jet - b.jet};
        }
        case ExprAst::Kind::mul: {
            LinValue a = lower(ast.children[0]), b = lower(ast.children[1]);
            if (!a.jet.is_zero() && !b.jet.is_zero())
                throw ExprError(0, "product of jet symbols: expression must be linear in U");
            return {a.poly * b.poly, a.jet.times(b.poly) + b.jet.times(a.poly)};
        }
    }
    throw ExprError(0, "malformed expression tree");
}

}  // namespace

ExprAst parse_expr(const std::string& src) {
    Parser p{src};
    return p.parse();
}

DiffFunction lower_to_diff(const ExprAst& ast) {
    LinValue v = lower(ast);
    if (!v.poly.is_zero())
        throw ExprError(0, "U-independent term '" + v.poly.str() +
                               "': a characteristic must be linear in U");
    return v.jet;
}

DiffFunction parse_characteristic(const std::string& src) {
    return normalize(lower_to_diff(parse_expr(src))).normal;
}

namespace {

// single-monomial coefficient as a prefix, e.g. "2t*", "", "3/4*"
std::string coeff_prefix(const MonomialExp& e, const Rational& mag) {
    std::ostringstream out;
    std::string vars;
    for (Var v : kAllVars) {
        unsigned p = e.get(v);
        if (p == 0) continue;
        vars += var_name(v);
        if (p > 1) vars += "^" + std::to_string(p);
    }
    if (vars.empty()) {
        if (mag.is_one()) return "";
        return mag.str() + "*";
    }
    if (!mag.is_one()) out << mag.str();
    out << vars << "*";
    return out.str();
}

}  // namespace

std::string render(const DiffFunction& f) {
    if (f.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    // highest-order jet variables first, mirroring the usual written layout
    for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
        const auto& [d, p] = *it;
        if (p.terms().size() == 1) {
            const auto& [e, c] = *p.terms().begin();
            if (first) {
                out << (c.is_negative() ? "-" : "");
            } else {
                out << (c.is_negative() ? " - " : " + ");
            }
            out << coeff_prefix(e, c.is_negative() ? -c : c) << d.name();
        } else {
            if (!first) out << " + ";
            out << "(" << p.str() << ")*" << d.name();
        }
        first = false;
    }
    return out.str();
}

}  // namespace heatsym
