#include "heatsym/relations.hpp"

#include <cctype>
#include <stdexcept>

namespace heatsym {

namespace {

struct Cursor {
    const std::string& s;
    size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool done() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() {
        skip_ws();
        return s[pos];
    }
    [[noreturn]] void fail(const std::string& msg) const {
        throw std::invalid_argument("word combo: " + msg + " at position " +
                                    std::to_string(pos) + " in '" + s + "'");
    }
};

std::string read_number(Cursor& c) {
    std::string num;
    while (c.pos < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.pos])))
        num += c.s[c.pos++];
    if (c.pos < c.s.size() && c.s[c.pos] == '/') {
        num += c.s[c.pos++];
        if (c.pos >= c.s.size() || !std::isdigit(static_cast<unsigned char>(c.s[c.pos])))
            c.fail("expected digits after '/'");
        while (c.pos < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.pos])))
            num += c.s[c.pos++];
    }
    return num;
}

}  // namespace

WordCombo parse_word_combo(const std::string& src) {
    WordCombo combo;
    combo.src = src;
    Cursor c{src};
    bool first = true;
    while (!c.done()) {
        Rational sign(1);
        char ch = c.peek();
        if (ch == '+' || ch == '-') {
            if (ch == '-') sign = Rational(-1);
            ++c.pos;
        } else if (!first) {
            c.fail("expected '+' or '-' between terms");
        }
        c.skip_ws();
        Rational coeff = sign;
        if (c.pos < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.pos]))) {
            coeff = sign * Rational::parse(read_number(c));
            c.skip_ws();
            if (c.pos < c.s.size() && c.s[c.pos] == '*') ++c.pos;
        }
        OperatorWord word;
        for (;;) {
            c.skip_ws();
            if (c.pos >= c.s.size() || c.s[c.pos] != 'R') break;
            ++c.pos;
            if (c.pos >= c.s.size() || !std::isdigit(static_cast<unsigned char>(c.s[c.pos])))
                c.fail("expected operator index after 'R'");
            int idx = 0;
            while (c.pos < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.pos])))
                idx = idx * 10 + (c.s[c.pos++] - '0');
            if (idx < 1 || idx > 9) c.fail("operator index must be in 1..9");
            word.indices.push_back(idx);
        }
        if (word.indices.empty() && coeff == sign && !std::isdigit(static_cast<unsigned char>(ch)))
            c.fail("expected a term");
        combo.terms.push_back(WordTerm{coeff, std::move(word)});
        first = false;
    }
    if (combo.terms.empty()) c.fail("empty combination");
    return combo;
}

DiffFunction evaluate_combo(const WordCombo& combo) {
    DiffFunction sum;
    for (const auto& term : combo.terms)
        sum += apply_word(term.word, DiffFunction::u()).scaled(term.coeff);
    return sum;
}

RelationVerdict verify_relation(const WordRelation& rel) {
    RelationVerdict v;
    v.residual = normalize(evaluate_combo(rel.lhs) - evaluate_combo(rel.rhs)).normal;
    v.holds = v.residual.is_zero();
    return v;
}

}  // namespace heatsym
