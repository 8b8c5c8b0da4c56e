#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "heatsym/jet.hpp"

namespace heatsym {

// Parse failure with the offending position in the source text.
class ExprError : public std::runtime_error {
public:
    ExprError(size_t pos, const std::string& msg)
        : std::runtime_error("at position " + std::to_string(pos) + ": " + msg), pos_(pos) {}
    size_t pos() const { return pos_; }

private:
    size_t pos_;
};

// Parse tree over rational literals, monomials in x,y,z,t, jet symbols
// U<word over xyzt>, +, -, * and parentheses.
struct ExprAst {
    enum class Kind { number, variable, jet, add, sub, mul, neg };
    Kind kind;
    Rational number;       // Kind::number
    Var variable{};        // Kind::variable
    unsigned power = 1;    // Kind::variable
    DerivIndex jet;        // Kind::jet
    std::vector<ExprAst> children;
};

// Grammar: expr := ['-'] term (('+'|'-') term)*
//          term := factor ('*'? factor)*
//          factor := rational | var['^'int] | 'U'[xyzt]* | '(' expr ')'
// Whitespace is insignificant.
ExprAst parse_expr(const std::string& src);

// Lowers a parse tree to a DiffFunction. Fails on products of jet symbols
// (nonlinear) and on U-independent leftovers.
DiffFunction lower_to_diff(const ExprAst& ast);

// parse + lower + normalize; t-derivatives on input are eliminated.
DiffFunction parse_characteristic(const std::string& src);

// Deterministic text form, highest-order jet terms first, e.g.
// "2t*Ux + x*U". render/parse round-trips exactly.
std::string render(const DiffFunction& f);

}  // namespace heatsym
