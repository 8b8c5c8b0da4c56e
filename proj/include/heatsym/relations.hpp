#pragma once

#include <string>
#include <vector>

#include "heatsym/recursion.hpp"

namespace heatsym {

// One addend of a formal linear combination of operator words.
struct WordTerm {
    Rational coeff;
    OperatorWord word;
};

struct WordCombo {
    std::vector<WordTerm> terms;
    std::string src;  // the text this combo was parsed from
};

// Parses "-R1 R8 + R2 R6", "R4", "2 R1 R1", "1/2 R6". Whitespace separates
// operators within a word; '+'/'-' separate terms; an optional rational
// coefficient may prefix each word.
WordCombo parse_word_combo(const std::string& src);

// A claimed identity lhs == rhs between word combinations, evaluated at U.
struct WordRelation {
    std::string name;
    std::string source;      // which displayed family it came from
    WordCombo lhs, rhs;
    bool as_printed = true;  // verbatim transcription vs corrected form
    bool typo = false;       // printed form known not to hold
    std::string corrects;    // for corrected forms: name of the printed one
};

struct RelationVerdict {
    bool holds = false;
    DiffFunction residual;  // lhs(U) - rhs(U), normal form
};

// Evaluates both sides on the seed U and normalizes the difference.
RelationVerdict verify_relation(const WordRelation& rel);

DiffFunction evaluate_combo(const WordCombo& combo);

}  // namespace heatsym
