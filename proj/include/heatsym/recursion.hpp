#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "heatsym/jet.hpp"

namespace heatsym {

// First-order recursion operator xi_x*D_x + xi_y*D_y + xi_z*D_z + phi.
struct RecursionOperator {
    Polynomial xi_x, xi_y, xi_z, phi;
};

// The nine built-in recursion operators of the equation, 1-based:
//   R1 = 2t Dx + x   R2 = 2t Dy + y   R3 = 2t Dz + z
//   R4 = -x Dy + y Dx   R5 = -x Dz + z Dx   R7 = -y Dz + z Dy
//   R6 = Dx   R8 = Dy   R9 = Dz
const std::array<RecursionOperator, 9>& recursion_operators();

// Applies R_index and returns the normal form. Preserves the symmetry
// property: residual-zero in implies residual-zero out.
DiffFunction apply_recursion(int index, const DiffFunction& q);

// A composition word R_{i_1} ... R_{i_k}; the rightmost operator acts
// first, so the empty word is the identity.
struct OperatorWord {
    std::vector<int> indices;  // each in 1..9

    int order() const { return static_cast<int>(indices.size()); }
    bool nondecreasing() const;
    std::string str() const;  // "R1 R8"; "1" (identity) for the empty word

    friend bool operator==(const OperatorWord&, const OperatorWord&) = default;
};

DiffFunction apply_word(const OperatorWord& w, const DiffFunction& seed);

enum class WordMode { nondecreasing, all };

// All words of length 0..n in the given mode, ordered by length and then
// lexicographically. In nondecreasing mode there are sum_k C(k+8,8) words.
std::vector<OperatorWord> enumerate_words(int n, WordMode mode);

// The characteristic of every enumerated word applied to the seed U,
// computed level by level so each word costs one operator application.
// jobs > 1 splits each level across threads; results are identical.
std::vector<std::pair<OperatorWord, DiffFunction>> word_characteristics(
    int n, WordMode mode, int jobs = 1);

}  // namespace heatsym
