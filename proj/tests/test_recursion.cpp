#include <doctest.h>

#include "heatsym/counting.hpp"
#include "heatsym/recursion.hpp"
#include "test_support.hpp"

using namespace heatsym;

namespace {

DiffFunction U() { return DiffFunction::u(); }
DiffFunction Ud(unsigned i, unsigned j, unsigned k) {
    return DiffFunction::term(DerivIndex{i, j, k, 0}, Polynomial::one());
}
Polynomial mono(unsigned a, unsigned b, unsigned c, unsigned d, long coeff = 1) {
    return Polynomial::monomial(MonomialExp{a, b, c, d}, Rational(coeff));
}

}  // namespace

TEST_SUITE("recursion") {

TEST_CASE("single applications") {
    CHECK(apply_recursion(1, U()) == Ud(1, 0, 0).times(mono(0, 0, 0, 1, 2)) +
                                         DiffFunction::term(DerivIndex{}, mono(1, 0, 0, 0)));
    CHECK(apply_recursion(6, U()) == Ud(1, 0, 0));
    CHECK_THROWS_AS(apply_recursion(0, U()), std::out_of_range);
    CHECK_THROWS_AS(apply_recursion(10, U()), std::out_of_range);
}

TEST_CASE("repeated application of R1") {
    // R1 R1 [U] = 4t^2 Uxx + 4tx Ux + (x^2 + 2t) U
    DiffFunction q = apply_recursion(1, apply_recursion(1, U()));
    DiffFunction expect = Ud(2, 0, 0).times(mono(0, 0, 0, 2, 4)) +
                          Ud(1, 0, 0).times(mono(1, 0, 0, 1, 4)) +
                          DiffFunction::term(DerivIndex{}, mono(2, 0, 0, 0) + mono(0, 0, 0, 1, 2));
    CHECK(q == expect);
}

TEST_CASE("word application composes right to left") {
    CHECK(apply_word(OperatorWord{}, U()) == U());
    // R1 R2 [U] = 4t^2 Uxy + 2ty Ux + 2tx Uy + xy U
    DiffFunction q = apply_word(OperatorWord{{1, 2}}, U());
    DiffFunction expect = Ud(1, 1, 0).times(mono(0, 0, 0, 2, 4)) +
                          Ud(1, 0, 0).times(mono(0, 1, 0, 1, 2)) +
                          Ud(0, 1, 0).times(mono(1, 0, 0, 1, 2)) +
                          DiffFunction::term(DerivIndex{}, mono(1, 1, 0, 0));
    CHECK(q == expect);
    CHECK(apply_word(OperatorWord{{6, 9}}, U()) == Ud(1, 0, 1));
}

TEST_CASE("enumeration counts") {
    CHECK(enumerate_words(1, WordMode::nondecreasing).size() == 10);
    CHECK(enumerate_words(2, WordMode::nondecreasing).size() == 55);
    CHECK(enumerate_words(3, WordMode::nondecreasing).size() == 220);
    CHECK(enumerate_words(2, WordMode::all).size() == 1 + 9 + 81);
    for (int n = 0; n <= 5; ++n)
        CHECK(enumerate_words(n, WordMode::nondecreasing).size() ==
              static_cast<size_t>(nondecreasing_word_count(n)));
    CHECK_THROWS_AS(enumerate_words(-1, WordMode::all), std::invalid_argument);
}

TEST_CASE("enumeration order is deterministic lexicographic by length") {
    auto words = enumerate_words(2, WordMode::nondecreasing);
    CHECK(words[0] == OperatorWord{});
    CHECK(words[1] == OperatorWord{{1}});
    CHECK(words[9] == OperatorWord{{9}});
    CHECK(words[10] == OperatorWord{{1, 1}});
    CHECK(words[11] == OperatorWord{{1, 2}});
    CHECK(words[19] == OperatorWord{{2, 2}});
    CHECK(words.back() == OperatorWord{{9, 9}});
    for (const auto& w : words) CHECK(w.nondecreasing());
}

TEST_CASE("word_characteristics agrees with apply_word") {
    for (WordMode mode : {WordMode::nondecreasing, WordMode::all}) {
        auto table = word_characteristics(mode == WordMode::all ? 2 : 3, mode);
        auto words = enumerate_words(mode == WordMode::all ? 2 : 3, mode);
        REQUIRE(table.size() == words.size());
        for (size_t n = 0; n < words.size(); ++n) {
            CHECK(table[n].first == words[n]);
            CHECK(table[n].second == apply_word(words[n], U()));
        }
    }
}

TEST_CASE("word_characteristics is identical across thread counts") {
    auto seq = word_characteristics(3, WordMode::nondecreasing, 1);
    auto par = word_characteristics(3, WordMode::nondecreasing, 4);
    CHECK(seq == par);
}

TEST_CASE("recursion closure: every word characteristic is a symmetry") {
    for (const auto& [w, q] : word_characteristics(3, WordMode::nondecreasing))
        CHECK(residual(q).is_zero());
}

TEST_CASE("randomized linearity of apply_recursion") {
    testsupport::Rng rng;
    for (int n = 0; n < 40; ++n) {
        DiffFunction q1 = normalize(testsupport::random_diff(rng)).normal;
        DiffFunction q2 = normalize(testsupport::random_diff(rng)).normal;
        Rational a = testsupport::random_rational(rng);
        Rational b = testsupport::random_rational(rng);
        int idx = rng.pick(1, 9);
        CHECK(apply_recursion(idx, q1.scaled(a) + q2.scaled(b)) ==
              apply_recursion(idx, q1).scaled(a) + apply_recursion(idx, q2).scaled(b));
    }
}

TEST_CASE("word text form") {
    CHECK(OperatorWord{}.str() == "1");
    CHECK(OperatorWord{{1, 8}}.str() == "R1 R8");
}

}  // TEST_SUITE
