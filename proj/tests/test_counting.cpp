#include <doctest.h>

#include "heatsym/counting.hpp"

using namespace heatsym;

TEST_SUITE("counting") {

TEST_CASE("closed form N(n)") {
    CHECK(formula_N(0) == 1);
    CHECK(formula_N(1) == 10);
    CHECK(formula_N(2) == 50);
    CHECK(formula_N(3) == 175);
    CHECK(formula_N(4) == 490);
    CHECK(formula_N(5) == 1176);
    CHECK(formula_N(6) == 2520);
    CHECK_THROWS_AS(formula_N(-1), std::invalid_argument);
}

TEST_CASE("same-order dependency counts") {
    CHECK(deps_same_order(0) == 0);
    CHECK(deps_same_order(1) == 0);
    CHECK(deps_same_order(2) == 2);
    CHECK(deps_same_order(3) == 18);
    CHECK(deps_same_order(4) == 89);
    CHECK(deps_same_order(5) == 321);
    CHECK(deps_same_order(6) == 945);
}

TEST_CASE("cross-order dependency counts") {
    CHECK(deps_cross_order(0) == 0);
    CHECK(deps_cross_order(1) == 3);
    CHECK(deps_cross_order(2) == 22);
    CHECK(deps_cross_order(3) == 91);
    CHECK(deps_cross_order(4) == 280);
    CHECK(deps_cross_order(5) == 714);
}

TEST_CASE("per-order totals") {
    CHECK(dependency_total(0) == 0);
    CHECK(dependency_total(1) == 0);
    CHECK(dependency_total(2) == 5);
    CHECK(dependency_total(3) == 40);
    CHECK(dependency_total(4) == 180);
    CHECK(dependency_total(5) == 601);
    CHECK(dependency_total(6) == 1659);
}

TEST_CASE("dependency bookkeeping reconciles with the closed form") {
    // word count minus all dependencies up to order n equals N(n)
    long long removed = 0;
    for (int n = 0; n <= 8; ++n) {
        removed += dependency_total(n);
        CHECK(nondecreasing_word_count(n) - removed == formula_N(n));
    }
}

TEST_CASE("word counts") {
    CHECK(nondecreasing_word_count(0) == 1);
    CHECK(nondecreasing_word_count(1) == 10);
    CHECK(nondecreasing_word_count(2) == 55);
    CHECK(nondecreasing_word_count(3) == 220);
    CHECK(nondecreasing_word_count(4) == 715);
    CHECK(nondecreasing_word_count(5) == 2002);
    CHECK(nondecreasing_word_count(6) == 5005);
    CHECK(binomial(10, 2) == 45);
    CHECK(binomial(11, 3) == 165);
}

}  // TEST_SUITE
