#include <doctest.h>

#include "heatsym/expr.hpp"
#include "heatsym/json_io.hpp"
#include "heatsym/rank.hpp"
#include "test_support.hpp"

using namespace heatsym;

TEST_SUITE("expr") {

TEST_CASE("paper-style characteristics parse") {
    CHECK(parse_characteristic("2t*Ux + x*U") == apply_recursion(1, DiffFunction::u()));
    CHECK(parse_characteristic("U") == DiffFunction::u());
    CHECK(parse_characteristic("2t Uxz + z Ux") ==
          apply_word(OperatorWord{{3, 6}}, DiffFunction::u()));
    CHECK(parse_characteristic("4t^2*Uxx + 4tx*Ux + (x^2 + 2t)*U") ==
          apply_word(OperatorWord{{1, 1}}, DiffFunction::u()));
}

TEST_CASE("implicit multiplication and whitespace") {
    CHECK(parse_characteristic("2tUx") == parse_characteristic("2 * t * Ux"));
    CHECK(parse_characteristic("  xU ") == parse_characteristic("x*U"));
    CHECK(parse_characteristic("3/4U") ==
          DiffFunction::term(DerivIndex{}, Polynomial::constant(Rational(3, 4))));
}

TEST_CASE("t-derivatives are accepted on input and normalized away") {
    DiffFunction q = parse_characteristic("Ut");
    DiffFunction lap = DiffFunction::term(DerivIndex{2, 0, 0, 0}, Polynomial::one()) +
                       DiffFunction::term(DerivIndex{0, 2, 0, 0}, Polynomial::one()) +
                       DiffFunction::term(DerivIndex{0, 0, 2, 0}, Polynomial::one());
    CHECK(q == lap);
    CHECK(q.is_normal());
}

TEST_CASE("errors carry positions") {
    CHECK_THROWS_AS(parse_expr("2t*Ux +"), ExprError);
    CHECK_THROWS_AS(parse_expr("Ux @ Uy"), ExprError);
    CHECK_THROWS_AS(parse_expr("(2t*Ux"), ExprError);
    CHECK_THROWS_AS(parse_expr(""), ExprError);
    try {
        parse_expr("x + &");
        FAIL("expected ExprError");
    } catch (const ExprError& e) {
        CHECK(e.pos() == 4);
    }
    // well-formed parse, ill-typed lowering
    CHECK_THROWS_AS(parse_characteristic("Ux*Uy"), ExprError);
    CHECK_THROWS_AS(parse_characteristic("x"), ExprError);
    CHECK_THROWS_AS(parse_characteristic("x + U"), ExprError);
}

TEST_CASE("render mirrors the written layout") {
    CHECK(render(apply_recursion(1, DiffFunction::u())) == "2t*Ux + x*U");
    CHECK(render(DiffFunction::u()) == "U");
    CHECK(render(DiffFunction{}) == "0");
    CHECK(render(-DiffFunction::u()) == "-U");
    CHECK(render(apply_word(OperatorWord{{1, 1}}, DiffFunction::u())) ==
          "4t^2*Uxx + 4xt*Ux + (x^2 + 2t)*U");
}

TEST_CASE("round-trip over the order-3 corpus") {
    for (const auto& [w, q] : word_characteristics(3, WordMode::nondecreasing)) {
        CHECK(parse_characteristic(render(q)) == q);
        DiffFunction scaled = q.scaled(Rational(-3, 4));
        CHECK(parse_characteristic(render(scaled)) == scaled);
    }
}

}  // TEST_SUITE

TEST_SUITE("serialization") {

TEST_CASE("polynomial json round-trip and canonical order") {
    testsupport::Rng rng;
    for (int n = 0; n < 50; ++n) {
        Polynomial p = testsupport::random_poly(rng, 6, 4);
        Json j = poly_to_json(p);
        CHECK(poly_from_json(j) == p);
        // terms sorted ascending by graded lex
        for (size_t a = 1; a < j.size(); ++a) {
            MonomialExp prev{j[a - 1]["exp"][0], j[a - 1]["exp"][1], j[a - 1]["exp"][2],
                             j[a - 1]["exp"][3]};
            MonomialExp cur{j[a]["exp"][0], j[a]["exp"][1], j[a]["exp"][2], j[a]["exp"][3]};
            CHECK(MonomialOrder{}(prev, cur));
        }
    }
}

TEST_CASE("coefficient strings omit unit denominators") {
    Polynomial p = Polynomial::monomial(MonomialExp{1, 0, 0, 0}, Rational(3, 4));
    p.add_term(MonomialExp{0, 1, 0, 0}, Rational(-2));
    Json j = poly_to_json(p);  // the y term sorts first
    CHECK(j[0]["coeff"] == "-2");
    CHECK(j[1]["coeff"] == "3/4");
}

TEST_CASE("diff function and conserved vector round-trip") {
    testsupport::Rng rng;
    for (int n = 0; n < 50; ++n) {
        DiffFunction f = testsupport::random_diff(rng);
        CHECK(diff_from_json(diff_to_json(f)) == f);
    }
    ConservedVector base = base_conserved_vector();
    CHECK(conserved_from_json(conserved_to_json(base)) == base);
}

TEST_CASE("generator round-trip") {
    for (const auto& g : point_generators())
        CHECK(generator_from_json(generator_to_json(g)) == g);
}

TEST_CASE("malformed json is rejected") {
    CHECK_THROWS_AS(poly_from_json(Json::object()), std::invalid_argument);
    CHECK_THROWS_AS(diff_from_json(Json::parse(R"([{"deriv":[1,0,0],"poly":[]}])")),
                    std::invalid_argument);
    CHECK_THROWS_AS(conserved_from_json(Json::object()), std::invalid_argument);
}

}  // TEST_SUITE
