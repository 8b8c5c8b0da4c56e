#include <doctest.h>

#include "heatsym/rational.hpp"
#include "test_support.hpp"

using namespace heatsym;

TEST_SUITE("rational") {

TEST_CASE("stored reduced with positive denominator") {
    Rational r(6, -8);
    CHECK(r.numerator() == -3);
    CHECK(r.denominator() == 4);
    CHECK(Rational(0, 7).numerator() == 0);
    CHECK(Rational(0, 7).denominator() == 1);
    CHECK(Rational(-4, 2) == Rational(-2));
}

TEST_CASE("parse and str round-trip") {
    CHECK(Rational::parse("3/4").str() == "3/4");
    CHECK(Rational::parse("-2").str() == "-2");
    CHECK(Rational::parse("6/8").str() == "3/4");
    CHECK(Rational::parse("-6/4").str() == "-3/2");
    CHECK(Rational(5).str() == "5");
    CHECK_THROWS_AS(Rational::parse("abc"), std::invalid_argument);
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("arithmetic") {
    CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
    CHECK(Rational(1, 2) * Rational(2, 3) == Rational(1, 3));
    CHECK(Rational(1, 2) - Rational(1, 2) == Rational(0));
    CHECK(Rational(3, 4) / Rational(3, 2) == Rational(1, 2));
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
    CHECK(-Rational(2, 5) == Rational(-2, 5));
}

TEST_CASE("randomized field identities") {
    testsupport::Rng rng;
    for (int n = 0; n < 200; ++n) {
        Rational a = testsupport::random_rational(rng);
        Rational b = testsupport::random_rational(rng);
        Rational c = testsupport::random_rational(rng);
        CHECK(a + b == b + a);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * (b + c) == a * b + a * c);
        // invariants survive arithmetic
        Rational s = a * b + c;
        mpz_class g;
        mpz_class num = s.numerator() < 0 ? mpz_class(-s.numerator()) : s.numerator();
        mpz_class den = s.denominator();
        mpz_gcd(g.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
        CHECK(den > 0);
        CHECK((g == 1 || num == 0));
    }
}

}  // TEST_SUITE
