#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace heatsym {

// Arbitrary-precision rational number. Always stored reduced with a
// positive denominator; all arithmetic is exact.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}
    Rational(long num, long den);
    Rational(const mpz_class& num, const mpz_class& den);

    // Parses "p" or "p/q" (decimal integers, optional leading '-').
    static Rational parse(const std::string& s);

    mpz_class numerator() const { return v_.get_num(); }
    mpz_class denominator() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_negative() const { return sgn(v_) < 0; }

    Rational operator-() const;

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) == 0; }
    friend bool operator!=(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) != 0; }
    friend bool operator<(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) < 0; }

    // Decimal form: "p/q", denominator omitted when it is 1.
    std::string str() const;

private:
    explicit Rational(mpq_class q) : v_(std::move(q)) {}
    mpq_class v_;
};

}  // namespace heatsym
