#pragma once

#include <array>
#include <map>
#include <string>

#include "heatsym/rational.hpp"

namespace heatsym {

// The four base variables, in the fixed coordinate order used throughout.
enum class Var : int { x = 0, y = 1, z = 2, t = 3 };

inline constexpr std::array<Var, 4> kAllVars{Var::x, Var::y, Var::z, Var::t};

char var_name(Var v);

// Exponent vector of a monomial x^a y^b z^c t^d.
struct MonomialExp {
    unsigned a = 0, b = 0, c = 0, d = 0;

    unsigned degree() const { return a + b + c + d; }
    unsigned get(Var v) const;
    MonomialExp bumped(Var v, int delta) const;

    friend bool operator==(const MonomialExp&, const MonomialExp&) = default;
};

// Graded lexicographic order: total degree first, then (a,b,c,d) lex.
struct MonomialOrder {
    bool operator()(const MonomialExp& p, const MonomialExp& q) const {
        if (p.degree() != q.degree()) return p.degree() < q.degree();
        if (p.a != q.a) return p.a < q.a;
        if (p.b != q.b) return p.b < q.b;
        if (p.c != q.c) return p.c < q.c;
        return p.d < q.d;
    }
};

// Sparse multivariate polynomial in x, y, z, t over Rational.
// Invariant: no stored coefficient is zero.
class Polynomial {
public:
    using TermMap = std::map<MonomialExp, Rational, MonomialOrder>;

    Polynomial() = default;

    static Polynomial constant(const Rational& c);
    static Polynomial one() { return constant(Rational(1)); }
    static Polynomial variable(Var v, unsigned power = 1);
    static Polynomial monomial(const MonomialExp& e, const Rational& c);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    unsigned total_degree() const;  // 0 for the zero polynomial
    const TermMap& terms() const { return terms_; }
    Rational coeff(const MonomialExp& e) const;

    void add_term(const MonomialExp& e, const Rational& c);

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    Polynomial scaled(const Rational& c) const;

    // Formal partial derivative with respect to v.
    Polynomial partial(Var v) const;

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

    // Human-readable form, highest-degree terms first, e.g. "4t^2x + 2t".
    std::string str() const;

private:
    TermMap terms_;
};

}  // namespace heatsym
