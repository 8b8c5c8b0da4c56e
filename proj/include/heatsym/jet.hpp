#pragma once

#include <map>
#include <string>

#include "heatsym/polynomial.hpp"

namespace heatsym {

// Multi-index of a jet variable U_{x^i y^j z^k t^m}. An index is "normal"
// when it carries no t-derivatives.
struct DerivIndex {
    unsigned i = 0, j = 0, k = 0, m = 0;  // orders in x, y, z, t

    unsigned order() const { return i + j + k + m; }
    bool is_normal() const { return m == 0; }
    unsigned get(Var v) const;
    DerivIndex bumped(Var v, int delta = 1) const;

    // "U" followed by the subscript word, e.g. "Uxxy", "Ut", "U".
    std::string name() const;

    friend bool operator==(const DerivIndex&, const DerivIndex&) = default;
};

// Graded lexicographic order on (i,j,k,m).
struct DerivOrder {
    bool operator()(const DerivIndex& p, const DerivIndex& q) const {
        if (p.order() != q.order()) return p.order() < q.order();
        if (p.i != q.i) return p.i < q.i;
        if (p.j != q.j) return p.j < q.j;
        if (p.k != q.k) return p.k < q.k;
        return p.m < q.m;
    }
};

// A differential function linear in U: a finite sum of terms
// (polynomial in x,y,z,t) * (jet variable U_J).
// Invariant: no stored polynomial is zero.
class DiffFunction {
public:
    using TermMap = std::map<DerivIndex, Polynomial, DerivOrder>;

    DiffFunction() = default;

    // The seed characteristic U itself.
    static DiffFunction u() { return term(DerivIndex{}, Polynomial::one()); }
    static DiffFunction term(const DerivIndex& d, const Polynomial& p);

    bool is_zero() const { return terms_.empty(); }
    bool is_normal() const;
    unsigned max_order() const;  // 0 for the zero function
    const TermMap& terms() const { return terms_; }
    Polynomial coeff(const DerivIndex& d) const;

    void add_term(const DerivIndex& d, const Polynomial& p);

    DiffFunction operator-() const;
    DiffFunction& operator+=(const DiffFunction& o);
    DiffFunction& operator-=(const DiffFunction& o);
    friend DiffFunction operator+(DiffFunction a, const DiffFunction& b) { return a += b; }
    friend DiffFunction operator-(DiffFunction a, const DiffFunction& b) { return a -= b; }

    DiffFunction scaled(const Rational& c) const;
    DiffFunction times(const Polynomial& p) const;

    friend bool operator==(const DiffFunction&, const DiffFunction&) = default;

private:
    TermMap terms_;
};

// Total derivative D_v: each term p*U_J maps to (d_v p)*U_J + p*U_{J+e_v}.
DiffFunction total_derivative(const DiffFunction& f, Var v);

// D_J f = D_x^i D_y^j D_z^k D_t^m f.
DiffFunction derivative(const DiffFunction& f, const DerivIndex& J);

// The equation's left-hand side F = U_t - U_xx - U_yy - U_zz.
DiffFunction heat_operator();

// Records how a function sits in the differential ideal of the equation:
// f = normal(f) + sum_J coeffs[J] * D_J(F).
struct ReductionCertificate {
    std::map<DerivIndex, Polynomial, DerivOrder> coeffs;
    bool empty() const { return coeffs.empty(); }
};

struct NormalForm {
    DiffFunction normal;
    ReductionCertificate certificate;
};

// Eliminates every t-derivative by the rewrite
// U_{J+e_t} -> U_{J+2e_x} + U_{J+2e_y} + U_{J+2e_z}, highest total order
// first, and records the reduction certificate.
NormalForm normalize(const DiffFunction& f);

// sum_J coeffs[J] * D_J(F), expanded term by term with no normalization.
DiffFunction certificate_expansion(const ReductionCertificate& cert);

// normalize(D_t Q - D_x^2 Q - D_y^2 Q - D_z^2 Q); zero exactly when Q is
// the characteristic of a generalized symmetry. Q must be normal.
DiffFunction residual(const DiffFunction& q);

// Equality modulo the equation: normalize(f - g) has no terms.
bool diff_equal(const DiffFunction& f, const DiffFunction& g);

}  // namespace heatsym
