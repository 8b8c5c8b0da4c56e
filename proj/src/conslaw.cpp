#include "heatsym/conslaw.hpp"

#include <array>
#include <stdexcept>

namespace heatsym {

ConservedVector ConservedVector::operator-(const ConservedVector& o) const {
    return ConservedVector{Tt - o.Tt, Tx - o.Tx, Ty - o.Ty, Tz - o.Tz};
}

ConservedVector ConservedVector::scaled(const Rational& c) const {
    return ConservedVector{Tt.scaled(c), Tx.scaled(c), Ty.scaled(c), Tz.scaled(c)};
}

ConservedVector base_conserved_vector() {
    return ConservedVector{
        DiffFunction::term(DerivIndex{}, -Polynomial::one()),
        DiffFunction::term(DerivIndex{1, 0, 0, 0}, Polynomial::one()),
        DiffFunction::term(DerivIndex{0, 1, 0, 0}, Polynomial::one()),
        DiffFunction::term(DerivIndex{0, 0, 1, 0}, Polynomial::one()),
    };
}

DivergenceReport divergence(const ConservedVector& T) {
    DivergenceReport rep;
    rep.raw = total_derivative(T.Tt, Var::t) + total_derivative(T.Tx, Var::x) +
              total_derivative(T.Ty, Var::y) + total_derivative(T.Tz, Var::z);
    NormalForm nf = normalize(rep.raw);
    rep.on_shell = std::move(nf.normal);
    rep.certificate = std::move(nf.certificate);
    rep.conserved = rep.on_shell.is_zero();
    return rep;
}

namespace {

// substitute U |-> q: each p*U_J becomes p*D_J(q)
DiffFunction substitute_seed(const DiffFunction& f, const DiffFunction& q) {
    DiffFunction out;
    for (const auto& [J, p] : f.terms()) out += derivative(q, J).times(p);
    return normalize(out).normal;
}

}  // namespace

ConservedVector generate_evolutionary(const DiffFunction& q, const ConservedVector& T) {
    DiffFunction res = residual(q);
    if (!res.is_zero())
        throw std::invalid_argument("generate_evolutionary: characteristic has nonzero residual");
    return ConservedVector{substitute_seed(T.Tt, q), substitute_seed(T.Tx, q),
                           substitute_seed(T.Ty, q), substitute_seed(T.Tz, q)};
}

namespace {

struct TbarParts {
    std::array<DiffFunction, 4> moved;   // X T^i through the prolongation
    std::array<DiffFunction, 4> jacobi;  // (D_j xi^i) T^j
    std::array<DiffFunction, 4> trace;   // (D_j xi^j) T^i
};

TbarParts tbar_parts(const PointVectorField& x, const ConservedVector& T) {
    const std::array<const DiffFunction*, 4> comp{&T.Tt, &T.Tx, &T.Ty, &T.Tz};
    const std::array<const Polynomial*, 4> xi{&x.xi_t, &x.xi_x, &x.xi_y, &x.xi_z};
    const std::array<Var, 4> coords{Var::t, Var::x, Var::y, Var::z};

    Polynomial div_xi;
    for (size_t j = 0; j < 4; ++j) div_xi += xi[j]->partial(coords[j]);

    TbarParts parts;
    for (size_t i = 0; i < 4; ++i) {
        parts.moved[i] = apply_prolonged(x, *comp[i]);
        for (size_t j = 0; j < 4; ++j) {
            Polynomial dj_xi_i = xi[i]->partial(coords[j]);
            if (!dj_xi_i.is_zero()) parts.jacobi[i] += comp[j]->times(dj_xi_i);
        }
        parts.trace[i] = comp[i]->times(div_xi);
    }
    return parts;
}

}  // namespace

ConservedVector generate_point(const PointVectorField& x, const ConservedVector& T) {
    TbarParts parts = tbar_parts(x, T);
    std::array<DiffFunction, 4> out;
    for (size_t i = 0; i < 4; ++i)
        out[i] = normalize(-parts.moved[i] + parts.jacobi[i] - parts.trace[i]).normal;
    return ConservedVector{out[0], out[1], out[2], out[3]};
}

bool invariance_check(const PointVectorField& x, const ConservedVector& T) {
    TbarParts parts = tbar_parts(x, T);
    for (size_t i = 0; i < 4; ++i)
        if (!normalize(parts.moved[i] - parts.jacobi[i] + parts.trace[i]).normal.is_zero())
            return false;
    return true;
}

Multiplier multiplier(const ConservedVector& T) {
    DivergenceReport rep = divergence(T);
    if (!rep.conserved) throw std::invalid_argument("multiplier: vector is not conserved");
    Polynomial lambda;
    for (const auto& [J, c] : rep.certificate.coeffs) {
        Polynomial term = c;
        for (unsigned n = 0; n < J.i; ++n) term = term.partial(Var::x);
        for (unsigned n = 0; n < J.j; ++n) term = term.partial(Var::y);
        for (unsigned n = 0; n < J.k; ++n) term = term.partial(Var::z);
        for (unsigned n = 0; n < J.m; ++n) term = term.partial(Var::t);
        if (J.order() % 2 == 1) term = -term;
        lambda += term;
    }
    Multiplier m;
    m.value = lambda;
    Polynomial adjoint = lambda.partial(Var::t) + lambda.partial(Var::x).partial(Var::x) +
                         lambda.partial(Var::y).partial(Var::y) +
                         lambda.partial(Var::z).partial(Var::z);
    m.adjoint_ok = adjoint.is_zero();
    return m;
}

bool is_trivial_first_kind(const ConservedVector& T) {
    for (const DiffFunction* f : {&T.Tt, &T.Tx, &T.Ty, &T.Tz})
        if (!normalize(*f).normal.is_zero()) return false;
    return true;
}

bool equivalent(const ConservedVector& T1, const ConservedVector& T2) {
    return multiplier(T1 - T2).value.is_zero();
}

BracketTrivialityCheck theorem_1_1_check(const PointVectorField& x, const PointVectorField& y,
                                         const ConservedVector& T) {
    BracketTrivialityCheck out;
    out.bracket = commutator(x, y);
    out.y_associated = invariance_check(y, T);

    if (out.bracket.is_zero()) {
        out.proportional_to_y = Rational(0);
    } else if (!y.is_zero()) {
        // candidate ratio from any feature where y is nonzero
        std::optional<Rational> b;
        const std::array<const Polynomial PointVectorField::*, 6> comps{
            &PointVectorField::xi_t,    &PointVectorField::xi_x, &PointVectorField::xi_y,
            &PointVectorField::xi_z,    &PointVectorField::eta_lin,
            &PointVectorField::eta_free};
        for (auto mem : comps) {
            const Polynomial& py = y.*mem;
            if (py.is_zero()) continue;
            const auto& [e, c] = *py.terms().begin();
            b = (out.bracket.*mem).coeff(e) / c;
            break;
        }
        if (b && (out.bracket - y.scaled(*b)).is_zero()) out.proportional_to_y = b;
    }
    out.predicts_trivial = out.proportional_to_y.has_value();
    return out;
}

}  // namespace heatsym
