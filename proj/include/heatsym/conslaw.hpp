#pragma once

#include <optional>

#include "heatsym/liealg.hpp"

namespace heatsym {

// A 4-tuple of flux components (T^t, T^x, T^y, T^z), each linear in U and
// stored in normal form. Conserved when the on-shell divergence vanishes.
struct ConservedVector {
    DiffFunction Tt, Tx, Ty, Tz;

    ConservedVector operator-(const ConservedVector& o) const;
    ConservedVector scaled(const Rational& c) const;
    friend bool operator==(const ConservedVector&, const ConservedVector&) = default;
};

// The seed law (T^t, T^x, T^y, T^z) = (-U, U_x, U_y, U_z).
ConservedVector base_conserved_vector();

struct DivergenceReport {
    DiffFunction raw;       // D_t T^t + D_x T^x + D_y T^y + D_z T^z
    DiffFunction on_shell;  // its normal form; zero iff conserved
    ReductionCertificate certificate;
    bool conserved = false;
};

DivergenceReport divergence(const ConservedVector& T);

// New conserved vector from a symmetry in characteristic form: U is
// replaced by Q in every component, i.e. T_bar^i = sum_J p_J D_J(Q) for
// T^i = sum_J p_J U_J. For the seed law this gives
// (-Q, D_x Q, D_y Q, D_z Q). Rejects Q with nonzero residual.
ConservedVector generate_evolutionary(const DiffFunction& q, const ConservedVector& T);

// New conserved vector from a point symmetry:
// T_bar^i = -X T^i + (D_j xi^i) T^j - (D_j xi^j) T^i, with X acting through
// its prolongation truncated at the derivative order of T.
ConservedVector generate_point(const PointVectorField& x, const ConservedVector& T);

// Whether X leaves the conserved form invariant:
// X T^i - (D_j xi^i) T^j + (D_j xi^j) T^i = 0 for all four components.
bool invariance_check(const PointVectorField& x, const ConservedVector& T);

// The function L with Div T = L * (U_t - U_xx - U_yy - U_zz) modulo total
// divergences; solves the adjoint equation L_t + L_xx + L_yy + L_zz = 0.
struct Multiplier {
    Polynomial value;
    bool adjoint_ok = false;
};

// Collapses the divergence certificate by the formal adjoint:
// L = sum_J (-1)^|J| d_J(c_J). Throws std::invalid_argument when T is not
// conserved.
Multiplier multiplier(const ConservedVector& T);

// First-kind triviality: every component individually vanishes on shell.
bool is_trivial_first_kind(const ConservedVector& T);

// Equivalence at the multiplier level: multiplier(T1 - T2) == 0.
bool equivalent(const ConservedVector& T1, const ConservedVector& T2);

// The bracket test behind the triviality prediction: computes [X,Y] and
// whether it is a rational multiple of Y. The prediction is reported, not
// assumed; callers cross-check with multiplier(generate_point(X, T)).
struct BracketTrivialityCheck {
    PointVectorField bracket;
    std::optional<Rational> proportional_to_y;
    bool predicts_trivial = false;
    bool y_associated = false;  // invariance_check(Y, T)
};

BracketTrivialityCheck theorem_1_1_check(const PointVectorField& x, const PointVectorField& y,
                                         const ConservedVector& T);

}  // namespace heatsym
