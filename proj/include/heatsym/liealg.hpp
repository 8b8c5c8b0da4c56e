#pragma once

#include <array>
#include <map>
#include <optional>
#include <vector>

#include "heatsym/jet.hpp"

namespace heatsym {

// Point-symmetry vector field
//   xi_t d/dt + xi_x d/dx + xi_y d/dy + xi_z d/dz + eta d/dU
// with eta = eta_lin*U + eta_free affine in U.
struct PointVectorField {
    Polynomial xi_t, xi_x, xi_y, xi_z;
    Polynomial eta_lin, eta_free;

    bool is_zero() const;
    PointVectorField operator-(const PointVectorField& o) const;
    PointVectorField scaled(const Rational& c) const;
    friend bool operator==(const PointVectorField&, const PointVectorField&) = default;
};

// The thirteen built-in generators X_1..X_13 (0-based storage). X_5 is
// -x d/dz + z d/dx, mirroring the fifth recursion operator; see
// verify_table for how the recorded bracket table is checked against it.
const std::array<PointVectorField, 13>& point_generators();

// Lie bracket [X,Y]; the affine-in-U structure of eta is preserved.
PointVectorField commutator(const PointVectorField& x, const PointVectorField& y);

// Expansion of v in the basis X_1..X_13 (keys 1..13, zero coefficients
// omitted); nullopt when v lies outside the span.
std::optional<std::map<int, Rational>> expand_in_generators(const PointVectorField& v);

struct TableEntry {
    int left = 0, right = 0;           // bracket [X_left, X_right], left < right
    bool expansion_ok = false;         // bracket lies in span{X_1..X_13}
    std::map<int, Rational> computed;  // expansion of the computed bracket
    std::map<int, Rational> recorded;  // tabulated value (zero where unlisted)
    bool agree = false;
};

struct TableReport {
    std::vector<TableEntry> entries;  // all 78 pairs, lexicographic
    bool all_expanded = false;
    bool antisymmetry_ok = false;  // checked as [X,Y] + [Y,X] == 0
    bool jacobi_ok = false;        // exact, over all triples
    bool subalgebra_first_ten_closed = false;
    int disagreements = 0;
};

// Computes all brackets among X_1..X_13, expands them in the generator
// basis and diffs against the recorded table.
TableReport verify_table();

// The tabulated commutators as (left, right, expansion); pairs not listed
// are zero.
const std::vector<TableEntry>& recorded_commutator_table();

// Prolongation coefficients zeta_J for 1 <= |J| <= order, J a multi-index
// over (x,y,z,t). Requires eta_free == 0.
std::map<DerivIndex, DiffFunction, DerivOrder> prolong(const PointVectorField& x, int order);

// Action of the prolonged field on a differential function:
// X(f) = sum_J [ (xi . grad p_J) U_J + p_J zeta_J ].
DiffFunction apply_prolonged(const PointVectorField& x, const DiffFunction& f);

// Q = eta - xi_t U_t - xi_x U_x - xi_y U_y - xi_z U_z, normalized.
// Requires eta_free == 0.
DiffFunction evolutionary_characteristic(const PointVectorField& x);

// Whether f(x,y,z,t) itself solves the equation: f_t - f_xx - f_yy - f_zz = 0.
bool check_free_symmetry(const Polynomial& f);

}  // namespace heatsym
