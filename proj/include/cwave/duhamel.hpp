// Goursat (characteristic) integration on the Penrose square: the inverse of
// d_{Xm} d_{Xp} with data 0 on the corner edges Xm = -pi/2 and Xp = -pi/2,
// specialized to cubic self-interaction sources.
#pragma once

#include <memory>
#include <vector>

#include "cwave/penrose_field.hpp"

namespace cwave {

// Right-hand side on the grid; must be swap-odd to 1e-12 so the double
// cumulative integral stays swap-odd.
struct SourceField {
    std::shared_ptr<const SquareGrid> grid;
    std::vector<double> values;

    int n() const { return grid->n; }
    double at(int i, int j) const { return values[static_cast<size_t>(i) * grid->n + j]; }
    double& at(int i, int j) { return values[static_cast<size_t>(i) * grid->n + j]; }

    double swap_odd_defect() const;
};

// S = U~^3 / sin^2(Xp - Xm), extended by 0 to the diagonal.
SourceField cubic_source(const Field& U);

// W(Xm_i, Xp_j) = int_{-pi/2}^{Xm_i} dY int_{-pi/2}^{Xp_j} dZ S(Y, Z) through
// exact cumulative integrals of the nodal interpolant; antisymmetric output
// for antisymmetric input by construction.
Field goursat_solve(const SourceField& S);

Field antibox_cubic(const Field& U);

// Same inverse but with vanishing value and time derivative on the central
// slice Xp + Xm = 0, so a fixed point built with it keeps its prescribed
// Cauchy data at t = 0 exactly.
Field centered_solve(const SourceField& S);

Field antibox_cubic_centered(const Field& U);

// Closed form of the Goursat integral for the source of the separated family
// U~ = sin(Xp - Xm) cos(Xp + Xm - theta).
double wtheta_exact(double Xm, double Xp, double theta);

} // namespace cwave
