// Derivative of the data-pair norm along the nonlinear flow: the closed
// integral formula, its finite-difference cross-check, and the radial
// degenerate case of the boost derivative.
#pragma once

#include "cwave/penrose_field.hpp"
#include "cwave/sobolev.hpp"

namespace cwave {

struct FlowSnapshot {
    double t0 = 0.0;
    RadialProfile u, ut;
};

// Profiles of (u, d_t u) at time t0 sampled from a Penrose-square solution.
FlowSnapshot flow_snapshot(const Field& F, double t0, int n_radii = 600, double r_lo = 1e-2,
                           double r_hi = 120.0);

// 2 sigma int_{R^3} (-Delta)^{-1/2}(u_t) u^3 dx for the snapshot, via the
// radial transform of u_t divided by rho and inverted.
double dt_norm_formula(const FlowSnapshot& s, int sigma);

// Central difference (with one Richardson level, steps h and h/2) of
// pair_norm_sq of the Picard solution's snapshots about t0.
double dt_norm_fd(double theta, int sigma, double delta, double t0, double h = 1e-3,
                  int grid_n = 96);

// Boost derivative of the norm for radial data: the integrand is odd in x1,
// so the value is exactly 0.
double boost_derivative_radial(const FlowSnapshot& s, int sigma);

} // namespace cwave
