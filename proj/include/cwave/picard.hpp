// Small-data Picard iteration for box u = -sigma u^3 in Penrose coordinates,
// convergence-order fits, and the delta^6 expansion measurement.
#pragma once

#include <array>
#include <utility>
#include <vector>

#include "cwave/functional.hpp"
#include "cwave/penrose_field.hpp"
#include "cwave/sobolev.hpp"

namespace cwave {

struct SolverConfig {
    int sigma = 1;          // +1 focusing, -1 defocusing
    double delta = 0.1;     // pair norm of the data
    PhaseAngle theta{0.0};
    int grid_n = 96;
    double fp_tol = 1e-12;  // sup-norm stop for the fixed-point update
    int max_iter = 60;
    // false: Duhamel vanishes on the past characteristics (scattering data in
    // the ancient limit). true: Duhamel vanishes on the t = 0 slice, so the
    // solution carries the prescribed Cauchy pair at t = 0 exactly.
    bool anchor_t0 = false;
};

struct SolveReport {
    Field field;
    int iterations = 0;
    double final_residual = 0.0;   // last sup-norm update
    double l4_norm4 = 0.0;
    double contraction_ratio = 0.0; // largest update ratio after iteration 3
};

// Phase-family data: (cos(theta) 2/(1+r^2), sin(theta) 4/(1+r^2)^2).
DataPair family_pair(double theta);
// family_pair scaled to pair norm delta (division by (2 pi^2)^{1/2}).
DataPair normalized_family_pair(double theta, double delta);
DataPair scale_pair(const DataPair& d, double a);

// k >= 2 points from a to b, geometric spacing.
std::vector<double> geometric_deltas(double a, double b, int k);

// Fixed point of U ~ -> U_lin + sigma antibox_cubic(U); d must already carry
// the intended norm cfg.delta.
SolveReport solve(const DataPair& d, const SolverConfig& cfg);

// Log-log least-squares slopes of |Phi - S| (expect 3) and
// |Phi - S - sigma box^{-1}((S d)^3)| (expect 5) in L^4 over the delta sweep.
// rows, if given, receives (delta, first norm, second norm) per sweep point.
std::pair<double, double> order_fit(double theta, int sigma, const std::vector<double>& deltas,
                                    int grid_n = 96,
                                    std::vector<std::array<double, 3>>* rows = nullptr);

struct ExpansionReport {
    double c6_measured = 0.0;
    double c8_bound = 0.0;
    std::vector<double> deltas;    // ascending
    std::vector<double> n_values;  // ||Phi(delta g)||_{L4}^4
    std::vector<double> d_values;  // (N - S0 delta^4) / delta^6
    double c6_ref_interaction = 0.0; // 4 sigma S(v_theta)/|S^3|^3
    double s1_ref = 0.0;             // sigma S1(sigma)
};

// Richardson-extrapolated delta^6 coefficient of ||Phi(delta g_theta)||^4_{L4}
// and the stability bound on the delta^8 remainder. Needs >= 5 deltas.
ExpansionReport expansion_coefficient(double theta, int sigma, const std::vector<double>& deltas,
                                      int grid_n = 96);

struct CandidateMax {
    double theta_star = 0.0;
    double value = 0.0;
    std::vector<double> thetas;
    std::vector<double> values;
};

CandidateMax candidate_max(double delta, int sigma, const std::vector<double>& theta_grid,
                           int grid_n = 96);

// ||Phi((delta+eps) g) - (1+eps/delta) Phi(delta g)||_{L4}; O(eps delta^2).
double perturbation_residual(double theta, int sigma, double delta, double eps, int grid_n = 96);

} // namespace cwave
