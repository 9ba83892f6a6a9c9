// Metric projection onto the radial slice of the maximizer manifold
// { c (phase, dilation, time translation) of the ground pair } and the Gram
// matrix of its tangent directions.
#pragma once

#include <array>

#include "cwave/functional.hpp"
#include "cwave/sobolev.hpp"

namespace cwave {

struct ManifoldParams {
    double c = 1.0;       // amplitude, >= 0
    double lambda = 1.0;  // dilation, > 0
    PhaseAngle theta{0.0};
    double t0 = 0.0;      // time translation
};

// Data of c lambda v_theta(lambda(t - t0), lambda x) at t = 0, in closed form.
DataPair gamma_apply(const ManifoldParams& p);

// The same pair directly on the transform side: phase rotation, free-wave
// time shift, dilation scaling of (4 pi^2 e^{-rho}/rho, 0). Exact for the
// family; c may be any real here (negative c folds into theta + pi).
SpectralPair gamma_spectral(double c, double lambda, double theta, double t0,
                            const FrequencyGrid& grid = FrequencyGrid::standard());

struct ProjectionResult {
    ManifoldParams params;
    double residual = 0.0;       // attained pair-norm distance
    double orthogonality = 0.0;  // worst normalized tangent inner product
    bool stagnated = false;
    int evaluations = 0;
};

// Nelder-Mead over (c, log lambda, theta, t0), restarted from theta seeds
// {0, pi/2, pi, 3 pi/2}; distance measured in the transform domain.
ProjectionResult project_radial(const DataPair& d, const ManifoldParams& init);

struct GramReport {
    std::array<std::array<double, 4>, 4> matrix; // directions: scaling (= Gamma itself), lambda, theta, t0
    std::array<double, 4> eigenvalues;           // ascending
};

// Pair inner products of the tangent directions at `at`; derivatives by
// central differences with step 1e-4.
GramReport gram_matrix(const ManifoldParams& at = ManifoldParams{});

} // namespace cwave
