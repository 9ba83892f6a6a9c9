#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "cwave/errors.hpp"
#include "cwave/penrose_field.hpp"
#include "cwave/picard.hpp"
#include "cwave/projection.hpp"
#include "cwave/sobolev.hpp"

using namespace cwave;

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kTwoPiSq = 2.0 * kPi * kPi;

double rel(double a, double b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

double theta_dist(double a, double b) {
    double d = std::fmod(std::abs(a - b), 2.0 * kPi);
    return std::min(d, 2.0 * kPi - d);
}

} // namespace

TEST_CASE("gamma_apply at the identity reproduces the ground pair") {
    DataPair d = gamma_apply(ManifoldParams{});
    DataPair f = family_pair(0.0);
    for (double r : {0.2, 1.0, 4.0}) {
        CHECK(rel(d.f0(r), f.f0(r)) < 1e-13);
        CHECK(std::abs(d.f1(r) - f.f1(r)) < 1e-13);
    }
    CHECK(rel(pair_norm_sq(d), kTwoPiSq) < 1e-8);

    ManifoldParams th;
    th.theta = PhaseAngle(1.1);
    DataPair dth = gamma_apply(th);
    DataPair fth = family_pair(1.1);
    for (double r : {0.2, 1.0, 4.0}) {
        CHECK(rel(dth.f0(r), fth.f0(r)) < 1e-13);
        CHECK(rel(dth.f1(r), fth.f1(r)) < 1e-13);
    }
}

TEST_CASE("transform-side norm identity: amplitude scales, the rest preserves") {
    ManifoldParams p;
    p.c = 0.8;
    p.lambda = 2.5;
    p.theta = PhaseAngle(0.9);
    p.t0 = -0.7;
    CHECK(rel(pair_norm_sq(gamma_apply(p)), p.c * p.c * kTwoPiSq) < 1e-6);
}

TEST_CASE("gamma_apply agrees with the evolved-field pipeline") {
    // data of c lam v_theta(lam(t - t0), lam x) at t = 0, lam = 1: sample the
    // family solution at Minkowski time -t0
    double theta = 0.6, t0 = 0.4, c = 1.3;
    ManifoldParams p;
    p.c = c;
    p.theta = PhaseAngle(theta);
    p.t0 = t0;
    DataPair d = gamma_apply(p);
    Field F = linear_evolve(lift_data(family_pair(theta)), SquareGrid::make(64));
    for (double r : {0.3, 1.0, 2.7}) {
        auto [u, ut] = field_value_minkowski(F, -t0, r);
        CHECK(rel(d.f0(r), c * u) < 1e-6);
        CHECK(rel(d.f1(r), c * ut) < 1e-6);
    }
}

TEST_CASE("gamma_spectral matches the transform of gamma_apply") {
    double c = 1.3, lambda = 0.8, theta = 2.0, t0 = 0.5;
    FrequencyGrid grid = FrequencyGrid::make(400, 60.0);
    ManifoldParams p;
    p.c = c;
    p.lambda = lambda;
    p.theta = PhaseAngle(theta);
    p.t0 = t0;
    SpectralPair lhs = gamma_spectral(c, lambda, theta, t0, grid);
    SpectralPair rhs = to_spectral(gamma_apply(p), grid);
    REQUIRE(lhs.F0.size() == rhs.F0.size());
    double scale = 0.0;
    for (double v : rhs.F0) scale = std::max(scale, std::abs(v));
    for (size_t i = 0; i < lhs.F0.size(); ++i) {
        CHECK(std::abs(lhs.F0[i] - rhs.F0[i]) < 1e-7 * scale);
        CHECK(std::abs(lhs.F1[i] - rhs.F1[i]) < 1e-7 * scale * grid.nodes[i]);
    }
    // negative amplitude folds into a phase shift
    SpectralPair neg = gamma_spectral(-c, lambda, theta + kPi, t0, grid);
    for (size_t i = 0; i < neg.F0.size(); ++i) {
        CHECK(std::abs(neg.F0[i] - lhs.F0[i]) < 1e-10 * scale);
        CHECK(std::abs(neg.F1[i] - lhs.F1[i]) < 1e-10 * scale * grid.nodes[i]);
    }
    CHECK_THROWS_AS(gamma_spectral(1.0, -2.0, 0.0, 0.0, grid), ConfigError);
}

TEST_CASE("project_radial recovers on-manifold points") {
    struct Target {
        double c, lambda, theta, t0;
    } targets[] = {{0.8, 1.3, 0.9, 0.4}, {1.2, 0.6, 4.0, -0.5}};
    for (const Target& t : targets) {
        ManifoldParams p;
        p.c = t.c;
        p.lambda = t.lambda;
        p.theta = PhaseAngle(t.theta);
        p.t0 = t.t0;
        ProjectionResult res = project_radial(gamma_apply(p), ManifoldParams{});
        CHECK(res.residual < 1e-8);
        CHECK(std::abs(res.params.c - t.c) < 1e-5);
        CHECK(std::abs(res.params.lambda - t.lambda) < 1e-5);
        CHECK(theta_dist(res.params.theta, t.theta) < 1e-5);
        CHECK(std::abs(res.params.t0 - t.t0) < 1e-5);
        CHECK(std::abs(res.orthogonality) < 1e-5);
        CHECK(res.evaluations > 0);
    }
}

TEST_CASE("project_radial handles off-manifold data") {
    // small symmetric bump added to the ground position component
    ManifoldParams p;
    DataPair d = gamma_apply(p);
    auto base = d.f0.eval;
    d.f0.eval = [base](double r) { return base(r) + 0.05 * r * r * std::exp(-r * r); };
    ProjectionResult res = project_radial(d, ManifoldParams{});
    CHECK(res.residual > 1e-3);   // genuinely off the manifold
    CHECK(res.residual < 0.5);    // but close to it
    CHECK(std::abs(res.orthogonality) < 1e-4);

    DataPair zero{RadialProfile::zero(), RadialProfile::zero()};
    CHECK_THROWS_AS(project_radial(zero, ManifoldParams{}), DomainError);
}

TEST_CASE("gram matrix of the tangent directions") {
    GramReport g = gram_matrix();
    // scaling direction is the pair itself
    CHECK(rel(g.matrix[0][0], kTwoPiSq) < 1e-6);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < i; ++j)
            CHECK(std::abs(g.matrix[i][j] - g.matrix[j][i]) < 1e-9 * kTwoPiSq);
    // frozen spectrum of the default-point Gram matrix
    const double expected[4] = {4.3273001882382278, 9.8696044010887327, 19.739208802178716,
                                45.020721257930987};
    for (int k = 0; k < 4; ++k) {
        CHECK(g.eigenvalues[k] > 0.0);
        if (k > 0) CHECK(g.eigenvalues[k] >= g.eigenvalues[k - 1]);
        CHECK(rel(g.eigenvalues[k], expected[k]) < 1e-6);
    }
    // two of the eigenvalues are pi^2 and 2 pi^2
    CHECK(rel(g.eigenvalues[1], kPi * kPi) < 1e-6);
    CHECK(rel(g.eigenvalues[2], kTwoPiSq) < 1e-6);
}
