#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <vector>

#include "cwave/errors.hpp"
#include "cwave/functional.hpp"
#include "cwave/picard.hpp"
#include "cwave/sobolev.hpp"

using namespace cwave;

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kTwoPiSq = 2.0 * kPi * kPi;

double rel(double a, double b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

} // namespace

TEST_CASE("family pair norms") {
    for (double theta : {0.0, kPi / 3.0, kPi / 2.0})
        CHECK(rel(pair_norm_sq(family_pair(theta)), kTwoPiSq) < 1e-8);
    for (double delta : {0.1, 0.3})
        CHECK(rel(pair_norm_sq(normalized_family_pair(0.7, delta)), delta * delta) < 1e-8);
    DataPair half = scale_pair(family_pair(0.2), 0.5);
    CHECK(rel(pair_norm_sq(half), 0.25 * kTwoPiSq) < 1e-8);
}

TEST_CASE("geometric_deltas") {
    std::vector<double> d = geometric_deltas(0.1, 0.4, 5);
    REQUIRE(d.size() == 5);
    CHECK(d.front() == 0.1);
    CHECK(d.back() == 0.4);
    for (size_t i = 1; i < d.size(); ++i)
        CHECK(rel(d[i] / d[i - 1], std::pow(4.0, 0.25)) < 1e-12);
    CHECK_THROWS_AS(geometric_deltas(0.1, 0.4, 1), ConfigError);
    CHECK_THROWS_AS(geometric_deltas(0.4, 0.1, 5), ConfigError);
    CHECK_THROWS_AS(geometric_deltas(0.0, 0.1, 5), ConfigError);
}

TEST_CASE("solver contracts on small data for both signs") {
    for (int sigma : {1, -1}) {
        SolverConfig cfg;
        cfg.sigma = sigma;
        cfg.delta = 0.3;
        cfg.theta = PhaseAngle(0.4);
        cfg.grid_n = 64;
        SolveReport rep = solve(normalized_family_pair(0.4, 0.3), cfg);
        CHECK(rep.iterations < 60);
        CHECK(rep.final_residual < 1e-12);
        CHECK(rep.contraction_ratio < 0.05);
        CHECK(rep.field.swap_odd_defect() < 1e-12);
        CHECK(rep.l4_norm4 > 0.0);
    }
}

TEST_CASE("sigma = 0 reproduces the linear evolution bit for bit") {
    SolverConfig cfg;
    cfg.sigma = 0;
    cfg.delta = 0.3;
    cfg.grid_n = 32;
    DataPair d = normalized_family_pair(0.9, 0.3);
    SolveReport rep = solve(d, cfg);
    Field lin = linear_evolve(lift_data(d), SquareGrid::make(32));
    REQUIRE(rep.field.values.size() == lin.values.size());
    for (size_t k = 0; k < lin.values.size(); ++k) CHECK(rep.field.values[k] == lin.values[k]);
}

TEST_CASE("large data escapes the contraction regime") {
    SolverConfig cfg;
    cfg.sigma = 1;
    cfg.delta = 50.0;
    cfg.grid_n = 32;
    cfg.max_iter = 40;
    CHECK_THROWS_AS(solve(normalized_family_pair(0.0, 50.0), cfg), DivergenceError);
}

TEST_CASE("solver validates its configuration") {
    SolverConfig cfg;
    cfg.fp_tol = 0.0;
    CHECK_THROWS_AS(solve(family_pair(0.0), cfg), ConfigError);
    SolverConfig neg;
    neg.delta = -1.0;
    CHECK_THROWS_AS(solve(family_pair(0.0), neg), ConfigError);
}

TEST_CASE("small-delta spacetime norm follows the two-term expansion") {
    double delta = 0.05, theta = 0.0;
    int sigma = 1;
    SolverConfig cfg;
    cfg.sigma = sigma;
    cfg.delta = delta;
    cfg.grid_n = 64;
    SolveReport rep = solve(normalized_family_pair(theta, delta), cfg);
    double c6 = 4.0 * scal_closed_form(PhaseAngle(theta)) / std::pow(kTwoPiSq, 3);
    double predicted = ConstantsTable::values().s0 * std::pow(delta, 4) +
                       sigma * c6 * std::pow(delta, 6);
    CHECK(rel(rep.l4_norm4, predicted) < 1e-5);
}

TEST_CASE("anchored solver carries the prescribed data at t = 0") {
    SolverConfig cfg;
    cfg.sigma = 1;
    cfg.delta = 0.25;
    cfg.theta = PhaseAngle(0.8);
    cfg.grid_n = 64;
    cfg.anchor_t0 = true;
    DataPair d = normalized_family_pair(0.8, 0.25);
    SolveReport rep = solve(d, cfg);
    for (double r : {0.5, 1.0, 3.0}) {
        auto [u, ut] = field_value_minkowski(rep.field, 0.0, r);
        CHECK(rel(u, d.f0(r)) < 1e-8);
        CHECK(std::abs(ut - d.f1(r)) < 1e-8);
    }
}

TEST_CASE("ancient solver picks up a nonlinear data correction at t = 0") {
    // without anchoring, the fixed point's Cauchy data at t = 0 differs from
    // the prescription by O(delta^3)
    SolverConfig cfg;
    cfg.sigma = 1;
    cfg.delta = 0.3;
    cfg.grid_n = 64;
    DataPair d = normalized_family_pair(0.0, 0.3);
    SolveReport rep = solve(d, cfg);
    double worst = 0.0;
    for (double r : {0.5, 1.0, 2.0}) {
        auto [u, ut] = field_value_minkowski(rep.field, 0.0, r);
        worst = std::max(worst, std::abs(u - d.f0(r)));
    }
    CHECK(worst > 1e-5);
    CHECK(worst < 0.01);
}

TEST_CASE("order fit recovers the contraction exponents") {
    std::vector<std::array<double, 3>> rows;
    auto deltas = geometric_deltas(0.1, 0.35, 4);
    auto [s3, s5] = order_fit(0.3, -1, deltas, 64, &rows);
    CHECK(std::abs(s3 - 3.0) < 0.25);
    CHECK(std::abs(s5 - 5.0) < 0.3);
    REQUIRE(rows.size() == deltas.size());
    for (size_t i = 0; i < rows.size(); ++i) {
        CHECK(rows[i][0] == deltas[i]);
        CHECK(rows[i][1] > 0.0);
        CHECK(rows[i][2] > 0.0);
        CHECK(rows[i][2] < rows[i][1]); // the second-order defect is smaller
        if (i > 0) {
            CHECK(rows[i][1] > rows[i - 1][1]);
            CHECK(rows[i][2] > rows[i - 1][2]);
        }
    }
    CHECK_THROWS_AS(order_fit(0.0, 1, {0.1, 0.2, 0.3}, 64), ConfigError);
}

TEST_CASE("expansion coefficient measurement: value, references, remainder") {
    auto deltas = geometric_deltas(0.2, 0.5, 5);
    ExpansionReport rep = expansion_coefficient(0.0, 1, deltas, 64);
    CHECK(rep.c6_measured > 0.0);
    CHECK(rel(rep.c6_ref_interaction,
              4.0 * scal_closed_form(PhaseAngle(0.0)) / std::pow(kTwoPiSq, 3)) < 1e-12);
    CHECK(rel(rep.s1_ref, ConstantsTable::values().s1_focusing) < 1e-12);
    CHECK(std::abs(rep.c6_measured - rep.c6_ref_interaction) <
          0.02 * std::abs(rep.c6_ref_interaction));
    CHECK(rep.c8_bound > 0.0);
    REQUIRE(rep.n_values.size() == deltas.size());
    REQUIRE(rep.d_values.size() == deltas.size());
    for (size_t i = 0; i < deltas.size(); ++i) {
        // d = (N - S0 d^4)/d^6 reproduces N
        double n_back = ConstantsTable::values().s0 * std::pow(deltas[i], 4) +
                        rep.d_values[i] * std::pow(deltas[i], 6);
        CHECK(rel(n_back, rep.n_values[i]) < 1e-12);
    }
    CHECK_THROWS_AS(expansion_coefficient(0.0, 1, {0.2, 0.3, 0.4, 0.5}, 64), ConfigError);

    ExpansionReport neg = expansion_coefficient(kPi / 2.0, -1, deltas, 64);
    CHECK(neg.c6_measured < 0.0);
    CHECK(neg.s1_ref < 0.0);
}

TEST_CASE("candidate_max lands on the sign-dependent maximizing phase") {
    std::vector<double> grid;
    for (int k = 0; k < 24; ++k) grid.push_back(2.0 * kPi * k / 24.0);
    CandidateMax plus = candidate_max(0.25, 1, grid, 48);
    double dplus = std::fmod(plus.theta_star, kPi);
    CHECK(std::min(dplus, kPi - dplus) < 1e-9);
    REQUIRE(plus.thetas.size() == grid.size());
    REQUIRE(plus.values.size() == grid.size());
    CHECK(plus.value >= *std::max_element(plus.values.begin(), plus.values.end()) - 1e-15);

    CandidateMax minus = candidate_max(0.25, -1, grid, 48);
    double dminus = std::fmod(minus.theta_star, kPi);
    CHECK(std::abs(dminus - kPi / 2.0) < 1e-9);

    CHECK_THROWS_AS(candidate_max(0.25, 1, {}, 48), ConfigError);
}

TEST_CASE("perturbation residual scales like eps * delta^2") {
    CHECK(perturbation_residual(0.0, 1, 0.3, 0.0, 48) == 0.0);
    double r1 = perturbation_residual(0.0, 1, 0.3, 0.01, 64);
    double r2 = perturbation_residual(0.0, 1, 0.3, 0.02, 64);
    double r4 = perturbation_residual(0.0, 1, 0.3, 0.04, 64);
    double k1 = r1 / (0.01 * 0.09), k2 = r2 / (0.02 * 0.09), k4 = r4 / (0.04 * 0.09);
    double lo = std::min({k1, k2, k4}), hi = std::max({k1, k2, k4});
    CHECK(lo > 0.0);
    CHECK(hi / lo - 1.0 < 0.3);
}
