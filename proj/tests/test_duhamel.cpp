#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <vector>

#include "cwave/duhamel.hpp"
#include "cwave/errors.hpp"
#include "cwave/penrose_field.hpp"
#include "cwave/picard.hpp"

using namespace cwave;

namespace {

constexpr double kPi = 3.14159265358979323846;

Field family_field(double theta, int n) {
    return linear_evolve(lift_data(family_pair(theta)), SquareGrid::make(n));
}

// mixed second difference of the interpolant, approximating d2 W / dXm dXp
double mixed_fd(const Field& W, double a, double b, double h) {
    return (W.interp(a + h, b + h) - W.interp(a + h, b - h) - W.interp(a - h, b + h) +
            W.interp(a - h, b - h)) /
           (4.0 * h * h);
}

} // namespace

TEST_CASE("cubic_source: diagonal zero, swap-odd, pointwise values") {
    Field U = family_field(0.4, 48);
    SourceField S = cubic_source(U);
    REQUIRE(S.n() == 48);
    const auto& X = U.grid->nodes;
    for (int i = 0; i < S.n(); ++i) CHECK(S.at(i, i) == 0.0);
    CHECK(S.swap_odd_defect() < 1e-12);
    for (int i = 0; i < S.n(); i += 7)
        for (int j = 0; j < S.n(); j += 5) {
            if (i == j) continue;
            double s = std::sin(X[j] - X[i]);
            double expected = std::pow(U.at(i, j), 3) / (s * s);
            CHECK(std::abs(S.at(i, j) - expected) < 1e-12 * std::max(1.0, std::abs(expected)));
        }
}

TEST_CASE("wtheta_exact: frozen reference values and structural zeros") {
    CHECK(std::abs(wtheta_exact(0.0, kPi / 2.0, 0.0) - 3.0 * kPi / 8.0) < 1e-13);
    CHECK(std::abs(wtheta_exact(0.3, 1.1, 0.7) - 0.55846650315232864509) < 1e-12);
    CHECK(std::abs(wtheta_exact(-0.9, 0.2, 2.4) - (-0.2164623003972847508)) < 1e-12);
    CHECK(std::abs(wtheta_exact(1.2, 1.5, -0.5) - (-0.02394910608909023344)) < 1e-12);

    // zero on the past characteristic and on the diagonal, swap-odd in between
    for (double b : {-1.0, 0.0, 1.2}) CHECK(std::abs(wtheta_exact(-kPi / 2.0, b, 0.7)) < 1e-13);
    for (double a : {-0.8, 0.1, 1.3}) CHECK(std::abs(wtheta_exact(a, a, 0.7)) < 1e-13);
    CHECK(std::abs(wtheta_exact(0.2, 0.9, 1.1) + wtheta_exact(0.9, 0.2, 1.1)) < 1e-13);

    CHECK_THROWS_AS(wtheta_exact(-2.0, 0.0, 0.0), DomainError);
    CHECK_THROWS_AS(wtheta_exact(0.0, 2.0, 0.0), DomainError);
}

TEST_CASE("goursat_solve matches the closed-form integral of the family source") {
    for (int n : {96, 160}) {
        double theta = 0.7;
        Field W = goursat_solve(cubic_source(family_field(theta, n)));
        const auto& X = W.grid->nodes;
        double sup = 0.0;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                sup = std::max(sup, std::abs(W.at(i, j) - wtheta_exact(X[i], X[j], theta)));
        CHECK(sup < (n == 96 ? 1e-8 : 1e-10));
    }
}

TEST_CASE("goursat_solve: linearity, antisymmetry, boundary data") {
    int n = 48;
    SourceField S1 = cubic_source(family_field(0.3, n));
    SourceField S2 = cubic_source(family_field(1.2, n));
    SourceField S12 = S1;
    for (size_t k = 0; k < S12.values.size(); ++k) S12.values[k] += S2.values[k];

    Field W1 = goursat_solve(S1), W2 = goursat_solve(S2), W12 = goursat_solve(S12);
    for (size_t k = 0; k < W12.values.size(); ++k)
        CHECK(std::abs(W12.values[k] - W1.values[k] - W2.values[k]) < 1e-12);

    CHECK(W1.swap_odd_defect() == 0.0); // exact after antisymmetrization
    // characteristic data: zero on the past edge and on the diagonal, up to
    // the n = 48 discretization error of the solution itself
    for (double b : {-1.2, 0.0, 0.9}) CHECK(std::abs(W1.interp(-kPi / 2.0, b)) < 1e-6);
    for (double c : {-0.7, 0.2, 1.1}) CHECK(std::abs(W1.interp(c, c)) < 1e-6);
}

TEST_CASE("goursat_solve rejects non-swap-odd sources") {
    auto g = SquareGrid::make(16);
    SourceField S;
    S.grid = g;
    S.values.assign(16 * 16, 1.0);
    CHECK_THROWS_AS(goursat_solve(S), InvariantError);
    CHECK_THROWS_AS(centered_solve(S), InvariantError);
}

TEST_CASE("solution operators invert the mixed derivative") {
    int n = 64;
    double theta = 0.5;
    Field U = family_field(theta, n);
    SourceField S = cubic_source(U);
    Field Wg = goursat_solve(S);
    Field Wc = centered_solve(S);
    // h balances the O(h^2) truncation against interpolation noise / h^2
    double a = -0.4, b = 0.9, h = 0.05;
    double source = std::sin(b - a) * std::pow(std::cos(a + b - theta), 3);
    CHECK(std::abs(mixed_fd(Wg, a, b, h) - source) < 5e-3);
    CHECK(std::abs(mixed_fd(Wc, a, b, h) - source) < 5e-3);
}

TEST_CASE("centered_solve vanishes to second order on the central slice") {
    Field W = centered_solve(cubic_source(family_field(0.8, 96)));
    for (double a : {0.2, 0.7, 1.2}) {
        CHECK(std::abs(W.interp(-a, a)) < 1e-7);
        // d/dT along the slice is the sum of the two partials
        CHECK(std::abs(W.interp_dXm(-a, a) + W.interp_dXp(-a, a)) < 1e-4);
    }
    CHECK(W.swap_odd_defect() == 0.0);

    // zero source stays zero
    auto g = SquareGrid::make(16);
    SourceField Z;
    Z.grid = g;
    Z.values.assign(16 * 16, 0.0);
    for (double v : centered_solve(Z).values) CHECK(v == 0.0);
    for (double v : goursat_solve(Z).values) CHECK(v == 0.0);
}

TEST_CASE("centered and goursat solutions differ by a null-separable correction") {
    // W_c - W_g = A(Xm) + B(Xp) + const, so the mixed derivative of the
    // difference vanishes identically.
    int n = 64;
    Field Wg = goursat_solve(cubic_source(family_field(1.0, n)));
    Field Wc = centered_solve(cubic_source(family_field(1.0, n)));
    Field D = Wg;
    for (size_t k = 0; k < D.values.size(); ++k) D.values[k] = Wc.values[k] - Wg.values[k];
    for (auto [a, b] : {std::pair{-0.5, 0.3}, {0.1, 1.0}, {-1.1, -0.2}})
        CHECK(std::abs(mixed_fd(D, a, b, 0.05)) < 5e-3);
}

TEST_CASE("antibox_cubic composes source and solve") {
    int n = 48;
    double theta = 1.0;
    Field U = family_field(theta, n);
    Field W = antibox_cubic(U);
    const auto& X = W.grid->nodes;
    for (int i = 0; i < n; i += 5)
        for (int j = 0; j < n; j += 7)
            CHECK(std::abs(W.at(i, j) - wtheta_exact(X[i], X[j], theta)) < 1e-5);

    // cubic homogeneity
    Field U2 = U;
    for (double& v : U2.values) v *= 2.0;
    Field W2 = antibox_cubic(U2);
    for (int k = 0; k < n * n; k += 17)
        CHECK(std::abs(W2.values[k] - 8.0 * W.values[k]) < 1e-11);

    // centered variant shares the cubic source
    Field Wc = antibox_cubic_centered(U);
    Field Wc2 = centered_solve(cubic_source(U));
    for (size_t k = 0; k < Wc.values.size(); ++k) CHECK(Wc.values[k] == Wc2.values[k]);
}
