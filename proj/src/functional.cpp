#include "cwave/functional.hpp"

#include <cmath>

#include "cwave/duhamel.hpp"
#include "cwave/errors.hpp"
#include "cwave/quadrature.hpp"

namespace cwave {

namespace {
constexpr double kPi = 3.14159265358979323846;
} // namespace

ConstantsTable ConstantsTable::values() {
    ConstantsTable t;
    t.s0 = 3.0 / (16.0 * kPi);
    t.sphere_volume = 2.0 * kPi * kPi;
    double p3 = kPi * kPi * kPi;
    t.s1_focusing = 29.0 / (1024.0 * p3);
    t.s1_defocusing = 5.0 / (1024.0 * p3);
    return t;
}

PhaseAngle::PhaseAngle(double t) {
    theta = std::fmod(t, 2.0 * kPi);
    if (theta < 0.0) theta += 2.0 * kPi;
}

double scal(const Field& F) {
    Field W = antibox_cubic(F);
    const int n = F.n();
    const auto& X = F.grid->nodes;
    const auto& w = F.grid->weights;
    double total = 0.0;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            double s = std::sin(X[j] - X[i]);
            double u = F.at(i, j);
            total += w[i] * w[j] * (u * u * u / (s * s)) * W.at(i, j);
        }
    }
    double out = 4.0 * kPi * total;
    if (!std::isfinite(out)) throw AccuracyError("scal: non-finite quadrature value");
    return out;
}

double scal_closed_form(PhaseAngle theta) {
    double c = std::cos(theta);
    return kPi * kPi * kPi * (24.0 * c * c + 5.0) / 128.0;
}

double scal_quadrature4(PhaseAngle theta, int n) {
    if (n < 32) throw ConfigError("scal_quadrature4: need n >= 32");
    const double a = -kPi / 2.0, b = kPi / 2.0;
    std::vector<double> x = chebyshev_lobatto(n, a, b);
    std::vector<double> w = clenshaw_curtis_weights(n, a, b);

    // F[i*n+j] = F(Y_i, Z_j), first slot the Xm-like variable.
    std::vector<double> Fv(static_cast<size_t>(n) * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            double c = std::cos(x[i] + x[j] - theta);
            Fv[static_cast<size_t>(i) * n + j] = std::sin(x[j] - x[i]) * c * c * c;
        }
    }

    // Prefix-integrate from the (-pi/2, -pi/2) corner: rows in Z, columns in Y.
    std::vector<double> Wv(static_cast<size_t>(n) * n);
    std::vector<double> line(n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) line[j] = Fv[static_cast<size_t>(i) * n + j];
        std::vector<double> pref = chebyshev_cumulative_values(line, a, b);
        for (int j = 0; j < n; ++j) Wv[static_cast<size_t>(i) * n + j] = pref[j];
    }
    for (int j = 0; j < n; ++j) {
        for (int i = 0; i < n; ++i) line[i] = Wv[static_cast<size_t>(i) * n + j];
        std::vector<double> pref = chebyshev_cumulative_values(line, a, b);
        for (int i = 0; i < n; ++i) Wv[static_cast<size_t>(i) * n + j] = pref[i];
    }

    double total = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            total += w[i] * w[j] * Fv[static_cast<size_t>(i) * n + j] * Wv[static_cast<size_t>(i) * n + j];
    return 4.0 * kPi * total;
}

PhaseAngle best_theta(int sigma) {
    if (sigma > 0) return PhaseAngle(0.0);
    if (sigma < 0) return PhaseAngle(kPi / 2.0);
    throw DomainError("best_theta: sigma must be nonzero");
}

double i_expansion(double delta, int sigma) {
    ConstantsTable t = ConstantsTable::values();
    double s1 = sigma > 0 ? t.s1_focusing : t.s1_defocusing;
    double d2 = delta * delta;
    double d4 = d2 * d2;
    return t.s0 * d4 + sigma * s1 * d4 * d2;
}

} // namespace cwave
