#include "cwave/coords.hpp"

#include <cmath>
#include <numbers>

#include "cwave/errors.hpp"

namespace cwave {

namespace {
constexpr double kBoundaryTol = 1e-12; // triangle/square membership tolerance
constexpr double kHalfPi = std::numbers::pi / 2.0;
} // namespace

BoostParams::BoostParams(const std::array<double, 3>& b) : beta(b) {
    if (speed() >= 1.0) throw DomainError("BoostParams: |beta| must be < 1");
}

double BoostParams::speed() const {
    return std::sqrt(beta[0] * beta[0] + beta[1] * beta[1] + beta[2] * beta[2]);
}

double BoostParams::gamma() const {
    double s = speed();
    return 1.0 / std::sqrt((1.0 - s) * (1.0 + s));
}

PoincareParams::PoincareParams(double lambda_, BoostParams beta_, double t0_,
                               const std::array<double, 3>& x0_)
    : lambda(lambda_), beta(beta_), t0(t0_), x0(x0_) {
    if (!(lambda > 0.0)) throw DomainError("PoincareParams: lambda must be > 0");
}

NullCoords::NullCoords(double xm_, double xp_) : xm(xm_), xp(xp_) {
    if (xm > xp) throw DomainError("NullCoords: xm <= xp required (r >= 0)");
}

PenrosePoint::PenrosePoint(double Xm_, double Xp_) : Xm(Xm_), Xp(Xp_) {
    if (Xm < -kHalfPi - kBoundaryTol || Xm > kHalfPi + kBoundaryTol ||
        Xp < -kHalfPi - kBoundaryTol || Xp > kHalfPi + kBoundaryTol)
        throw DomainError("PenrosePoint: coordinates outside the closed square");
}

FourPoint apply_boost(double alpha, const FourPoint& p) {
    if (std::abs(alpha) >= 1.0) throw DomainError("apply_boost: |alpha| must be < 1");
    double g = 1.0 / std::sqrt((1.0 - alpha) * (1.0 + alpha));
    return {g * (p[0] - alpha * p[1]), g * (p[1] - alpha * p[0]), p[2], p[3]};
}

FourPoint apply_boost(const BoostParams& b, const FourPoint& p) {
    double s = b.speed();
    if (s >= 1.0) throw DomainError("apply_boost: |beta| must be < 1");
    if (s == 0.0) return p;
    // Rotation R maps beta-hat to e1; conjugate the axis boost: L = R^T L1 R.
    std::array<double, 3> e1 = {b.beta[0] / s, b.beta[1] / s, b.beta[2] / s};
    // Complete e1 to an orthonormal basis.
    std::array<double, 3> a =
        (std::abs(e1[0]) < 0.9) ? std::array<double, 3>{1.0, 0.0, 0.0}
                                : std::array<double, 3>{0.0, 1.0, 0.0};
    std::array<double, 3> e2 = {e1[1] * a[2] - e1[2] * a[1],
                                e1[2] * a[0] - e1[0] * a[2],
                                e1[0] * a[1] - e1[1] * a[0]};
    double n2 = std::sqrt(e2[0] * e2[0] + e2[1] * e2[1] + e2[2] * e2[2]);
    for (double& c : e2) c /= n2;
    std::array<double, 3> e3 = {e1[1] * e2[2] - e1[2] * e2[1],
                                e1[2] * e2[0] - e1[0] * e2[2],
                                e1[0] * e2[1] - e1[1] * e2[0]};
    auto dot = [](const std::array<double, 3>& u, const double* v) {
        return u[0] * v[0] + u[1] * v[1] + u[2] * v[2];
    };
    FourPoint rot = {p[0], dot(e1, &p[1]), dot(e2, &p[1]), dot(e3, &p[1])};
    FourPoint bst = apply_boost(s, rot);
    return {bst[0],
            e1[0] * bst[1] + e2[0] * bst[2] + e3[0] * bst[3],
            e1[1] * bst[1] + e2[1] * bst[2] + e3[1] * bst[3],
            e1[2] * bst[1] + e2[2] * bst[2] + e3[2] * bst[3]};
}

FourPoint apply_poincare(const PoincareParams& P, const FourPoint& p) {
    FourPoint shifted = {P.lambda * (p[0] - P.t0),
                         P.lambda * (p[1] - P.x0[0]),
                         P.lambda * (p[2] - P.x0[1]),
                         P.lambda * (p[3] - P.x0[2])};
    return apply_boost(P.beta, shifted);
}

PenrosePoint penrose_forward(double t, double r) {
    if (r < 0.0) throw DomainError("penrose_forward: r must be >= 0");
    return PenrosePoint(std::atan(t - r), std::atan(t + r));
}

std::pair<double, double> penrose_inverse(const PenrosePoint& q) {
    if (!q.in_triangle())
        throw DomainError("penrose_inverse: point not in the triangle (Xm <= Xp)");
    if (std::abs(q.Xm) >= kHalfPi - kBoundaryTol || std::abs(q.Xp) >= kHalfPi - kBoundaryTol)
        throw DomainError("penrose_inverse: point on the null boundary maps to infinity");
    double xm = std::tan(q.Xm), xp = std::tan(q.Xp);
    return {0.5 * (xp + xm), 0.5 * (xp - xm)};
}

double conformal_factor(const PenrosePoint& q) {
    return 2.0 * std::cos(q.Xp) * std::cos(q.Xm);
}

double minkowski_form(const FourPoint& p) {
    return p[0] * p[0] - p[1] * p[1] - p[2] * p[2] - p[3] * p[3];
}

} // namespace cwave
