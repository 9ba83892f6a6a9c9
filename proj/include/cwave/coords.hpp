// Lorentz boosts, Poincare dilation-translation transforms, and the Penrose
// maps between Minkowski space and the compactified null square.
#pragma once

#include <array>
#include <utility>

namespace cwave {

using FourPoint = std::array<double, 4>; // (t, x1, x2, x3)

struct BoostParams {
    std::array<double, 3> beta{0.0, 0.0, 0.0}; // velocity, |beta| < 1

    BoostParams() = default;
    explicit BoostParams(const std::array<double, 3>& b); // validates |b| < 1
    double speed() const;                                 // |beta|
    double gamma() const;                                 // (1 - |beta|^2)^{-1/2}
};

struct PoincareParams {
    double lambda = 1.0; // dilation, > 0
    BoostParams beta;
    double t0 = 0.0;
    std::array<double, 3> x0{0.0, 0.0, 0.0};

    PoincareParams() = default;
    PoincareParams(double lambda_, BoostParams beta_, double t0_,
                   const std::array<double, 3>& x0_);
};

// Null coordinates x- = t - r, x+ = t + r (r >= 0, so xm <= xp).
struct NullCoords {
    double xm = 0.0, xp = 0.0;
    NullCoords() = default;
    NullCoords(double xm_, double xp_);
};

// Compactified null coordinates X± = arctan x±. The physical domain is the
// triangle Xm <= Xp; swap-odd mirror points fill out the closed square, which
// is what the constructor validates (tolerance 1e-12 rad).
struct PenrosePoint {
    double Xm = 0.0, Xp = 0.0;
    PenrosePoint() = default;
    PenrosePoint(double Xm_, double Xp_);
    bool in_triangle() const { return Xm <= Xp; }
    double T() const { return Xp + Xm; }
    double R() const { return Xp - Xm; }
};

// Boost along the x1 axis with velocity alpha; throws DomainError if |alpha| >= 1.
FourPoint apply_boost(double alpha, const FourPoint& p);

// General-direction boost, realized by conjugating the axis boost with the
// rotation taking beta to the x1 axis.
FourPoint apply_boost(const BoostParams& b, const FourPoint& p);

// p -> L^beta(lambda (t - t0), lambda (x - x0)).
FourPoint apply_poincare(const PoincareParams& P, const FourPoint& p);

PenrosePoint penrose_forward(double t, double r); // r >= 0
// (t, r) from a point strictly inside the triangle; boundary -> DomainError.
std::pair<double, double> penrose_inverse(const PenrosePoint& q);

// Omega = 2 cos X+ cos X-; zero exactly on the null boundary.
double conformal_factor(const PenrosePoint& q);

// tau^2 - |xi|^2, the invariant of apply_boost.
double minkowski_form(const FourPoint& p);

} // namespace cwave
