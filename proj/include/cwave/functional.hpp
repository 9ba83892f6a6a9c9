// The sextic interaction functional S(w) = iint w^3 box^{-1}(w^3), its closed
// form on the phase family, and the sharp constants of the small-data
// expansion.
#pragma once

#include "cwave/penrose_field.hpp"

namespace cwave {

struct ConstantsTable {
    double s0;             // 3/(16 pi)
    double sphere_volume;  // |S^3| = 2 pi^2
    double s1_focusing;    // 29/(2^10 pi^3)
    double s1_defocusing;  // 5/(2^10 pi^3)

    static ConstantsTable values();
};

// Angle reduced to [0, 2 pi).
struct PhaseAngle {
    double theta = 0.0;
    PhaseAngle() = default;
    PhaseAngle(double t); // implicit: radians in, reduced
    operator double() const { return theta; }
};

// 8 pi iint_T (U~^3 / sin^2 R) W~ with W~ = antibox_cubic(F), evaluated as
// half the full-square integral of the swap-even integrand.
double scal(const Field& F);

// pi^3 (24 cos^2 theta + 5) / 128.
double scal_closed_form(PhaseAngle theta);

// Direct quadruple integral 4 pi iint F (iint_corner F) over the square with
// F(Y,Z) = sin(Z-Y) cos^3(Y+Z-theta): Clenshaw-Curtis nodes and a 2D prefix
// integral, sharing no code with the Goursat path. n >= 32.
double scal_quadrature4(PhaseAngle theta, int n);

// Maximizing phase: 0 for focusing (sigma > 0), pi/2 for defocusing.
PhaseAngle best_theta(int sigma);

// S0 delta^4 + sigma S1(sigma) delta^6.
double i_expansion(double delta, int sigma);

} // namespace cwave
