// Homogeneous Sobolev norms of radial data pairs through the 3D radial
// Fourier transform F(rho) = (4 pi / rho) \int_0^inf f(r) sin(rho r) r dr.
// Convention: forward transform e^{-i x.xi}, Plancherel weight (2 pi)^{-3},
// so ||f||_{Hs}^2 = (2 pi^2)^{-1} \int_0^inf rho^{2s+2} F(rho)^2 drho.
#pragma once

#include <functional>
#include <string>
#include <vector>

namespace cwave {

enum class DecayClass { rational, compact, schwartz };

struct RadialProfile {
    std::function<double(double)> eval; // r >= 0
    DecayClass decay_class = DecayClass::rational;
    // Radius beyond which the profile is tail-like (no further features);
    // the oscillatory quadrature switches to accelerated half-period panels there.
    double r_feature = 16.0;

    double operator()(double r) const { return eval(r); }

    static RadialProfile zero();
    // Sampled profile: natural cubic spline in log r between the samples,
    // even quadratic continuation below the first radius, decay-class tail
    // beyond the last (power fit / zero / exponential fit).
    static RadialProfile from_samples(std::vector<double> r, std::vector<double> v,
                                      DecayClass decay = DecayClass::rational);
    // Two-column text (r, value), strictly increasing r.
    static RadialProfile from_file(const std::string& path,
                                   DecayClass decay = DecayClass::rational);
};

struct DataPair {
    RadialProfile f0; // position component, Hdot^{1/2}
    RadialProfile f1; // velocity component, Hdot^{-1/2}
};

struct FrequencyGrid {
    std::vector<double> nodes;   // strictly increasing, > 0
    std::vector<double> weights; // positive, integrate smooth g on [0, rho_max]

    // Gauss-Legendre in u with rho = tan(pi u / 2), capped at rho_max.
    static FrequencyGrid make(int n = 400, double rho_max = 60.0);
    static const FrequencyGrid& standard(); // shared default instance
};

// Transform values at the grid nodes. With check = true the result is
// re-computed at a refined panel order at a few nodes and an AccuracyError is
// thrown if the relative change exceeds tol.
std::vector<double> radial_fourier(const RadialProfile& f, const FrequencyGrid& grid,
                                   bool check = false, double tol = 1e-8);

// s must be +1/2 or -1/2.
double sobolev_norm_sq(const RadialProfile& f, double s,
                       const FrequencyGrid& grid = FrequencyGrid::standard());

double pair_norm_sq(const DataPair& d, const FrequencyGrid& grid = FrequencyGrid::standard());
double pair_inner(const DataPair& a, const DataPair& b,
                  const FrequencyGrid& grid = FrequencyGrid::standard());

// Transform-side representation of a pair on a fixed grid; all Sobolev
// arithmetic is diagonal here.
struct SpectralPair {
    const FrequencyGrid* grid = nullptr;
    std::vector<double> F0, F1;
};

SpectralPair to_spectral(const DataPair& d, const FrequencyGrid& grid = FrequencyGrid::standard());
double pair_norm_sq(const SpectralPair& a);
double pair_inner(const SpectralPair& a, const SpectralPair& b);

// Oscillatory quadrature \int_0^inf f(r) sin(rho r) r dr used by the
// transform; exposed for reuse and testing. panel_order is the Gauss order
// per half-period panel.
double sin_transform_integral(const RadialProfile& f, double rho, int panel_order = 16,
                              int tail_terms = 48);

} // namespace cwave
