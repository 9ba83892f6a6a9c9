// Discretized fields U~ = sin(R) V on the Penrose square, data lifting,
// d'Alembert linear evolution, the spacetime L^4 norm, and sampling back to
// Minkowski time slices.
#pragma once

#include <iosfwd>
#include <memory>
#include <utility>
#include <vector>

#include "cwave/interp.hpp"
#include "cwave/sobolev.hpp"

namespace cwave {

struct SquareGrid {
    int n = 0;
    std::vector<double> nodes;   // Gauss-Legendre points of [-pi/2, pi/2]
    std::vector<double> weights; // sum to pi per axis
    Barycentric bary;            // interpolation weights for the nodes

    static std::shared_ptr<const SquareGrid> make(int n); // n >= 16
};

// values[i*n + j] = U~(Xm_i, Xp_j); swap-odd: U~(a,b) = -U~(b,a).
struct Field {
    std::shared_ptr<const SquareGrid> grid;
    std::vector<double> values;

    int n() const { return grid->n; }
    double at(int i, int j) const { return values[static_cast<size_t>(i) * grid->n + j]; }
    double& at(int i, int j) { return values[static_cast<size_t>(i) * grid->n + j]; }

    // Global polynomial interpolation on the tensor grid and its partials.
    double interp(double Xm, double Xp) const;
    double interp_dXm(double Xm, double Xp) const;
    double interp_dXp(double Xm, double Xp) const;

    // max |U~(a,b) + U~(b,a)| over the grid.
    double swap_odd_defect() const;

    static Field zeros(std::shared_ptr<const SquareGrid> g);
};

// 1D reduction on R in [0, pi]: psi0 = sin(R) V|_{T=0}, psi1 = sin(R) dT V|_{T=0}.
struct CauchyData {
    std::function<double(double)> psi0, psi1;
};

// psi0(R) = sin R f0(tan(R/2)) / (1 + cos R), psi1 likewise with the square.
CauchyData lift_data(const DataPair& d);

// d'Alembert solution of the 1+1 wave equation with the odd extensions of
// (psi0, psi1) about R = 0; exact except for the psi1 antiderivative, which
// uses a 4x-oversampled Chebyshev fit.
Field linear_evolve(const CauchyData& c, std::shared_ptr<const SquareGrid> grid);

// ||u||_{L4(R^{1+3})}^4 = 8 pi \iint_T U~^4 / sin^2(Xp - Xm); computed as half
// the full-square integral of the swap-even integrand, 0 on the diagonal.
double l4_norm4(const Field& F);

// (u, d_t u) at Minkowski time t0 and radius r > 0, through v = Omega V.
std::pair<double, double> field_value_minkowski(const Field& F, double t0, double r);

// Profiles sampled at the given radii (ascending, > 0): spline between the
// samples, exact field evaluation outside their range.
std::pair<RadialProfile, RadialProfile> sample_minkowski(const Field& F, double t0,
                                                         const std::vector<double>& radii);

std::vector<double> log_radii(double r0, double r1, int n);

// Text dump: line 1 "n", line 2 nodes, then n rows of n values (row = fixed Xm).
void dump_field(const Field& F, std::ostream& os);
Field load_field(std::istream& is);

} // namespace cwave
