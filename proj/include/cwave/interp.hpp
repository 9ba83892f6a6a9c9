// Interpolation helpers: barycentric Lagrange on arbitrary nodes, Chebyshev
// series with antiderivatives, and a natural cubic spline.
#pragma once

#include <functional>
#include <vector>

namespace cwave {

// Barycentric Lagrange interpolation on a fixed node set.
struct Barycentric {
    std::vector<double> nodes;
    std::vector<double> w; // barycentric weights (any common scaling)

    // Interpolant of the nodal values f at x; exact at the nodes.
    double eval(const double* f, double x) const;
    // Derivative of the interpolant at x.
    double deriv(const double* f, double x) const;
};

// Barycentric weights 1/prod(x_i - x_j) for an arbitrary strictly increasing
// node set, accumulated in log space so large n cannot overflow.
Barycentric barycentric_weights(std::vector<double> nodes);

// Chebyshev series c_0 T_0 + ... on [a,b].
struct ChebSeries {
    double a = -1.0, b = 1.0;
    std::vector<double> c;
    double eval(double x) const; // Clenshaw
};

// Interpolate f at n Chebyshev-Lobatto points of [a,b].
ChebSeries chebyshev_fit(double a, double b, int n, const std::function<double(double)>& f);

// Antiderivative with value 0 at the left endpoint.
ChebSeries antiderivative(const ChebSeries& s);

// Natural cubic spline through strictly increasing abscissae.
struct CubicSpline {
    std::vector<double> x, y, m; // m = second derivatives
    void build(std::vector<double> xs, std::vector<double> ys);
    double eval(double xv) const; // clamped to [x.front(), x.back()]
};

} // namespace cwave
