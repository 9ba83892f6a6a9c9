// Gauss-Legendre and Chebyshev quadrature kernels: nodes, weights, and
// spectral cumulative (prefix) integration.
#pragma once

#include <vector>

namespace cwave {

struct Rule1D {
    std::vector<double> nodes;   // strictly increasing
    std::vector<double> weights; // positive
    int size() const { return static_cast<int>(nodes.size()); }
};

// Gauss-Legendre rule, exact for polynomials of degree 2n-1.
Rule1D gauss_legendre(int n);                     // on [-1, 1]
Rule1D gauss_legendre(int n, double a, double b); // affinely mapped

// Legendre polynomial P_m(x), m >= 0.
double legendre_p(int m, double x);

// Cumulative integration matrix C for the Gauss-Legendre rule on [a,b]:
// (C f)[i] = integral from a to node_i of the degree n-1 interpolant of f.
// Built from the exact antiderivatives of the Legendre expansion, so it is
// exact on polynomials of degree < n, vanishes exactly at the lower limit,
// and is linear by construction.
std::vector<double> legendre_cumulative_matrix(int n, double a, double b);

// Chebyshev-Lobatto nodes on [a,b], increasing, endpoints included.
std::vector<double> chebyshev_lobatto(int n, double a, double b);

// Clenshaw-Curtis weights matching chebyshev_lobatto(n, a, b).
std::vector<double> clenshaw_curtis_weights(int n, double a, double b);

// In-place prefix integration on Chebyshev-Lobatto data: given values of f at
// chebyshev_lobatto(n, a, b), returns values of x -> integral_a^x f at the
// same nodes, via the Chebyshev series antiderivative.
std::vector<double> chebyshev_cumulative_values(const std::vector<double>& values,
                                                double a, double b);

// y = A x for a dense row-major n x n matrix.
std::vector<double> mat_apply(const std::vector<double>& A, const std::vector<double>& x, int n);

} // namespace cwave
