#include "cwave/quadrature.hpp"

#include <cmath>
#include <numbers>

#include "cwave/errors.hpp"

namespace cwave {

double legendre_p(int m, double x) {
    if (m == 0) return 1.0;
    double pm1 = 1.0, p = x;
    for (int k = 1; k < m; ++k) {
        double pn = ((2 * k + 1) * x * p - k * pm1) / (k + 1);
        pm1 = p;
        p = pn;
    }
    return p;
}

Rule1D gauss_legendre(int n) {
    if (n < 1) throw ConfigError("gauss_legendre: n must be >= 1");
    Rule1D r;
    r.nodes.resize(n);
    r.weights.resize(n);
    const int half = (n + 1) / 2;
    for (int i = 0; i < half; ++i) {
        // Newton iteration from the Chebyshev-angle initial guess.
        double x = -std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double pm1 = 1.0, p = x;
            for (int k = 1; k < n; ++k) {
                double pn = ((2 * k + 1) * x * p - k * pm1) / (k + 1);
                pm1 = p;
                p = pn;
            }
            dp = n * (x * p - pm1) / (x * x - 1.0);
            double dx = p / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        // Recompute dp at the converged node for the weight.
        double pm1 = 1.0, p = x;
        for (int k = 1; k < n; ++k) {
            double pn = ((2 * k + 1) * x * p - k * pm1) / (k + 1);
            pm1 = p;
            p = pn;
        }
        dp = n * (x * p - pm1) / (x * x - 1.0);
        double w = 2.0 / ((1.0 - x * x) * dp * dp);
        r.nodes[i] = x;
        r.weights[i] = w;
        r.nodes[n - 1 - i] = -x;
        r.weights[n - 1 - i] = w;
    }
    if (n % 2 == 1) r.nodes[n / 2] = 0.0; // exact center
    return r;
}

Rule1D gauss_legendre(int n, double a, double b) {
    Rule1D r = gauss_legendre(n);
    const double mid = 0.5 * (a + b), hw = 0.5 * (b - a);
    for (int i = 0; i < n; ++i) {
        r.nodes[i] = mid + hw * r.nodes[i];
        r.weights[i] *= hw;
    }
    return r;
}

std::vector<double> legendre_cumulative_matrix(int n, double a, double b) {
    Rule1D ref = gauss_legendre(n);
    // P[m][k] = P_m(u_k) for m = 0..n (one extra row for the antiderivative).
    std::vector<double> P(static_cast<size_t>(n + 1) * n);
    for (int k = 0; k < n; ++k) {
        double x = ref.nodes[k];
        P[k] = 1.0;
        P[n + k] = x;
        for (int m = 1; m < n; ++m)
            P[(m + 1) * static_cast<size_t>(n) + k] =
                ((2 * m + 1) * x * P[m * static_cast<size_t>(n) + k] -
                 m * P[(m - 1) * static_cast<size_t>(n) + k]) / (m + 1);
    }
    // J[m][i] = integral_{-1}^{u_i} P_m = (P_{m+1}(u_i) - P_{m-1}(u_i)) / (2m+1).
    std::vector<double> J(static_cast<size_t>(n) * n);
    for (int i = 0; i < n; ++i) {
        J[i] = ref.nodes[i] + 1.0;
        for (int m = 1; m < n; ++m)
            J[m * static_cast<size_t>(n) + i] =
                (P[(m + 1) * static_cast<size_t>(n) + i] -
                 P[(m - 1) * static_cast<size_t>(n) + i]) / (2 * m + 1);
    }
    // C[i][k] = w_k * sum_m (2m+1)/2 P_m(u_k) J_m(u_i), scaled to [a,b].
    const double hw = 0.5 * (b - a);
    std::vector<double> C(static_cast<size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i) {
        for (int m = 0; m < n; ++m) {
            double jm = J[m * static_cast<size_t>(n) + i] * (m + 0.5);
            const double* pm = &P[m * static_cast<size_t>(n)];
            double* ci = &C[i * static_cast<size_t>(n)];
            for (int k = 0; k < n; ++k) ci[k] += jm * pm[k];
        }
        for (int k = 0; k < n; ++k) C[i * static_cast<size_t>(n) + k] *= ref.weights[k] * hw;
    }
    return C;
}

std::vector<double> chebyshev_lobatto(int n, double a, double b) {
    if (n < 2) throw ConfigError("chebyshev_lobatto: n must be >= 2");
    std::vector<double> x(n);
    const double mid = 0.5 * (a + b), hw = 0.5 * (b - a);
    for (int j = 0; j < n; ++j)
        x[j] = mid - hw * std::cos(std::numbers::pi * j / (n - 1));
    x[0] = a;
    x[n - 1] = b;
    return x;
}

std::vector<double> clenshaw_curtis_weights(int n, double a, double b) {
    // Exact integrals of the Lobatto cardinal functions; O(n^2) cosine sums.
    const int N = n - 1;
    std::vector<double> w(n, 0.0);
    for (int j = 0; j <= N; ++j) {
        double s = 1.0;
        for (int m = 1; m <= N / 2; ++m) {
            double term = 2.0 * std::cos(2.0 * m * std::numbers::pi * j / N) / (4.0 * m * m - 1.0);
            if (2 * m == N) term *= 0.5;
            s -= term;
        }
        w[j] = 2.0 * s / N;
        if (j == 0 || j == N) w[j] *= 0.5;
    }
    const double hw = 0.5 * (b - a);
    for (double& wi : w) wi *= hw;
    return w;
}

std::vector<double> chebyshev_cumulative_values(const std::vector<double>& values,
                                                double a, double b) {
    const int n = static_cast<int>(values.size());
    const int N = n - 1;
    // Chebyshev coefficients; node j sits at angle pi*(N-j)/N, i.e. T_m(xi_j) =
    // cos(m pi (N-j)/N) = (-1)^m cos(m pi j / N).
    std::vector<double> c(n, 0.0);
    for (int m = 0; m <= N; ++m) {
        double s = 0.5 * (values[0] * ((m % 2 == 0) ? 1.0 : -1.0) + values[N]);
        for (int j = 1; j < N; ++j)
            s += values[j] * std::cos(m * std::numbers::pi * (N - j) / N);
        c[m] = 2.0 * s / N;
        if (m == 0 || m == N) c[m] *= 0.5;
    }
    // Antiderivative series: b_1 = c_0 - c_2/2, b_m = (c_{m-1} - c_{m+1})/(2m).
    std::vector<double> bcoef(n + 2, 0.0);
    auto cat = [&](int m) { return (m >= 0 && m <= N) ? c[m] : 0.0; };
    bcoef[1] = cat(0) - 0.5 * cat(2);
    for (int m = 2; m <= N + 1; ++m) bcoef[m] = (cat(m - 1) - cat(m + 1)) / (2.0 * m);
    // Fix the constant so the antiderivative vanishes at xi = -1.
    double b0 = 0.0;
    for (int m = 1; m <= N + 1; ++m) b0 -= bcoef[m] * ((m % 2 == 0) ? 1.0 : -1.0);
    bcoef[0] = b0;
    const double hw = 0.5 * (b - a);
    std::vector<double> out(n, 0.0);
    for (int j = 0; j <= N; ++j) {
        double ang = std::numbers::pi * (N - j) / N;
        double s = bcoef[0];
        for (int m = 1; m <= N + 1; ++m) s += bcoef[m] * std::cos(m * ang);
        out[j] = s * hw;
    }
    out[0] = 0.0;
    return out;
}

std::vector<double> mat_apply(const std::vector<double>& A, const std::vector<double>& x, int n) {
    std::vector<double> y(n, 0.0);
    for (int i = 0; i < n; ++i) {
        const double* row = &A[i * static_cast<size_t>(n)];
        double s = 0.0;
        for (int k = 0; k < n; ++k) s += row[k] * x[k];
        y[i] = s;
    }
    return y;
}

} // namespace cwave
