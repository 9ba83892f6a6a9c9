#include "cwave/interp.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "cwave/errors.hpp"

namespace cwave {

double Barycentric::eval(const double* f, double x) const {
    const int n = static_cast<int>(nodes.size());
    double num = 0.0, den = 0.0;
    for (int i = 0; i < n; ++i) {
        double d = x - nodes[i];
        if (d == 0.0) return f[i];
        double t = w[i] / d;
        num += t * f[i];
        den += t;
    }
    return num / den;
}

double Barycentric::deriv(const double* f, double x) const {
    const int n = static_cast<int>(nodes.size());
    // If x hits a node, use the differentiation-matrix row; otherwise the
    // standard derivative of the barycentric form.
    for (int i = 0; i < n; ++i) {
        if (x == nodes[i]) {
            double s = 0.0, diag = 0.0;
            for (int j = 0; j < n; ++j) {
                if (j == i) continue;
                double dij = (w[j] / w[i]) / (nodes[i] - nodes[j]);
                s += dij * f[j];
                diag -= dij;
            }
            return s + diag * f[i];
        }
    }
    double p = eval(f, x);
    double num = 0.0, den = 0.0;
    for (int i = 0; i < n; ++i) {
        double d = x - nodes[i];
        double t = w[i] / d;
        num += t * (p - f[i]) / d;
        den += t;
    }
    return num / den;
}

Barycentric barycentric_weights(std::vector<double> nodes) {
    const int n = static_cast<int>(nodes.size());
    Barycentric b;
    b.nodes = std::move(nodes);
    b.w.resize(n);
    std::vector<double> lw(n, 0.0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (j != i) lw[i] -= std::log(std::abs(b.nodes[i] - b.nodes[j]));
    const double shift = *std::max_element(lw.begin(), lw.end());
    for (int i = 0; i < n; ++i) {
        // Ascending nodes: sign of prod(x_i - x_j) is (-1)^(n-1-i).
        double sgn = ((n - 1 - i) % 2 == 0) ? 1.0 : -1.0;
        b.w[i] = sgn * std::exp(lw[i] - shift);
    }
    return b;
}

double ChebSeries::eval(double x) const {
    const double xi = (2.0 * x - (a + b)) / (b - a);
    double b1 = 0.0, b2 = 0.0;
    for (int m = static_cast<int>(c.size()) - 1; m >= 1; --m) {
        double t = 2.0 * xi * b1 - b2 + c[m];
        b2 = b1;
        b1 = t;
    }
    return xi * b1 - b2 + c[0];
}

ChebSeries chebyshev_fit(double a, double b, int n, const std::function<double(double)>& f) {
    if (n < 2) throw ConfigError("chebyshev_fit: n must be >= 2");
    const int N = n - 1;
    std::vector<double> v(n);
    for (int q = 0; q <= N; ++q) {
        double xi = std::cos(std::numbers::pi * q / N);
        v[q] = f(0.5 * (a + b) + 0.5 * (b - a) * xi);
    }
    ChebSeries s;
    s.a = a;
    s.b = b;
    s.c.assign(n, 0.0);
    for (int m = 0; m <= N; ++m) {
        double acc = 0.5 * (v[0] + ((m % 2 == 0) ? 1.0 : -1.0) * v[N]);
        for (int q = 1; q < N; ++q)
            acc += v[q] * std::cos(m * std::numbers::pi * q / N);
        s.c[m] = 2.0 * acc / N;
        if (m == 0 || m == N) s.c[m] *= 0.5;
    }
    return s;
}

ChebSeries antiderivative(const ChebSeries& s) {
    const int N = static_cast<int>(s.c.size()) - 1;
    auto cat = [&](int m) { return (m >= 0 && m <= N) ? s.c[m] : 0.0; };
    ChebSeries r;
    r.a = s.a;
    r.b = s.b;
    r.c.assign(N + 2, 0.0);
    r.c[1] = cat(0) - 0.5 * cat(2);
    for (int m = 2; m <= N + 1; ++m) r.c[m] = (cat(m - 1) - cat(m + 1)) / (2.0 * m);
    double b0 = 0.0;
    for (int m = 1; m <= N + 1; ++m) b0 -= r.c[m] * ((m % 2 == 0) ? 1.0 : -1.0);
    r.c[0] = b0;
    const double hw = 0.5 * (s.b - s.a);
    for (double& cm : r.c) cm *= hw;
    return r;
}

void CubicSpline::build(std::vector<double> xs, std::vector<double> ys) {
    const int n = static_cast<int>(xs.size());
    if (n < 3) throw ConfigError("CubicSpline: need at least 3 points");
    x = std::move(xs);
    y = std::move(ys);
    m.assign(n, 0.0);
    std::vector<double> diag(n, 2.0), rhs(n, 0.0), sub(n, 0.0), sup(n, 0.0);
    for (int i = 1; i + 1 < n; ++i) {
        double h0 = x[i] - x[i - 1], h1 = x[i + 1] - x[i];
        sub[i] = h0 / (h0 + h1);
        sup[i] = h1 / (h0 + h1);
        rhs[i] = 6.0 * ((y[i + 1] - y[i]) / h1 - (y[i] - y[i - 1]) / h0) / (h0 + h1);
    }
    // Natural ends; Thomas algorithm.
    for (int i = 1; i < n; ++i) {
        double f = sub[i] / diag[i - 1];
        diag[i] -= f * sup[i - 1];
        rhs[i] -= f * rhs[i - 1];
    }
    m[n - 1] = rhs[n - 1] / diag[n - 1];
    for (int i = n - 2; i >= 0; --i) m[i] = (rhs[i] - sup[i] * m[i + 1]) / diag[i];
}

double CubicSpline::eval(double xv) const {
    const int n = static_cast<int>(x.size());
    if (xv <= x.front()) xv = x.front();
    if (xv >= x.back()) xv = x.back();
    int lo = static_cast<int>(std::upper_bound(x.begin(), x.end(), xv) - x.begin()) - 1;
    lo = std::clamp(lo, 0, n - 2);
    double h = x[lo + 1] - x[lo];
    double A = (x[lo + 1] - xv) / h, B = (xv - x[lo]) / h;
    return A * y[lo] + B * y[lo + 1] +
           ((A * A * A - A) * m[lo] + (B * B * B - B) * m[lo + 1]) * h * h / 6.0;
}

} // namespace cwave
