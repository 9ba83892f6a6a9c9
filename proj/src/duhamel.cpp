#include "cwave/duhamel.hpp"

#include <cmath>
#include <map>
#include <mutex>

#include "cwave/errors.hpp"
#include "cwave/quadrature.hpp"

namespace cwave {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Cumulative-integration matrices keyed by grid size; grids of equal n are
// identical, so the key is safe.
const std::vector<double>& cumulative_matrix(int n) {
    static std::mutex mu;
    static std::map<int, std::vector<double>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it == cache.end())
        it = cache.emplace(n, legendre_cumulative_matrix(n, -kPi / 2.0, kPi / 2.0)).first;
    return it->second;
}

} // namespace

double SourceField::swap_odd_defect() const {
    const int nn = n();
    double worst = 0.0;
    for (int i = 0; i < nn; ++i)
        for (int j = 0; j <= i; ++j)
            worst = std::max(worst, std::abs(at(i, j) + at(j, i)));
    return worst;
}

SourceField cubic_source(const Field& U) {
    const int n = U.n();
    const auto& X = U.grid->nodes;
    SourceField S;
    S.grid = U.grid;
    S.values.assign(static_cast<size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (i == j) continue; // U~ vanishes on the diagonal; extend by 0
            double s = std::sin(X[j] - X[i]);
            double u = U.at(i, j);
            S.at(i, j) = u * u * u / (s * s);
        }
    }
    return S;
}

Field goursat_solve(const SourceField& S) {
    double defect = S.swap_odd_defect();
    if (defect > 1e-12) throw InvariantError("goursat_solve: source is not swap-odd");
    const int n = S.n();
    const auto& C = cumulative_matrix(n);

    // W = C S C^T; antisymmetry of S transfers exactly.
    std::vector<double> A(static_cast<size_t>(n) * n, 0.0); // A = S C^T
    for (int k = 0; k < n; ++k) {
        for (int j = 0; j < n; ++j) {
            double acc = 0.0;
            for (int l = 0; l < n; ++l) acc += S.values[static_cast<size_t>(k) * n + l] * C[static_cast<size_t>(j) * n + l];
            A[static_cast<size_t>(k) * n + j] = acc;
        }
    }
    Field W = Field::zeros(S.grid);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            double acc = 0.0;
            for (int k = 0; k < n; ++k) acc += C[static_cast<size_t>(i) * n + k] * A[static_cast<size_t>(k) * n + j];
            W.at(i, j) = acc;
        }
    }
    // Symmetrize to kill the last rounding asymmetry; exact already in theory.
    for (int i = 0; i < n; ++i) {
        W.at(i, i) = 0.0;
        for (int j = 0; j < i; ++j) {
            double v = 0.5 * (W.at(i, j) - W.at(j, i));
            W.at(i, j) = v;
            W.at(j, i) = -v;
        }
    }
    return W;
}

Field antibox_cubic(const Field& U) { return goursat_solve(cubic_source(U)); }

Field centered_solve(const SourceField& S) {
    double defect = S.swap_odd_defect();
    if (defect > 1e-12) throw InvariantError("centered_solve: source is not swap-odd");
    const int n = S.n();
    const auto& C = cumulative_matrix(n);
    const auto& w = S.grid->weights;

    // Corner-anchored primitive P = C S C^T plus the homogeneous part
    // A(X-) + B(X+) + k that cancels value and slope on the slice X+ + X- = 0.
    // The node set is symmetric, so the reflected evaluations are exact reads
    // at index n-1-i.
    std::vector<double> N1(static_cast<size_t>(n) * n, 0.0); // S C^T
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            double acc = 0.0;
            for (int l = 0; l < n; ++l)
                acc += S.values[static_cast<size_t>(i) * n + l] * C[static_cast<size_t>(j) * n + l];
            N1[static_cast<size_t>(i) * n + j] = acc;
        }
    std::vector<double> N2(static_cast<size_t>(n) * n, 0.0); // C S
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            double acc = 0.0;
            for (int k = 0; k < n; ++k)
                acc += C[static_cast<size_t>(i) * n + k] * S.values[static_cast<size_t>(k) * n + j];
            N2[static_cast<size_t>(i) * n + j] = acc;
        }

    std::vector<double> Q(n), R(n);
    for (int i = 0; i < n; ++i) Q[i] = N1[static_cast<size_t>(i) * n + (n - 1 - i)];
    for (int j = 0; j < n; ++j) R[j] = N2[static_cast<size_t>(n - 1 - j) * n + j];
    std::vector<double> A(n, 0.0), B(n, 0.0);
    double k_const = 0.0;
    for (int i = 0; i < n; ++i) {
        double qa = 0.0, rb = 0.0;
        for (int k = 0; k < n; ++k) {
            qa += C[static_cast<size_t>(i) * n + k] * Q[k];
            rb += C[static_cast<size_t>(i) * n + k] * R[k];
        }
        A[i] = -qa;
        B[i] = -rb;
        k_const += w[i] * R[i];
    }

    Field W = Field::zeros(S.grid);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            double acc = 0.0;
            for (int k = 0; k < n; ++k)
                acc += C[static_cast<size_t>(i) * n + k] * N1[static_cast<size_t>(k) * n + j];
            W.at(i, j) = acc + A[i] + B[j] + k_const;
        }
    for (int i = 0; i < n; ++i) {
        W.at(i, i) = 0.0;
        for (int j = 0; j < i; ++j) {
            double v = 0.5 * (W.at(i, j) - W.at(j, i));
            W.at(i, j) = v;
            W.at(j, i) = -v;
        }
    }
    return W;
}

Field antibox_cubic_centered(const Field& U) { return centered_solve(cubic_source(U)); }

double wtheta_exact(double Xm, double Xp, double theta) {
    if (std::abs(Xm) > kPi / 2.0 + 1e-12 || std::abs(Xp) > kPi / 2.0 + 1e-12)
        throw DomainError("wtheta_exact: point outside the compactified square");
    double t1 = (3.0 / 16.0) * ((Xp - Xm) * std::cos(theta) + Xp * std::cos(2.0 * Xm - theta) -
                                Xm * std::cos(2.0 * Xp - theta));
    double t2 = (3.0 * kPi / 32.0) * (std::cos(2.0 * Xm - theta) - std::cos(2.0 * Xp - theta));
    double t3 = (1.0 / 64.0) *
                (std::sin(2.0 * Xm - 3.0 * theta) + std::sin(4.0 * Xm - 3.0 * theta) -
                 std::sin(2.0 * Xp - 3.0 * theta) - std::sin(4.0 * Xp - 3.0 * theta) -
                 std::sin(2.0 * Xm + 4.0 * Xp - 3.0 * theta) +
                 std::sin(4.0 * Xm + 2.0 * Xp - 3.0 * theta));
    return t1 + t2 + t3;
}

} // namespace cwave
