#include "cwave/projection.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

#include "cwave/errors.hpp"

namespace cwave {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kFourPiSq = 4.0 * kPi * kPi;

// Free evolution of the phase pair at unit scale, transform side.
inline void base_pair(double theta, double s, double rho, double& F0, double& F1) {
    double e = kFourPiSq * std::exp(-rho);
    double g0 = std::cos(theta) * e / rho;
    double g1 = std::sin(theta) * e;
    double cs = std::cos(s * rho), sn = std::sin(s * rho);
    F0 = cs * g0 + sn / rho * g1;
    F1 = -rho * sn * g0 + cs * g1;
}

SpectralPair gamma_spectral_impl(double c, double lambda, double theta, double t0,
                                 const FrequencyGrid& grid) {
    SpectralPair out;
    out.grid = &grid;
    const size_t n = grid.nodes.size();
    out.F0.resize(n);
    out.F1.resize(n);
    const double s = -lambda * t0;
    for (size_t k = 0; k < n; ++k) {
        double rho = grid.nodes[k] / lambda;
        double F0, F1;
        base_pair(theta, s, rho, F0, F1);
        out.F0[k] = c / (lambda * lambda) * F0;
        out.F1[k] = c / lambda * F1;
    }
    return out;
}

struct Simplex {
    using Vec = std::array<double, 4>;
    std::function<double(const Vec&)> f;
    int evals = 0;
    int cap = 2000;

    // Standard Nelder-Mead; deterministic, no randomness.
    std::pair<Vec, double> run(Vec x0, const Vec& step) {
        std::array<Vec, 5> xs;
        std::array<double, 5> fs;
        xs[0] = x0;
        for (int i = 1; i < 5; ++i) {
            xs[i] = x0;
            xs[i][i - 1] += step[i - 1];
        }
        for (int i = 0; i < 5; ++i) fs[i] = eval(xs[i]);

        while (evals < cap) {
            sort(xs, fs);
            if (spread(xs) < 1e-12 && fs[4] - fs[0] < 1e-15 * (1.0 + std::abs(fs[0]))) break;

            Vec cen{};
            for (int i = 0; i < 4; ++i)
                for (int d = 0; d < 4; ++d) cen[d] += xs[i][d] / 4.0;

            Vec xr = blend(cen, xs[4], -1.0);
            double fr = eval(xr);
            if (fr < fs[0]) {
                Vec xe = blend(cen, xs[4], -2.0);
                double fe = eval(xe);
                if (fe < fr) { xs[4] = xe; fs[4] = fe; }
                else { xs[4] = xr; fs[4] = fr; }
            } else if (fr < fs[3]) {
                xs[4] = xr;
                fs[4] = fr;
            } else {
                bool outside = fr < fs[4];
                Vec xc = blend(cen, outside ? xr : xs[4], 0.5);
                double fc = eval(xc);
                if (fc < std::min(fr, fs[4])) {
                    xs[4] = xc;
                    fs[4] = fc;
                } else {
                    for (int i = 1; i < 5; ++i) {
                        xs[i] = blend(xs[0], xs[i], 0.5);
                        fs[i] = eval(xs[i]);
                    }
                }
            }
        }
        sort(xs, fs);
        last_spread = spread(xs);
        return {xs[0], fs[0]};
    }

    double last_spread = std::numeric_limits<double>::infinity();

private:
    double eval(const Vec& x) {
        ++evals;
        return f(x);
    }
    static Vec blend(const Vec& a, const Vec& b, double t) {
        // a + t (b - a)
        Vec out;
        for (int d = 0; d < 4; ++d) out[d] = a[d] + t * (b[d] - a[d]);
        return out;
    }
    static void sort(std::array<Vec, 5>& xs, std::array<double, 5>& fs) {
        for (int i = 1; i < 5; ++i)
            for (int j = i; j > 0 && fs[j] < fs[j - 1]; --j) {
                std::swap(fs[j], fs[j - 1]);
                std::swap(xs[j], xs[j - 1]);
            }
    }
    static double spread(const std::array<Vec, 5>& xs) {
        double m = 0.0;
        for (int i = 1; i < 5; ++i)
            for (int d = 0; d < 4; ++d) m = std::max(m, std::abs(xs[i][d] - xs[0][d]));
        return m;
    }
};

SpectralPair spectral_diff(const SpectralPair& a, const SpectralPair& b) {
    SpectralPair out = a;
    for (size_t k = 0; k < out.F0.size(); ++k) {
        out.F0[k] -= b.F0[k];
        out.F1[k] -= b.F1[k];
    }
    return out;
}

// d/dp of gamma_spectral by central differences in parameter slot `which`
// (0 = lambda, 1 = theta, 2 = t0) at step h.
SpectralPair gamma_fd(const ManifoldParams& p, int which, double h, const FrequencyGrid& grid) {
    double lam[2] = {p.lambda, p.lambda}, th[2] = {p.theta, p.theta}, t0[2] = {p.t0, p.t0};
    (which == 0 ? lam : which == 1 ? th : t0)[0] += h;
    (which == 0 ? lam : which == 1 ? th : t0)[1] -= h;
    SpectralPair hi = gamma_spectral_impl(p.c, lam[0], th[0], t0[0], grid);
    SpectralPair lo = gamma_spectral_impl(p.c, lam[1], th[1], t0[1], grid);
    SpectralPair out = spectral_diff(hi, lo);
    for (size_t k = 0; k < out.F0.size(); ++k) {
        out.F0[k] /= 2.0 * h;
        out.F1[k] /= 2.0 * h;
    }
    return out;
}

void validate(const ManifoldParams& p) {
    if (!(p.c >= 0.0)) throw ConfigError("manifold params: amplitude must be >= 0");
    if (!(p.lambda > 0.0)) throw ConfigError("manifold params: dilation must be > 0");
}

} // namespace

DataPair gamma_apply(const ManifoldParams& p) {
    validate(p);
    const double c = p.c, lam = p.lambda, th = p.theta, s = -p.lambda * p.t0;
    DataPair out;
    out.f0.eval = [c, lam, th, s](double r) {
        double rr = lam * r;
        double Xp = std::atan(s + rr), Xm = std::atan(s - rr);
        return c * lam * 2.0 * std::cos(Xp) * std::cos(Xm) * std::cos(Xp + Xm - th);
    };
    out.f1.eval = [c, lam, th, s](double r) {
        double rr = lam * r;
        double Xp = std::atan(s + rr), Xm = std::atan(s - rr);
        double cp = std::cos(Xp), cm = std::cos(Xm);
        double T = Xp + Xm;
        double Om = 2.0 * cp * cm;
        double ct = std::cos(T - th), st = std::sin(T - th);
        double dp = -2.0 * std::sin(Xp) * cm * ct - Om * st;
        double dm = -2.0 * cp * std::sin(Xm) * ct - Om * st;
        return c * lam * lam * (cp * cp * dp + cm * cm * dm);
    };
    out.f0.decay_class = out.f1.decay_class = DecayClass::rational;
    double feat = std::min(std::max(8.0, 2.0 * std::abs(s) + 8.0) / lam, 64.0);
    out.f0.r_feature = out.f1.r_feature = std::max(feat, 4.0);
    return out;
}

SpectralPair gamma_spectral(double c, double lambda, double theta, double t0,
                            const FrequencyGrid& grid) {
    if (!(lambda > 0.0)) throw ConfigError("gamma_spectral: dilation must be > 0");
    return gamma_spectral_impl(c, lambda, theta, t0, grid);
}

ProjectionResult project_radial(const DataPair& d, const ManifoldParams& init) {
    const FrequencyGrid& grid = FrequencyGrid::standard();
    SpectralPair Sd = to_spectral(d, grid);
    double dnorm = std::sqrt(pair_norm_sq(Sd));
    if (!(dnorm > 0.0)) throw DomainError("project_radial: zero data");

    auto objective = [&](const Simplex::Vec& x) {
        SpectralPair g = gamma_spectral_impl(x[0], std::exp(x[1]), x[2], x[3], grid);
        return std::sqrt(pair_norm_sq(spectral_diff(Sd, g)));
    };

    Simplex::Vec best{};
    double fbest = std::numeric_limits<double>::infinity();
    double best_spread = std::numeric_limits<double>::infinity();
    int total_evals = 0;
    std::vector<double> seeds = {0.0, kPi / 2.0, kPi, 1.5 * kPi, init.theta};
    for (double seed : seeds) {
        Simplex nm;
        nm.f = objective;
        nm.cap = 2000;
        Simplex::Vec x0 = {init.c > 0.0 ? init.c : dnorm / std::sqrt(2.0 * kPi * kPi),
                           std::log(init.lambda), seed, init.t0};
        Simplex::Vec step = {0.2 * std::max(x0[0], 0.05), 0.25, 0.35, 0.25};
        auto [x, fx] = nm.run(x0, step);
        total_evals += nm.evals;
        if (fx < fbest) {
            fbest = fx;
            best = x;
            best_spread = nm.last_spread;
        }
    }
    // One polishing pass from the winner with a tight simplex.
    {
        Simplex nm;
        nm.f = objective;
        nm.cap = 2000;
        Simplex::Vec step = {1e-5, 1e-5, 1e-5, 1e-5};
        auto [x, fx] = nm.run(best, step);
        total_evals += nm.evals;
        if (fx < fbest) {
            fbest = fx;
            best = x;
            best_spread = nm.last_spread;
        }
    }

    ProjectionResult out;
    double c = best[0], th = best[2];
    if (c < 0.0) {
        c = -c;
        th += kPi;
    }
    out.params.c = c;
    out.params.lambda = std::exp(best[1]);
    out.params.theta = PhaseAngle(th);
    out.params.t0 = best[3];
    out.residual = fbest;
    out.evaluations = total_evals;

    // First-order optimality: residual direction against the four tangent
    // directions (amplitude scaling = Gamma itself, then lambda, theta, t0).
    if (fbest >= 1e-10 * dnorm) {
        SpectralPair at = gamma_spectral_impl(out.params.c, out.params.lambda, out.params.theta,
                                              out.params.t0, grid);
        SpectralPair res = spectral_diff(Sd, at);
        double rn = std::sqrt(pair_norm_sq(res));
        SpectralPair dirs[4];
        dirs[0] = gamma_spectral_impl(1.0, out.params.lambda, out.params.theta, out.params.t0, grid);
        for (int which = 0; which < 3; ++which)
            dirs[which + 1] = gamma_fd(out.params, which, 1e-4, grid);
        double worst = 0.0;
        for (const auto& dir : dirs) {
            double dn = std::sqrt(pair_norm_sq(dir));
            if (dn == 0.0 || rn == 0.0) continue;
            worst = std::max(worst, std::abs(pair_inner(res, dir)) / (rn * dn));
        }
        out.orthogonality = worst;
    }
    out.stagnated = best_spread < 1e-14 && out.orthogonality > 1e-5;
    return out;
}

GramReport gram_matrix(const ManifoldParams& at) {
    validate(at);
    const FrequencyGrid& grid = FrequencyGrid::standard();
    SpectralPair dirs[4];
    dirs[0] = gamma_spectral_impl(1.0, at.lambda, at.theta, at.t0, grid);
    for (int which = 0; which < 3; ++which) dirs[which + 1] = gamma_fd(at, which, 1e-4, grid);

    GramReport rep;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) rep.matrix[i][j] = pair_inner(dirs[i], dirs[j]);
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (std::abs(rep.matrix[i][j] - rep.matrix[j][i]) > 1e-6)
                throw AccuracyError("gram_matrix: finite-difference asymmetry");

    // Cyclic Jacobi on a copy; 4x4 converges in a few sweeps.
    std::array<std::array<double, 4>, 4> A = rep.matrix;
    for (int sweep = 0; sweep < 50; ++sweep) {
        double off = 0.0;
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j) off = std::max(off, std::abs(A[i][j]));
        if (off < 1e-14 * (1.0 + std::abs(A[0][0]))) break;
        for (int p = 0; p < 4; ++p)
            for (int q = p + 1; q < 4; ++q) {
                if (A[p][q] == 0.0) continue;
                double phi = 0.5 * std::atan2(2.0 * A[p][q], A[q][q] - A[p][p]);
                double cs = std::cos(phi), sn = std::sin(phi);
                for (int k = 0; k < 4; ++k) {
                    double apk = A[p][k], aqk = A[q][k];
                    A[p][k] = cs * apk - sn * aqk;
                    A[q][k] = sn * apk + cs * aqk;
                }
                for (int k = 0; k < 4; ++k) {
                    double akp = A[k][p], akq = A[k][q];
                    A[k][p] = cs * akp - sn * akq;
                    A[k][q] = sn * akp + cs * akq;
                }
            }
    }
    for (int i = 0; i < 4; ++i) rep.eigenvalues[i] = A[i][i];
    std::sort(rep.eigenvalues.begin(), rep.eigenvalues.end());
    return rep;
}

} // namespace cwave
