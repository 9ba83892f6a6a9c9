#include "cwave/sobolev.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <memory>
#include <numbers>
#include <sstream>

#include "cwave/errors.hpp"
#include "cwave/interp.hpp"
#include "cwave/quadrature.hpp"

namespace cwave {

namespace {

const double kPi = std::numbers::pi;

// Gauss panels of \int_a^b f(r) r sin(rho r) dr.
double panel_integral(const RadialProfile& f, double a, double b, double rho,
                      const Rule1D& ref) {
    const double mid = 0.5 * (a + b), hw = 0.5 * (b - a);
    double s = 0.0;
    for (int i = 0; i < ref.size(); ++i) {
        double r = mid + hw * ref.nodes[i];
        s += ref.weights[i] * f(r) * r * std::sin(rho * r);
    }
    return s * hw;
}

// Iterated averaging of the partial sums of sum_k a_k (Euler transformation).
double euler_limit(std::vector<double> s) {
    // s holds partial sums on entry.
    while (s.size() > 1) {
        for (size_t i = 0; i + 1 < s.size(); ++i) s[i] = 0.5 * (s[i] + s[i + 1]);
        s.pop_back();
    }
    return s[0];
}

} // namespace

double sin_transform_integral(const RadialProfile& f, double rho, int panel_order,
                              int tail_terms) {
    if (!(rho > 0.0)) throw DomainError("sin_transform_integral: rho must be > 0");
    static thread_local int cached_order = -1;
    static thread_local Rule1D ref;
    if (cached_order != panel_order) {
        ref = gauss_legendre(panel_order);
        cached_order = panel_order;
    }

    const double half_period = kPi / rho;
    const double feature_end = std::max(f.r_feature, 1.0);
    // Direct region ends at the first sine zero at or beyond feature_end.
    const int k0 = std::max(1, static_cast<int>(std::ceil(feature_end / half_period)));
    const double direct_end = k0 * half_period;

    // Breakpoints: geometric ladder resolving the profile features, plus
    // every sine zero, so each panel spans at most half a period.
    std::vector<double> brk;
    brk.push_back(0.0);
    for (double g = std::min(1.0, direct_end); g < direct_end; g *= 2.0) brk.push_back(g);
    for (int k = 1; k <= k0; ++k) {
        double z = k * half_period;
        if (z < direct_end) brk.push_back(z);
    }
    brk.push_back(direct_end);
    std::sort(brk.begin(), brk.end());
    brk.erase(std::unique(brk.begin(), brk.end()), brk.end());

    double direct = 0.0;
    for (size_t i = 0; i + 1 < brk.size(); ++i)
        direct += panel_integral(f, brk[i], brk[i + 1], rho, ref);

    // Alternating half-period tail, accelerated by iterated averaging.
    std::vector<double> partial(tail_terms);
    double acc = 0.0;
    for (int j = 0; j < tail_terms; ++j) {
        double a = direct_end + j * half_period;
        acc += panel_integral(f, a, a + half_period, rho, ref);
        partial[j] = acc;
    }
    return direct + (euler_limit(std::move(partial)) - 0.0);
}

RadialProfile RadialProfile::zero() {
    RadialProfile p;
    p.eval = [](double) { return 0.0; };
    p.decay_class = DecayClass::compact;
    p.r_feature = 1.0;
    return p;
}

RadialProfile RadialProfile::from_samples(std::vector<double> r, std::vector<double> v,
                                          DecayClass decay) {
    const size_t n = r.size();
    if (n != v.size() || n < 4) throw ConfigError("RadialProfile: need >= 4 samples");
    for (size_t i = 0; i + 1 < n; ++i)
        if (!(r[i] < r[i + 1])) throw ConfigError("RadialProfile: radii must increase strictly");
    if (!(r.front() > 0.0)) throw ConfigError("RadialProfile: radii must be positive");

    auto spline = std::make_shared<CubicSpline>();
    std::vector<double> lr(n);
    for (size_t i = 0; i < n; ++i) lr[i] = std::log(r[i]);
    spline->build(lr, v);

    const double r_lo = r.front(), r_hi = r.back();
    // Even continuation a + b r^2 below the first sample.
    const double r1 = r[0], r2 = r[1];
    const double core_b = (v[1] - v[0]) / (r2 * r2 - r1 * r1);
    const double core_a = v[0] - core_b * r1 * r1;

    // Tail model beyond the last sample.
    double tail_p = 0.0, tail_kappa = 0.0, tail_c = v.back();
    bool tail_zero = (decay == DecayClass::compact);
    if (!tail_zero) {
        // Fit over the last decade of radii.
        size_t i0 = n - 1;
        while (i0 > 0 && r[i0 - 1] > 0.1 * r_hi) --i0;
        if (i0 > n - 3) i0 = n - 3;
        bool sign_ok = true;
        const double sgn = (v.back() > 0.0) ? 1.0 : -1.0;
        for (size_t i = i0; i < n; ++i)
            if (sgn * v[i] <= 0.0) sign_ok = false;
        if (!sign_ok || v.back() == 0.0) {
            tail_zero = true; // no stable log fit; treat as negligible tail
        } else if (decay == DecayClass::rational) {
            double sx = 0, sy = 0, sxx = 0, sxy = 0; // log|v| vs log r
            size_t m = 0;
            for (size_t i = i0; i < n; ++i, ++m) {
                double X = std::log(r[i]), Y = std::log(std::abs(v[i]));
                sx += X; sy += Y; sxx += X * X; sxy += X * Y;
            }
            tail_p = -(m * sxy - sx * sy) / (m * sxx - sx * sx);
        } else { // schwartz: log|v| vs r
            double sx = 0, sy = 0, sxx = 0, sxy = 0;
            size_t m = 0;
            for (size_t i = i0; i < n; ++i, ++m) {
                double X = r[i], Y = std::log(std::abs(v[i]));
                sx += X; sy += Y; sxx += X * X; sxy += X * Y;
            }
            tail_kappa = -(m * sxy - sx * sy) / (m * sxx - sx * sx);
            if (tail_kappa < 0.0) tail_zero = true;
        }
    }

    RadialProfile p;
    p.decay_class = decay;
    p.r_feature = std::min(r_hi, 64.0);
    p.eval = [spline, r_lo, r_hi, core_a, core_b, tail_zero, tail_p, tail_kappa, tail_c,
              decay](double rr) {
        if (rr <= r_lo) return core_a + core_b * rr * rr;
        if (rr >= r_hi) {
            if (tail_zero) return 0.0;
            if (decay == DecayClass::rational) return tail_c * std::pow(r_hi / rr, tail_p);
            return tail_c * std::exp(-tail_kappa * (rr - r_hi));
        }
        return spline->eval(std::log(rr));
    };
    return p;
}

RadialProfile RadialProfile::from_file(const std::string& path, DecayClass decay) {
    std::ifstream in(path);
    if (!in) throw ConfigError("RadialProfile: cannot open " + path);
    std::vector<double> r, v;
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        double a, b;
        if (ls >> a >> b) {
            r.push_back(a);
            v.push_back(b);
        }
    }
    return from_samples(std::move(r), std::move(v), decay);
}

FrequencyGrid FrequencyGrid::make(int n, double rho_max) {
    if (n < 16) throw ConfigError("FrequencyGrid: n must be >= 16");
    const double u_cap = 2.0 / kPi * std::atan(rho_max);
    Rule1D gl = gauss_legendre(n, 0.0, u_cap);
    FrequencyGrid g;
    g.nodes.resize(n);
    g.weights.resize(n);
    for (int i = 0; i < n; ++i) {
        double u = gl.nodes[i];
        double c = std::cos(kPi * u / 2.0);
        g.nodes[i] = std::tan(kPi * u / 2.0);
        g.weights[i] = gl.weights[i] * kPi / (2.0 * c * c);
    }
    return g;
}

const FrequencyGrid& FrequencyGrid::standard() {
    static const FrequencyGrid g = make();
    return g;
}

std::vector<double> radial_fourier(const RadialProfile& f, const FrequencyGrid& grid,
                                   bool check, double tol) {
    const int n = static_cast<int>(grid.nodes.size());
    std::vector<double> F(n);
    for (int i = 0; i < n; ++i) {
        double rho = grid.nodes[i];
        F[i] = 4.0 * kPi / rho * sin_transform_integral(f, rho);
    }
    if (check) {
        double scale = 0.0;
        for (double v : F) scale = std::max(scale, std::abs(v));
        for (int i : {0, n / 4, n / 2, 3 * n / 4, n - 1}) {
            double rho = grid.nodes[i];
            double refined = 4.0 * kPi / rho * sin_transform_integral(f, rho, 24, 64);
            if (std::abs(refined - F[i]) > tol * std::max(scale, std::abs(refined)))
                throw AccuracyError("radial_fourier: refinement changed the transform by more than tol");
        }
    }
    return F;
}

SpectralPair to_spectral(const DataPair& d, const FrequencyGrid& grid) {
    SpectralPair s;
    s.grid = &grid;
    s.F0 = radial_fourier(d.f0, grid);
    s.F1 = radial_fourier(d.f1, grid);
    return s;
}

double sobolev_norm_sq(const RadialProfile& f, double s, const FrequencyGrid& grid) {
    if (s != 0.5 && s != -0.5) throw DomainError("sobolev_norm_sq: s must be +1/2 or -1/2");
    std::vector<double> F = radial_fourier(f, grid);
    const double e = 2.0 * s + 2.0;
    double acc = 0.0;
    for (size_t i = 0; i < F.size(); ++i)
        acc += grid.weights[i] * std::pow(grid.nodes[i], e) * F[i] * F[i];
    return acc / (2.0 * kPi * kPi);
}

double pair_norm_sq(const DataPair& d, const FrequencyGrid& grid) {
    return sobolev_norm_sq(d.f0, 0.5, grid) + sobolev_norm_sq(d.f1, -0.5, grid);
}

double pair_norm_sq(const SpectralPair& a) {
    const FrequencyGrid& g = *a.grid;
    double acc = 0.0;
    for (size_t i = 0; i < g.nodes.size(); ++i) {
        double rho = g.nodes[i];
        acc += g.weights[i] * rho * (rho * rho * a.F0[i] * a.F0[i] + a.F1[i] * a.F1[i]);
    }
    return acc / (2.0 * kPi * kPi);
}

double pair_inner(const SpectralPair& a, const SpectralPair& b) {
    if (a.grid != b.grid) throw ConfigError("pair_inner: pairs live on different grids");
    const FrequencyGrid& g = *a.grid;
    double acc = 0.0;
    for (size_t i = 0; i < g.nodes.size(); ++i) {
        double rho = g.nodes[i];
        acc += g.weights[i] * rho * (rho * rho * a.F0[i] * b.F0[i] + a.F1[i] * b.F1[i]);
    }
    return acc / (2.0 * kPi * kPi);
}

double pair_inner(const DataPair& a, const DataPair& b, const FrequencyGrid& grid) {
    return pair_inner(to_spectral(a, grid), to_spectral(b, grid));
}

} // namespace cwave
