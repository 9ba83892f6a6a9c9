#include "cwave/picard.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "cwave/duhamel.hpp"
#include "cwave/errors.hpp"

namespace cwave {

namespace {

constexpr double kPi = 3.14159265358979323846;

double sup_diff(const Field& a, const Field& b) {
    double m = 0.0;
    for (size_t k = 0; k < a.values.size(); ++k)
        m = std::max(m, std::abs(a.values[k] - b.values[k]));
    return m;
}

Field lin_combo(const Field& a, double ca, const Field& b, double cb) {
    Field out = a;
    for (size_t k = 0; k < out.values.size(); ++k)
        out.values[k] = ca * a.values[k] + cb * b.values[k];
    return out;
}

double l4_norm(const Field& f) { return std::pow(l4_norm4(f), 0.25); }

// Least-squares slope of log y against log x.
double loglog_slope(const std::vector<double>& x, const std::vector<double>& y) {
    const size_t m = x.size();
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (size_t k = 0; k < m; ++k) {
        double lx = std::log(x[k]), ly = std::log(y[k]);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    return (m * sxy - sx * sy) / (m * sxx - sx * sx);
}

void check_contraction(const SolveReport& r, double delta) {
    if (r.contraction_ratio > 0.9)
        throw ConfigError("delta = " + std::to_string(delta) + " is outside the contraction regime");
}

} // namespace

DataPair family_pair(double theta) {
    double c = std::cos(theta), s = std::sin(theta);
    DataPair d;
    d.f0.eval = [c](double r) { return c * 2.0 / (1.0 + r * r); };
    d.f1.eval = [s](double r) { double q = 1.0 + r * r; return s * 4.0 / (q * q); };
    d.f0.decay_class = d.f1.decay_class = DecayClass::rational;
    d.f0.r_feature = d.f1.r_feature = 8.0;
    return d;
}

DataPair scale_pair(const DataPair& d, double a) {
    DataPair out;
    auto f0 = d.f0.eval, f1 = d.f1.eval;
    out.f0.eval = [f0, a](double r) { return a * f0(r); };
    out.f1.eval = [f1, a](double r) { return a * f1(r); };
    out.f0.decay_class = d.f0.decay_class;
    out.f1.decay_class = d.f1.decay_class;
    out.f0.r_feature = d.f0.r_feature;
    out.f1.r_feature = d.f1.r_feature;
    return out;
}

DataPair normalized_family_pair(double theta, double delta) {
    return scale_pair(family_pair(theta), delta / std::sqrt(2.0 * kPi * kPi));
}

std::vector<double> geometric_deltas(double a, double b, int k) {
    if (!(a > 0.0) || !(b > a) || k < 2) throw ConfigError("geometric_deltas: bad range");
    std::vector<double> out(k);
    for (int i = 0; i < k; ++i)
        out[i] = a * std::pow(b / a, static_cast<double>(i) / (k - 1));
    out.front() = a;
    out.back() = b;
    return out;
}

SolveReport solve(const DataPair& d, const SolverConfig& cfg) {
    if (!(cfg.fp_tol > 0.0) || cfg.max_iter < 1 || !(cfg.delta >= 0.0))
        throw ConfigError("solve: bad solver configuration");
    auto grid = SquareGrid::make(cfg.grid_n);
    Field lin = linear_evolve(lift_data(d), grid);

    SolveReport rep;
    rep.field = lin;
    double prev_update = std::numeric_limits<double>::infinity();
    int growing_streak = 0;
    for (int iter = 1; iter <= cfg.max_iter; ++iter) {
        Field forced = cfg.anchor_t0 ? antibox_cubic_centered(rep.field) : antibox_cubic(rep.field);
        Field next = lin_combo(lin, 1.0, forced, static_cast<double>(cfg.sigma));
        double upd = sup_diff(next, rep.field);
        rep.field = std::move(next);
        rep.iterations = iter;
        rep.final_residual = upd;
        if (!std::isfinite(upd)) {
            if (growing_streak >= 2) throw DivergenceError("solve: updates blew up (delta too large)");
            throw NumericError("solve: non-finite iterate");
        }
        if (iter > 3 && prev_update > 0.0)
            rep.contraction_ratio = std::max(rep.contraction_ratio, upd / prev_update);
        growing_streak = upd > prev_update ? growing_streak + 1 : 0;
        if (upd > 1e8 && growing_streak >= 1)
            throw DivergenceError("solve: updates blew up (delta too large)");
        if (upd < cfg.fp_tol) {
            rep.l4_norm4 = l4_norm4(rep.field);
            return rep;
        }
        prev_update = upd;
    }
    if (growing_streak >= 2) throw DivergenceError("solve: no contraction within max_iter");
    throw AccuracyError("solve: fixed point not reached within max_iter");
}

std::pair<double, double> order_fit(double theta, int sigma, const std::vector<double>& deltas,
                                    int grid_n, std::vector<std::array<double, 3>>* rows) {
    if (deltas.size() < 4) throw ConfigError("order_fit: need at least 4 deltas");
    std::vector<double> y1, y2;
    y1.reserve(deltas.size());
    y2.reserve(deltas.size());
    for (double delta : deltas) {
        SolverConfig cfg;
        cfg.sigma = sigma;
        cfg.delta = delta;
        cfg.theta = PhaseAngle(theta);
        cfg.grid_n = grid_n;
        DataPair d = normalized_family_pair(theta, delta);
        SolveReport rep = solve(d, cfg);
        check_contraction(rep, delta);
        Field lin = linear_evolve(lift_data(d), rep.field.grid);
        Field diff1 = lin_combo(rep.field, 1.0, lin, -1.0);
        Field diff2 = lin_combo(diff1, 1.0, antibox_cubic(lin), -static_cast<double>(sigma));
        y1.push_back(l4_norm(diff1));
        y2.push_back(l4_norm(diff2));
        if (rows) rows->push_back({delta, y1.back(), y2.back()});
    }
    return {loglog_slope(deltas, y1), loglog_slope(deltas, y2)};
}

ExpansionReport expansion_coefficient(double theta, int sigma, const std::vector<double>& deltas,
                                      int grid_n) {
    if (deltas.size() < 5) throw ConfigError("expansion_coefficient: need at least 5 deltas");
    ExpansionReport out;
    out.deltas = deltas;
    std::sort(out.deltas.begin(), out.deltas.end());
    const double s0 = ConstantsTable::values().s0;
    const double v3 = 2.0 * kPi * kPi; // |S^3|

    for (double delta : out.deltas) {
        SolverConfig cfg;
        cfg.sigma = sigma;
        cfg.delta = delta;
        cfg.theta = PhaseAngle(theta);
        cfg.grid_n = grid_n;
        SolveReport rep = solve(normalized_family_pair(theta, delta), cfg);
        check_contraction(rep, delta);
        double d4 = delta * delta * delta * delta;
        out.n_values.push_back(rep.l4_norm4);
        out.d_values.push_back((rep.l4_norm4 - s0 * d4) / (d4 * delta * delta));
    }

    // D(delta) = c6 + c8 delta^2 + O(delta^4); eliminate the delta^2 term
    // with the two smallest sweep points.
    double d1 = out.deltas[0], d2 = out.deltas[1];
    double r2 = (d2 / d1) * (d2 / d1);
    out.c6_measured = (r2 * out.d_values[0] - out.d_values[1]) / (r2 - 1.0);

    double worst = 0.0;
    for (size_t k = 0; k < out.deltas.size(); ++k) {
        double dl = out.deltas[k];
        double d4 = dl * dl * dl * dl;
        double rem = std::abs(out.n_values[k] - s0 * d4 - out.c6_measured * d4 * dl * dl);
        worst = std::max(worst, rem / (d4 * d4));
    }
    out.c8_bound = worst;
    out.c6_ref_interaction = 4.0 * sigma * scal_closed_form(PhaseAngle(theta)) / (v3 * v3 * v3);
    ConstantsTable t = ConstantsTable::values();
    out.s1_ref = sigma * (sigma > 0 ? t.s1_focusing : t.s1_defocusing);
    return out;
}

CandidateMax candidate_max(double delta, int sigma, const std::vector<double>& theta_grid,
                           int grid_n) {
    if (theta_grid.empty()) throw ConfigError("candidate_max: empty theta grid");
    CandidateMax out;
    out.value = -std::numeric_limits<double>::infinity();
    for (double th : theta_grid) {
        SolverConfig cfg;
        cfg.sigma = sigma;
        cfg.delta = delta;
        cfg.theta = PhaseAngle(th);
        cfg.grid_n = grid_n;
        SolveReport rep = solve(normalized_family_pair(th, delta), cfg);
        out.thetas.push_back(th);
        out.values.push_back(rep.l4_norm4);
        if (rep.l4_norm4 > out.value) {
            out.value = rep.l4_norm4;
            out.theta_star = th;
        }
    }
    return out;
}

double perturbation_residual(double theta, int sigma, double delta, double eps, int grid_n) {
    if (eps == 0.0) return 0.0;
    SolverConfig cfg;
    cfg.sigma = sigma;
    cfg.delta = delta;
    cfg.theta = PhaseAngle(theta);
    cfg.grid_n = grid_n;
    SolveReport base = solve(normalized_family_pair(theta, delta), cfg);
    check_contraction(base, delta);
    SolverConfig cfg2 = cfg;
    cfg2.delta = delta + eps;
    SolveReport moved = solve(normalized_family_pair(theta, delta + eps), cfg2);
    Field diff = lin_combo(moved.field, 1.0, base.field, -(1.0 + eps / delta));
    return l4_norm(diff);
}

} // namespace cwave
