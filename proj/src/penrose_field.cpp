#include "cwave/penrose_field.hpp"

#include <cmath>
#include <istream>
#include <limits>
#include <memory>
#include <ostream>
#include <sstream>

#include "cwave/coords.hpp"
#include "cwave/errors.hpp"
#include "cwave/quadrature.hpp"

namespace cwave {

namespace {
constexpr double kPi = 3.14159265358979323846;
constexpr double kHalfPi = kPi / 2.0;
} // namespace

std::shared_ptr<const SquareGrid> SquareGrid::make(int n) {
    if (n < 16) throw ConfigError("SquareGrid: need n >= 16");
    auto g = std::make_shared<SquareGrid>();
    Rule1D rule = gauss_legendre(n, -kHalfPi, kHalfPi);
    g->n = n;
    g->nodes = rule.nodes;
    g->weights = rule.weights;
    g->bary = barycentric_weights(g->nodes);
    return g;
}

Field Field::zeros(std::shared_ptr<const SquareGrid> g) {
    Field f;
    f.grid = std::move(g);
    f.values.assign(static_cast<size_t>(f.grid->n) * f.grid->n, 0.0);
    return f;
}

double Field::interp(double Xm, double Xp) const {
    const int nn = n();
    std::vector<double> col(nn);
    for (int i = 0; i < nn; ++i)
        col[i] = grid->bary.eval(&values[static_cast<size_t>(i) * nn], Xp);
    return grid->bary.eval(col.data(), Xm);
}

double Field::interp_dXm(double Xm, double Xp) const {
    const int nn = n();
    std::vector<double> col(nn);
    for (int i = 0; i < nn; ++i)
        col[i] = grid->bary.eval(&values[static_cast<size_t>(i) * nn], Xp);
    return grid->bary.deriv(col.data(), Xm);
}

double Field::interp_dXp(double Xm, double Xp) const {
    const int nn = n();
    std::vector<double> col(nn);
    for (int i = 0; i < nn; ++i)
        col[i] = grid->bary.deriv(&values[static_cast<size_t>(i) * nn], Xp);
    return grid->bary.eval(col.data(), Xm);
}

double Field::swap_odd_defect() const {
    const int nn = n();
    double worst = 0.0;
    for (int i = 0; i < nn; ++i)
        for (int j = 0; j <= i; ++j)
            worst = std::max(worst, std::abs(at(i, j) + at(j, i)));
    return worst;
}

CauchyData lift_data(const DataPair& d) {
    auto f0 = d.f0;
    auto f1 = d.f1;
    CauchyData c;
    // Omega at T=0 is 1 + cos R = 2 cos^2(R/2); r = tan(R/2).
    c.psi0 = [f0](double R) {
        double h = 2.0 * std::cos(R / 2.0) * std::cos(R / 2.0);
        if (h == 0.0) return 0.0;
        return std::sin(R) * f0(std::tan(R / 2.0)) / h;
    };
    c.psi1 = [f1](double R) {
        double h = 2.0 * std::cos(R / 2.0) * std::cos(R / 2.0);
        if (h == 0.0) return 0.0;
        return std::sin(R) * f1(std::tan(R / 2.0)) / (h * h);
    };
    return c;
}

Field linear_evolve(const CauchyData& c, std::shared_ptr<const SquareGrid> grid) {
    for (const auto* fn : {&c.psi0, &c.psi1}) {
        if (std::abs((*fn)(0.0)) > 1e-10 || std::abs((*fn)(kPi)) > 1e-10)
            throw InvariantError("linear_evolve: reduced data does not vanish at R = 0, pi");
    }
    const int n = grid->n;
    // Antiderivative I(s) = int_0^s psi1; the odd extension of psi1 about
    // R = 0 makes I even, so a fit on [0, pi] is enough.
    const int fit_n = std::max(4 * n + 1, 257);
    ChebSeries I = antiderivative(chebyshev_fit(0.0, kPi, fit_n, c.psi1));
    auto psi0_odd = [&c](double s) {
        return s >= 0.0 ? c.psi0(s) : -c.psi0(-s);
    };

    Field F = Field::zeros(std::move(grid));
    const auto& X = F.grid->nodes;
    std::vector<double> p0p(n), p0m(n), Iv(n);
    for (int k = 0; k < n; ++k) {
        p0p[k] = psi0_odd(2.0 * X[k]);
        p0m[k] = psi0_odd(-2.0 * X[k]);
        Iv[k] = I.eval(std::abs(2.0 * X[k])); // int_0^s psi1~ is even in s
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            F.at(i, j) = 0.5 * (p0p[j] + p0m[i]) + 0.5 * (Iv[j] - Iv[i]);
    return F;
}

double l4_norm4(const Field& F) {
    const int n = F.n();
    const auto& X = F.grid->nodes;
    const auto& w = F.grid->weights;
    double total = 0.0;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (i == j) continue; // integrand extends by 0 to the diagonal
            double s = std::sin(X[j] - X[i]);
            double u = F.at(i, j);
            double u2 = u * u;
            total += w[i] * w[j] * (u2 * u2) / (s * s);
        }
    }
    double out = 4.0 * kPi * total;
    if (!std::isfinite(out)) throw AccuracyError("l4_norm4: non-finite quadrature value");
    return out;
}

std::pair<double, double> field_value_minkowski(const Field& F, double t0, double r) {
    if (!(r > 0.0)) throw DomainError("field_value_minkowski: radius must be positive");
    double Xp = std::atan(t0 + r);
    double Xm = std::atan(t0 - r);
    double R = Xp - Xm;
    double sR = std::sin(R), cR = std::cos(R);

    double U = F.interp(Xm, Xp);
    double Um = F.interp_dXm(Xm, Xp);
    double Up = F.interp_dXp(Xm, Xp);

    double V = U / sR;
    double Vp = Up / sR - U * cR / (sR * sR);
    double Vm = Um / sR + U * cR / (sR * sR);

    double cp = std::cos(Xp), cm = std::cos(Xm);
    double sp = std::sin(Xp), sm = std::sin(Xm);
    double Om = 2.0 * cp * cm;
    double dOm_p = -2.0 * sp * cm;
    double dOm_m = -2.0 * cp * sm;

    double u = Om * V;
    double ut = cp * cp * (dOm_p * V + Om * Vp) + cm * cm * (dOm_m * V + Om * Vm);
    return {u, ut};
}

std::vector<double> log_radii(double r0, double r1, int n) {
    if (!(r0 > 0.0) || !(r1 > r0) || n < 2) throw ConfigError("log_radii: bad range");
    std::vector<double> out(n);
    double l0 = std::log(r0), l1 = std::log(r1);
    for (int i = 0; i < n; ++i)
        out[i] = std::exp(l0 + (l1 - l0) * i / (n - 1));
    out.front() = r0;
    out.back() = r1;
    return out;
}

std::pair<RadialProfile, RadialProfile> sample_minkowski(const Field& F, double t0,
                                                         const std::vector<double>& radii) {
    if (radii.size() < 8) throw ConfigError("sample_minkowski: need at least 8 radii");
    for (size_t k = 0; k < radii.size(); ++k) {
        if (!(radii[k] > 0.0) || (k > 0 && radii[k] <= radii[k - 1]))
            throw ConfigError("sample_minkowski: radii must be positive and increasing");
    }
    const size_t m = radii.size();
    std::vector<double> lr(m), us(m), uts(m);
    for (size_t k = 0; k < m; ++k) {
        lr[k] = std::log(radii[k]);
        auto [u, ut] = field_value_minkowski(F, t0, radii[k]);
        us[k] = u;
        uts[k] = ut;
    }
    auto s0 = std::make_shared<CubicSpline>();
    auto s1 = std::make_shared<CubicSpline>();
    s0->build(lr, us);
    s1->build(std::move(lr), std::move(uts));

    // Beyond the window the profiles are analytic in 1/r (u ~ r^-2, u_t ~ r^-3
    // or faster); a three-term inverse-power fit anchored on exact field values
    // keeps the far tail accurate without per-call field interpolation.
    double r_lo = radii.front(), r_hi = radii.back();
    std::array<double, 3> anchors = {r_hi, 1.35 * r_hi, 1.8 * r_hi};
    std::array<double, 3> ya{}, yb{};
    for (int k = 0; k < 3; ++k) {
        auto [u, ut] = field_value_minkowski(F, t0, anchors[k]);
        double r2 = anchors[k] * anchors[k];
        ya[k] = u * r2;
        yb[k] = ut * r2 * anchors[k];
    }
    auto fit3 = [&anchors](const std::array<double, 3>& y) {
        // Quadratic in x = 1/r through the three anchors (Lagrange form).
        std::array<double, 3> x = {1.0 / anchors[0], 1.0 / anchors[1], 1.0 / anchors[2]};
        std::array<double, 3> c{};
        for (int i = 0; i < 3; ++i) {
            int j = (i + 1) % 3, k = (i + 2) % 3;
            double den = (x[i] - x[j]) * (x[i] - x[k]);
            c[0] += y[i] * x[j] * x[k] / den;
            c[1] -= y[i] * (x[j] + x[k]) / den;
            c[2] += y[i] / den;
        }
        return c;
    };
    std::array<double, 3> tail_u = fit3(ya), tail_ut = fit3(yb);

    auto fc = std::make_shared<Field>(F);
    RadialProfile p0, p1;
    p0.eval = [fc, t0, s0, r_lo, r_hi, tail_u](double r) {
        if (r <= 0.0) r = std::numeric_limits<double>::min();
        if (r > r_hi) return (tail_u[0] + (tail_u[1] + tail_u[2] / r) / r) / (r * r);
        if (r < r_lo) return field_value_minkowski(*fc, t0, r).first;
        return s0->eval(std::log(r));
    };
    p1.eval = [fc, t0, s1, r_lo, r_hi, tail_ut](double r) {
        if (r <= 0.0) r = std::numeric_limits<double>::min();
        if (r > r_hi) return (tail_ut[0] + (tail_ut[1] + tail_ut[2] / r) / r) / (r * r * r);
        if (r < r_lo) return field_value_minkowski(*fc, t0, r).second;
        return s1->eval(std::log(r));
    };
    p0.decay_class = p1.decay_class = DecayClass::rational;
    p0.r_feature = p1.r_feature = std::min(std::max(16.0, 2.0 * std::abs(t0) + 8.0), r_hi);
    return {std::move(p0), std::move(p1)};
}

void dump_field(const Field& F, std::ostream& os) {
    const int n = F.n();
    os.precision(17);
    os << n << "\n";
    for (int j = 0; j < n; ++j) os << F.grid->nodes[j] << (j + 1 < n ? ' ' : '\n');
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) os << F.at(i, j) << (j + 1 < n ? ' ' : '\n');
}

Field load_field(std::istream& is) {
    int n = 0;
    if (!(is >> n) || n < 16) throw ConfigError("load_field: bad header");
    auto grid = SquareGrid::make(n);
    for (int j = 0; j < n; ++j) {
        double x;
        if (!(is >> x)) throw ConfigError("load_field: truncated node list");
        if (std::abs(x - grid->nodes[j]) > 1e-12)
            throw ConfigError("load_field: node list does not match the quadrature grid");
    }
    Field F = Field::zeros(grid);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (!(is >> F.at(i, j))) throw ConfigError("load_field: truncated values");
    return F;
}

} // namespace cwave
