#include "cwave/profiles.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <limits>
#include <sstream>

#include "cwave/errors.hpp"

namespace cwave {

namespace {

constexpr double kPi = 3.14159265358979323846;

double norm3(const std::array<double, 3>& v) {
    return std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
}

// Indicator series over n = 1..n_max; NaN marks "undefined at this index".
struct Series {
    std::vector<double> v;
    bool defined = true;

    double at_end() const { return v.back(); }
    double max_defined() const {
        double m = 0.0;
        for (double x : v)
            if (std::isfinite(x)) m = std::max(m, x);
        return m;
    }
    bool grows_to(double threshold) const {
        if (!defined || !std::isfinite(v.back()) || v.back() <= threshold) return false;
        for (size_t k = v.size() / 2; k + 1 < v.size(); ++k)
            if (v[k + 1] < v[k] * (1.0 - 1e-12)) return false;
        return true;
    }
    bool bounded_by(double threshold) const { return !defined || max_defined() <= threshold; }
};

// One numeric term of the mini-language: constant, linear c*n, or geometric c^n.
struct Expr {
    enum class Kind { constant, linear, geometric } kind = Kind::constant;
    double c = 0.0;
    double operator()(int n) const {
        switch (kind) {
            case Kind::constant: return c;
            case Kind::linear: return c * n;
            // Unary minus binds the whole power: -c^n means -(c^n).
            default: return c < 0.0 ? -std::pow(-c, n) : std::pow(c, n);
        }
    }
};

Expr parse_expr(const std::string& raw) {
    std::string s;
    for (char ch : raw)
        if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
    if (s.empty()) throw ConfigError("sequence: empty expression");
    Expr e;
    auto num = [](const std::string& t) {
        size_t used = 0;
        double v = 0.0;
        try {
            v = std::stod(t, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != t.size() || used == 0)
            throw ConfigError("sequence: bad number '" + t + "'");
        return v;
    };
    if (s == "n") {
        e.kind = Expr::Kind::linear;
        e.c = 1.0;
    } else if (auto pos = s.find('^'); pos != std::string::npos) {
        if (s.substr(pos + 1) != "n") throw ConfigError("sequence: expected c^n in '" + s + "'");
        e.kind = Expr::Kind::geometric;
        e.c = num(s.substr(0, pos));
    } else if (auto star = s.find('*'); star != std::string::npos) {
        if (s.substr(star + 1) != "n") throw ConfigError("sequence: expected c*n in '" + s + "'");
        e.kind = Expr::Kind::linear;
        e.c = num(s.substr(0, star));
    } else {
        e.kind = Expr::Kind::constant;
        e.c = num(s);
    }
    return e;
}

} // namespace

double ell_of(const BoostParams& b) {
    double s = b.speed();
    return std::sqrt((1.0 + s) / (1.0 - s));
}

TransformSequence TransformSequence::parse(const std::string& text) {
    // Defaults: identity transform for every n.
    Expr lambda;
    lambda.c = 1.0;
    Expr t, x, beta;
    bool beta_from_ell = false;
    Expr ell;

    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.find_first_not_of(" \t") == std::string::npos) continue;
        auto eq = item.find('=');
        if (eq == std::string::npos) throw ConfigError("sequence: expected param=expr in '" + item + "'");
        std::string key;
        for (char ch : item.substr(0, eq))
            if (!std::isspace(static_cast<unsigned char>(ch))) key.push_back(ch);
        Expr e = parse_expr(item.substr(eq + 1));
        if (key == "lambda") lambda = e;
        else if (key == "t") t = e;
        else if (key == "x") x = e;
        else if (key == "beta") { beta = e; beta_from_ell = false; }
        else if (key == "ell") { ell = e; beta_from_ell = true; }
        else throw ConfigError("sequence: unknown parameter '" + key + "'");
    }

    TransformSequence out;
    out.generator = [lambda, t, x, beta, ell, beta_from_ell](int n) {
        double lam = lambda(n);
        if (!(lam > 0.0)) throw ConfigError("sequence: lambda must stay positive");
        double b;
        if (beta_from_ell) {
            // Sign picks the boost direction along the axis; |ell| is the rate.
            double l = ell(n);
            double sgn = l < 0.0 ? -1.0 : 1.0;
            l = std::abs(l);
            if (!(l >= 1.0)) throw ConfigError("sequence: |ell| must be >= 1");
            b = sgn * (l * l - 1.0) / (l * l + 1.0);
        } else {
            b = beta(n);
        }
        if (!(std::abs(b) < 1.0)) throw ConfigError("sequence: |beta| must be < 1");
        return PoincareParams(lam, BoostParams({b, 0.0, 0.0}), t(n),
                              std::array<double, 3>{x(n), 0.0, 0.0});
    };
    return out;
}

std::string to_string(OrthogonalityVerdict::Kind k) {
    using K = OrthogonalityVerdict::Kind;
    switch (k) {
        case K::lorentz: return "lorentz";
        case K::rescaling: return "rescaling";
        case K::angular: return "angular";
        case K::translation: return "translation";
        case K::none: return "none";
        default: return "inconclusive";
    }
}

OrthogonalityVerdict classify(const TransformSequence& a, const TransformSequence& b, int n_max,
                              double grow_threshold) {
    if (n_max < 8) throw ConfigError("classify: need n_max >= 8");
    Series lor, res, ang, tra;
    std::string note;
    for (int n = 1; n <= n_max; ++n) {
        PoincareParams pa = a.generator(n);
        PoincareParams pb = b.generator(n);
        double ea = ell_of(pa.beta), eb = ell_of(pb.beta);
        double la = pa.lambda, lb = pb.lambda;
        lor.v.push_back(ea / eb + eb / ea);
        res.v.push_back(la / lb + lb / la);

        double sa = pa.beta.speed(), sb = pb.beta.speed();
        if (sa == 0.0 || sb == 0.0) {
            ang.defined = false;
            if (note.empty()) note = "angular indicator skipped: zero boost";
            ang.v.push_back(std::numeric_limits<double>::quiet_NaN());
        } else {
            std::array<double, 3> diff;
            for (int d = 0; d < 3; ++d) diff[d] = pa.beta.beta[d] / sa - pb.beta.beta[d] / sb;
            ang.v.push_back(ea * norm3(diff));
        }

        bool same_frame = std::abs(la - lb) <= 1e-12 * std::max(la, lb);
        for (int d = 0; d < 3; ++d)
            same_frame = same_frame && std::abs(pa.beta.beta[d] - pb.beta.beta[d]) <= 1e-12;
        if (!same_frame) {
            tra.defined = false;
            tra.v.push_back(std::numeric_limits<double>::quiet_NaN());
        } else {
            FourPoint shift = {la * (pa.t0 - pb.t0), la * (pa.x0[0] - pb.x0[0]),
                               la * (pa.x0[1] - pb.x0[1]), la * (pa.x0[2] - pb.x0[2])};
            FourPoint moved = apply_boost(pa.beta, shift);
            tra.v.push_back(std::sqrt(moved[0] * moved[0] + moved[1] * moved[1] +
                                      moved[2] * moved[2] + moved[3] * moved[3]));
        }
    }

    // Angular additionally needs comparable dilations and boosts strengths.
    bool ang_side = res.bounded_by(grow_threshold) && lor.bounded_by(grow_threshold);

    OrthogonalityVerdict out;
    out.note = note;
    if (lor.grows_to(grow_threshold)) {
        out.kind = OrthogonalityVerdict::Kind::lorentz;
        out.witness = lor.at_end();
    } else if (res.grows_to(grow_threshold)) {
        out.kind = OrthogonalityVerdict::Kind::rescaling;
        out.witness = res.at_end();
    } else if (ang.defined && ang_side && ang.grows_to(grow_threshold)) {
        out.kind = OrthogonalityVerdict::Kind::angular;
        out.witness = ang.at_end();
    } else if (tra.defined && tra.grows_to(grow_threshold)) {
        out.kind = OrthogonalityVerdict::Kind::translation;
        out.witness = tra.at_end();
    } else {
        bool all_bounded = lor.bounded_by(grow_threshold) && res.bounded_by(grow_threshold) &&
                           (!ang.defined || !ang_side || ang.bounded_by(grow_threshold)) &&
                           tra.bounded_by(grow_threshold);
        out.kind = all_bounded ? OrthogonalityVerdict::Kind::none
                               : OrthogonalityVerdict::Kind::inconclusive;
        double w = std::max(lor.at_end(), res.at_end());
        if (ang.defined && std::isfinite(ang.at_end())) w = std::max(w, ang.at_end());
        if (tra.defined && std::isfinite(tra.at_end())) w = std::max(w, tra.at_end());
        out.witness = w;
    }
    return out;
}

namespace {

// U~(Ym_i, Yp_j) for the per-axis map Y = arctan(lambda (tan X - t)), as
// B U B^T with Lagrange basis rows of the source grid at the mapped nodes.
std::vector<double> resample_values(const Field& w, double lambda, double t,
                                    const std::vector<double>& target_nodes) {
    const int m = static_cast<int>(target_nodes.size());
    const int n = w.n();
    const Barycentric& bary = w.grid->bary;
    std::vector<double> B(static_cast<size_t>(m) * n, 0.0);
    for (int i = 0; i < m; ++i) {
        double y = std::atan(lambda * (std::tan(target_nodes[i]) - t));
        // Lagrange basis row at y.
        int hit = -1;
        for (int k = 0; k < n; ++k)
            if (y == bary.nodes[k]) hit = k;
        if (hit >= 0) {
            B[static_cast<size_t>(i) * n + hit] = 1.0;
            continue;
        }
        double denom = 0.0;
        for (int k = 0; k < n; ++k) {
            double term = bary.w[k] / (y - bary.nodes[k]);
            B[static_cast<size_t>(i) * n + k] = term;
            denom += term;
        }
        for (int k = 0; k < n; ++k) B[static_cast<size_t>(i) * n + k] /= denom;
    }

    // A = B * U (m x n), out = A * B^T (m x m).
    std::vector<double> A(static_cast<size_t>(m) * n, 0.0);
    for (int i = 0; i < m; ++i)
        for (int k = 0; k < n; ++k) {
            double bik = B[static_cast<size_t>(i) * n + k];
            if (bik == 0.0) continue;
            const double* row = &w.values[static_cast<size_t>(k) * n];
            double* arow = &A[static_cast<size_t>(i) * n];
            for (int j = 0; j < n; ++j) arow[j] += bik * row[j];
        }
    std::vector<double> out(static_cast<size_t>(m) * m, 0.0);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            double acc = 0.0;
            const double* arow = &A[static_cast<size_t>(i) * n];
            const double* brow = &B[static_cast<size_t>(j) * n];
            for (int k = 0; k < n; ++k) acc += arow[k] * brow[k];
            out[static_cast<size_t>(i) * m + j] = acc;
        }
    return out;
}

} // namespace

std::vector<double> mixed_l4_decay(const Field& w1, const Field& w2, const TransformSequence& a,
                                   const TransformSequence& b, double alpha,
                                   const std::vector<int>& n_list) {
    if (!(alpha >= 0.0 && alpha <= 4.0)) throw ConfigError("mixed_l4_decay: alpha in [0,4]");
    const auto& grid = *w1.grid;
    const int m = grid.n;
    std::vector<double> out;
    out.reserve(n_list.size());
    for (int n : n_list) {
        PoincareParams pa = a.generator(n);
        PoincareParams pb = b.generator(n);
        if (pa.beta.speed() != 0.0 || pb.beta.speed() != 0.0 || norm3(pa.x0) != 0.0 ||
            norm3(pb.x0) != 0.0)
            throw ConfigError("mixed_l4_decay: only dilation/time-translation sequences");

        // The swap-odd form U~ is itself invariant: the transformed solution's
        // U~ at X equals the original U~ at the per-axis mapped nodes.
        std::vector<double> U1 = resample_values(w1, pa.lambda, pa.t0, grid.nodes);
        std::vector<double> U2 = resample_values(w2, pb.lambda, pb.t0, grid.nodes);

        double total = 0.0;
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) {
                if (i == j) continue;
                double s = std::sin(grid.nodes[j] - grid.nodes[i]);
                double v1 = std::abs(U1[static_cast<size_t>(i) * m + j]);
                double v2 = std::abs(U2[static_cast<size_t>(i) * m + j]);
                double w4 = std::pow(v1, alpha) * std::pow(v2, 4.0 - alpha);
                total += grid.weights[i] * grid.weights[j] * w4 / (s * s);
            }
        out.push_back(4.0 * kPi * total);
    }
    return out;
}

} // namespace cwave
