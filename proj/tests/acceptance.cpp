// Acceptance gate: twelve end-to-end checks, each printed as a single
// [PASS]/[FAIL] line with its measured figure of merit and wall time.
// An optional argument selects one check by number; the exit status is the
// number of failures.
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "cwave/functional.hpp"
#include "cwave/noninv.hpp"
#include "cwave/penrose_field.hpp"
#include "cwave/picard.hpp"
#include "cwave/profiles.hpp"
#include "cwave/projection.hpp"
#include "cwave/sobolev.hpp"

using namespace cwave;

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kTwoPiSq = 2.0 * kPi * kPi;

double rel(double a, double b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

Field family_field(double theta, int n) {
    return linear_evolve(lift_data(family_pair(theta)), SquareGrid::make(n));
}

// 1. Norm calibration of the data family: every phase has pair norm 2 pi^2.
bool crit_norm_calibration(std::ostream& log, double elapsed_limit, double& elapsed) {
    auto t0 = std::chrono::steady_clock::now();
    double worst = 0.0;
    for (double theta : {0.0, kPi / 3.0, kPi / 2.0})
        worst = std::max(worst, rel(pair_norm_sq(family_pair(theta)), kTwoPiSq));
    elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    log << "max_rel=" << worst;
    return worst < 1e-8 && elapsed < elapsed_limit;
}

// 2. Spacetime L^4 norm of the evolved basic profile equals 3 pi^3 / 4.
bool crit_l4_value(std::ostream& log, double elapsed_limit, double& elapsed) {
    auto t0 = std::chrono::steady_clock::now();
    double got = l4_norm4(family_field(0.0, 96));
    elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    double r = rel(got, 3.0 * kPi * kPi * kPi / 4.0);
    log << "rel=" << r;
    return r < 1e-8 && elapsed < elapsed_limit;
}

// 3. The compactified linear evolution reproduces the separated closed form
//    sin(X+ - X-) cos(X+ + X- - theta) at the nodes.
bool crit_linear_exactness(std::ostream& log) {
    double sup = 0.0;
    for (double theta : {0.0, 1.1}) {
        Field w = family_field(theta, 96);
        int n = w.n();
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                double xm = w.grid->nodes[i], xp = w.grid->nodes[j];
                double exact = std::sin(xp - xm) * std::cos(xp + xm - theta);
                sup = std::max(sup, std::abs(w.at(i, j) - exact));
            }
    }
    log << "sup=" << sup;
    return sup < 1e-10;
}

// 4. The sextic functional evaluated three independent ways: closed form,
//    direct quadruple integral, and the characteristic-solver pipeline.
bool crit_sextic_three_ways(std::ostream& log, double elapsed_limit, double& elapsed) {
    auto t0 = std::chrono::steady_clock::now();
    double worst = 0.0;
    for (double theta : {0.0, kPi / 5.0, kPi / 3.0, kPi / 2.0, 2.2}) {
        double closed = scal_closed_form(theta);
        worst = std::max(worst, rel(scal_quadrature4(theta, 200), closed));
        worst = std::max(worst, rel(scal(family_field(theta, 200)), closed));
    }
    elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    log << "max_rel=" << worst;
    return worst < 1e-6 && elapsed < elapsed_limit;
}

// 5. The second-order constants 29/(2^10 pi^3) and 5/(2^10 pi^3) from the
//    functional at the maximizing phases, closed form and numerically.
bool crit_sharp_constants(std::ostream& log) {
    ConstantsTable ct = ConstantsTable::values();
    double vol3 = ct.sphere_volume * ct.sphere_volume * ct.sphere_volume;
    double worst_closed = 0.0, worst_num = 0.0;
    for (int sigma : {1, -1}) {
        double table = sigma > 0 ? ct.s1_focusing : ct.s1_defocusing;
        PhaseAngle th = best_theta(sigma);
        worst_closed = std::max(worst_closed, rel(scal_closed_form(th) / vol3, table));
        worst_num = std::max(worst_num, rel(scal_quadrature4(th, 200) / vol3, table));
    }
    log << "closed_rel=" << worst_closed << " num_rel=" << worst_num;
    return worst_closed < 1e-14 && worst_num < 1e-10;
}

// 6. The fixed-point map contracts at cubic order and the first Duhamel
//    correction captures the next two orders: fitted slopes 3 and 5.
bool crit_order_fits(std::ostream& log, double elapsed_limit, double& elapsed) {
    auto t0 = std::chrono::steady_clock::now();
    std::vector<double> deltas = geometric_deltas(0.05, 0.4, 8);
    bool ok = true;
    std::ostringstream buf;
    std::vector<std::pair<double, int>> cases{{0.0, 1}, {0.7, -1}};
    for (auto [theta, sigma] : cases) {
        auto [s3, s5] = order_fit(theta, sigma, deltas, 96);
        buf << (sigma > 0 ? " +1:" : " -1:") << s3 << "/" << s5;
        ok = ok && std::abs(s3 - 3.0) <= 0.2 && std::abs(s5 - 5.0) <= 0.3;
    }
    elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    log << "slopes" << buf.str();
    return ok && elapsed < elapsed_limit;
}

// 7. The delta^6 coefficient of the L^4 expansion matches the interaction
//    integral 4 S(v_0)/|S^3|^3 after Richardson extrapolation, with a stable
//    delta^8 remainder.
bool crit_expansion_coefficient(std::ostream& log) {
    ExpansionReport rep = expansion_coefficient(0.0, 1, geometric_deltas(0.2, 0.5, 6), 96);
    double mis = rel(rep.c6_measured, rep.c6_ref_interaction);

    double qmin = 0.0, qmax = 0.0;
    for (size_t i = 0; i < rep.deltas.size(); ++i) {
        double q = (rep.d_values[i] - rep.c6_measured) / (rep.deltas[i] * rep.deltas[i]);
        if (i == 0) qmin = qmax = q;
        qmin = std::min(qmin, q);
        qmax = std::max(qmax, q);
    }
    double spread = std::abs(qmax - qmin) / std::max(std::abs(qmin), 1e-300);

    log << "c6_rel=" << mis << " remainder_spread=" << spread
        << " c6_over_s1=" << rep.c6_measured / rep.s1_ref;
    return mis <= 0.02 && spread <= 0.25 && rep.c8_bound > 0.0;
}

// 8. Sign structure: the coefficient is positive focusing at phase 0 and
//    negative defocusing at phase pi/2, and the phase sweep maximizer sits
//    at the predicted symmetry points.
bool crit_sign_structure(std::ostream& log) {
    ExpansionReport plus = expansion_coefficient(0.0, 1, geometric_deltas(0.2, 0.5, 5), 64);
    ExpansionReport minus = expansion_coefficient(kPi / 2.0, -1, geometric_deltas(0.2, 0.5, 5), 64);

    std::vector<double> grid;
    for (int k = 0; k < 24; ++k) grid.push_back(2.0 * kPi * k / 24.0);
    CandidateMax cp = candidate_max(0.25, 1, grid, 48);
    CandidateMax cm = candidate_max(0.25, -1, grid, 48);

    auto dist_mod_pi = [](double theta, double target) {
        double best = 1e300;
        for (int k = -2; k <= 2; ++k) best = std::min(best, std::abs(theta - target - k * kPi));
        return best;
    };
    double dp = dist_mod_pi(cp.theta_star, 0.0);
    double dm = dist_mod_pi(cm.theta_star, kPi / 2.0);

    log << "c6(+1)=" << plus.c6_measured << " c6(-1)=" << minus.c6_measured
        << " theta*(+1)_dist=" << dp << " theta*(-1)_dist=" << dm;
    return plus.c6_measured > 0.0 && minus.c6_measured < 0.0 && dp < 1e-9 && dm < 1e-9;
}

// 9. Projection onto the four-parameter manifold recovers planted targets
//    and the parameter Gram matrix is positive definite.
bool crit_projection(std::ostream& log) {
    bool ok = true;
    double worst_res = 0.0, worst_par = 0.0, worst_orth = 0.0;
    for (ManifoldParams target : {ManifoldParams{0.8, 1.3, PhaseAngle(0.9), 0.4},
                                  ManifoldParams{1.2, 0.6, PhaseAngle(4.0), -0.5}}) {
        DataPair d = gamma_apply(target);
        ProjectionResult res = project_radial(d, ManifoldParams{});
        double dtheta = std::abs(std::remainder(res.params.theta - target.theta, 2.0 * kPi));
        double par = std::max({std::abs(res.params.c - target.c),
                               std::abs(res.params.lambda - target.lambda), dtheta,
                               std::abs(res.params.t0 - target.t0)});
        worst_res = std::max(worst_res, res.residual);
        worst_par = std::max(worst_par, par);
        worst_orth = std::max(worst_orth, res.orthogonality);
    }
    ok = worst_res < 1e-8 && worst_par < 1e-5 && worst_orth < 1e-5;

    GramReport gram = gram_matrix();
    for (double ev : gram.eigenvalues) ok = ok && ev > 0.0;
    log << "residual=" << worst_res << " param_err=" << worst_par << " orth=" << worst_orth
        << " min_eig=" << gram.eigenvalues.front();
    return ok;
}

// 10. The closed integral formula for the time derivative of the data norm
//     matches a Richardson finite difference along the flow, and the
//     conserved cases sit at zero.
bool crit_norm_derivative(std::ostream& log) {
    double worst = 0.0;
    for (int sigma : {1, -1})
        for (double delta : {0.2, 0.3})
            for (double theta : {0.0, kPi / 4.0, kPi / 2.0}) {
                SolverConfig cfg;
                cfg.sigma = sigma;
                cfg.delta = delta;
                cfg.theta = PhaseAngle(theta);
                cfg.grid_n = 96;
                cfg.anchor_t0 = true;
                SolveReport rep = solve(normalized_family_pair(theta, delta), cfg);
                double formula = dt_norm_formula(flow_snapshot(rep.field, 0.3), sigma);
                double fd = dt_norm_fd(theta, sigma, delta, 0.3, 1e-3, 96);
                worst = std::max(worst, rel(fd, formula));
            }

    double lin = std::abs(dt_norm_fd(0.5, 0, 0.25, 0.3, 1e-3, 96));

    SolverConfig cfg;
    cfg.sigma = 1;
    cfg.delta = 0.3;
    cfg.theta = PhaseAngle(0.0);
    cfg.grid_n = 96;
    cfg.anchor_t0 = true;
    SolveReport rep = solve(normalized_family_pair(0.0, 0.3), cfg);
    double sym_formula = std::abs(dt_norm_formula(flow_snapshot(rep.field, 0.0), 1));
    double sym_fd = std::abs(dt_norm_fd(0.0, 1, 0.3, 0.0, 1e-3, 96));

    log << "max_rel=" << worst << " conserved=" << std::max(lin, std::max(sym_formula, sym_fd));
    return worst < 1e-4 && lin < 1e-8 && sym_formula < 1e-8 && sym_fd < 1e-8;
}

// 11. The orthogonality classifier issues the expected verdict on canonical
//     sequence pairs and the mixed L^4 integral of a rescaling-orthogonal
//     pair decays below 5 percent by the eighth index.
bool crit_classifier(std::ostream& log) {
    using K = OrthogonalityVerdict::Kind;
    auto kind = [](const char* a, const char* b) {
        return classify(TransformSequence::parse(a), TransformSequence::parse(b)).kind;
    };
    bool verdicts = kind("ell=2^n", "ell=1") == K::lorentz &&
                    kind("lambda=2^n", "lambda=1") == K::rescaling &&
                    kind("ell=2^n", "ell=-2^n") == K::angular &&
                    kind("t=2^n", "t=0") == K::translation &&
                    kind("lambda=2^n", "lambda=2^n") == K::none;

    Field w = family_field(0.0, 48);
    std::vector<double> vals =
        mixed_l4_decay(w, w, TransformSequence::parse("lambda=2^n"),
                       TransformSequence::parse("lambda=1"), 2.0,
                       {1, 2, 3, 4, 5, 6, 7, 8});
    double ratio = vals.back() / vals.front();
    log << "verdicts=" << (verdicts ? "5/5" : "mismatch") << " decay_ratio=" << ratio;
    return verdicts && ratio < 0.05;
}

// 12. The residual of the first-order amplitude response scales like
//     eps delta^2: the normalized ratios stay within 30 percent of each
//     other while eps varies fourfold.
bool crit_perturbation_scaling(std::ostream& log) {
    double delta = 0.3;
    std::vector<double> ratios;
    for (double eps : {0.01, 0.02, 0.04})
        ratios.push_back(perturbation_residual(0.4, 1, delta, eps, 96) / (eps * delta * delta));
    double lo = std::min({ratios[0], ratios[1], ratios[2]});
    double hi = std::max({ratios[0], ratios[1], ratios[2]});
    log << "ratio_spread=" << hi / lo - 1.0;
    return hi / lo - 1.0 <= 0.30;
}

struct Criterion {
    const char* label;
    std::function<bool(std::ostream&, double&)> run;
};

} // namespace

int main(int argc, char** argv) {
    std::vector<Criterion> criteria = {
        {"data-pair norm calibration",
         [](std::ostream& log, double& el) { return crit_norm_calibration(log, 1.0, el); }},
        {"linear spacetime L4 value",
         [](std::ostream& log, double& el) { return crit_l4_value(log, 5.0, el); }},
        {"compactified linear evolution exactness",
         [](std::ostream& log, double&) { return crit_linear_exactness(log); }},
        {"sextic functional three ways",
         [](std::ostream& log, double& el) { return crit_sextic_three_ways(log, 30.0, el); }},
        {"second-order sharp constants",
         [](std::ostream& log, double&) { return crit_sharp_constants(log); }},
        {"contraction order fits",
         [](std::ostream& log, double& el) { return crit_order_fits(log, 300.0, el); }},
        {"delta^6 coefficient vs interaction integral",
         [](std::ostream& log, double&) { return crit_expansion_coefficient(log); }},
        {"sign structure and maximizing phase",
         [](std::ostream& log, double&) { return crit_sign_structure(log); }},
        {"manifold projection",
         [](std::ostream& log, double&) { return crit_projection(log); }},
        {"norm-derivative formula vs finite difference",
         [](std::ostream& log, double&) { return crit_norm_derivative(log); }},
        {"orthogonality classifier and mixed decay",
         [](std::ostream& log, double&) { return crit_classifier(log); }},
        {"perturbation scaling",
         [](std::ostream& log, double&) { return crit_perturbation_scaling(log); }},
    };

    int only = 0;
    if (argc > 1) {
        char* end = nullptr;
        only = static_cast<int>(std::strtol(argv[1], &end, 10));
        if (end == argv[1] || *end != '\0' || only < 1 ||
            only > static_cast<int>(criteria.size())) {
            std::cerr << "usage: acceptance [1-" << criteria.size() << "]\n";
            return 64;
        }
    }

    int failures = 0;
    for (size_t k = 0; k < criteria.size(); ++k) {
        if (only != 0 && static_cast<int>(k + 1) != only) continue;
        std::ostringstream detail;
        bool pass = false;
        auto t0 = std::chrono::steady_clock::now();
        double elapsed = -1.0;
        try {
            pass = criteria[k].run(detail, elapsed);
        } catch (const std::exception& e) {
            detail << "exception: " << e.what();
        }
        if (elapsed < 0.0)
            elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::cout << (pass ? "[PASS]" : "[FAIL]") << " criterion " << k + 1 << ": "
                  << criteria[k].label << " (" << detail.str() << "; " << elapsed << " s)"
                  << std::endl;
        if (!pass) ++failures;
    }
    return failures;
}
