// Orthogonality classification of Poincare-transform sequences and the mixed
// L^4 decay demonstration for orthogonal pairs.
#pragma once

#include <functional>
#include <string>
#include <vector>

#include "cwave/coords.hpp"
#include "cwave/penrose_field.hpp"

namespace cwave {

// ell solves (ell^2 - 1)/(ell^2 + 1) = |beta|.
double ell_of(const BoostParams& b);

struct TransformSequence {
    std::function<PoincareParams(int)> generator; // index n >= 1

    // Mini-language: comma-separated "param=expr" with param in
    // {lambda, t, beta, ell, x} and expr in {const, c^n, c*n, n};
    // beta/x act along the first axis, ell sets |beta| via its identity.
    static TransformSequence parse(const std::string& text);
};

struct OrthogonalityVerdict {
    enum class Kind { lorentz, rescaling, angular, translation, none, inconclusive };
    Kind kind = Kind::none;
    double witness = 0.0; // indicator value at the largest tested index
    std::string note;     // e.g. angular check skipped for zero boosts
};

std::string to_string(OrthogonalityVerdict::Kind k);

// Evaluates the four divergence indicators at n = 1..n_max; a property holds
// when its indicator exceeds grow_threshold at n_max and grows monotonically
// over the last half of the range. Verdict order: lorentz, rescaling,
// angular, translation.
OrthogonalityVerdict classify(const TransformSequence& a, const TransformSequence& b,
                              int n_max = 16, double grow_threshold = 1e3);

// iint |lam1 w1(Lam1(t,x))|^alpha |lam2 w2(Lam2(t,x))|^{4-alpha} dt dx per
// index n, for dilation/time-translation sequences acting on radial fields.
std::vector<double> mixed_l4_decay(const Field& w1, const Field& w2,
                                   const TransformSequence& a, const TransformSequence& b,
                                   double alpha, const std::vector<int>& n_list);

} // namespace cwave
