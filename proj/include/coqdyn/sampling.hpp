#pragma once

#include <cmath>
#include <random>

#include "coqdyn/dynamics.hpp"
#include "coqdyn/regime.hpp"

namespace coqdyn::sampling {

using Rng = std::mt19937_64;

inline Coq random_coquaternion(Rng& rng, double scale = 1.0) {
    std::uniform_real_distribution<double> d(-scale, scale);
    return {d(rng), d(rng), d(rng), d(rng)};
}

/// Random state with indefinite norm exactly +1 (resampled away from the
/// null cone, then rescaled).
inline StateVector random_unit_state(Rng& rng) {
    std::normal_distribution<double> g(0.0, 1.0);
    for (;;) {
        StateVector s{{g(rng), g(rng), g(rng), g(rng)},
                      {g(rng), g(rng), g(rng), g(rng)}};
        const double n = s.norm();
        if (n < 0.2) continue;
        const double f = 1.0 / std::sqrt(n);
        return {s.psi1 * f, s.psi2 * f};
    }
}

/// Exponential growth budget of the space-like flow: |u0| plus the real
/// part of sqrt(gap2). State components grow like exp(budget * t) and the
/// hidden Bloch components like exp(2 * budget * t), so bounding it keeps
/// quadratic invariants resolvable above double-precision cancellation
/// noise over a t ~ 10 run.
inline double growth_exponent(const Params& u) {
    const double g2 = gap2(u);
    return std::abs(u[0]) + (g2 > 0 ? std::sqrt(g2) : 0.0);
}

struct RegimeSampler {
    double component_range = 0.8;  // each u_l uniform in +-range
    double growth_budget = 0.3;    // space-like growth cap
    double boundary_margin = 0.02; // keep |nu^2| and |gap2| off the boundaries
};

/// Random parameters in a prescribed regime. Space-like draws are
/// additionally rejected when the growth budget is exceeded.
inline Params random_params(Rng& rng, RegimeKind kind,
                            const RegimeSampler& opt = {}) {
    std::uniform_real_distribution<double> d(-opt.component_range,
                                             opt.component_range);
    for (;;) {
        Params u;
        for (double& v : u) v = d(rng);
        if (kind == RegimeKind::Null) {
            // Place u2 on the boundary exactly; bound the shear rate.
            u[2] = std::sqrt(u[4] * u[4] + u[5] * u[5]);
            if (std::sqrt(u[1] * u[1] + u[3] * u[3]) > 0.35) continue;
            return u;
        }
        const Regime r = classify(u);
        if (r.kind != kind) continue;
        if (std::abs(nu2_signed(u)) < opt.boundary_margin) continue;
        if (std::abs(gap2(u)) < opt.boundary_margin) continue;
        if (kind == RegimeKind::SpaceLike &&
            growth_exponent(u) > opt.growth_budget)
            continue;
        return u;
    }
}

/// Random parameters realizing one dynamical case with the orbit rate
/// 2 sqrt(|gap2|) inside [rate_min, rate_max].
inline Params random_case(Rng& rng, CaseLabel label, double rate_min,
                          double rate_max, const RegimeSampler& opt = {}) {
    const RegimeKind kind =
        label == CaseLabel::A ? RegimeKind::TimeLike : RegimeKind::SpaceLike;
    for (;;) {
        Params u = random_params(rng, kind, opt);
        const Regime r = classify(u);
        if (r.case_label != label) continue;
        const double rate = 2.0 * std::sqrt(std::abs(gap2(u)));
        if (rate < rate_min || rate > rate_max) continue;
        return u;
    }
}

} // namespace coqdyn::sampling
