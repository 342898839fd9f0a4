// initial_state.hpp — construction of mutually consistent initial states
// (canonical, second-order, envelope) from the closed-form solution of a
// chosen invariant branch evaluated at t0.
//
// The carrier/envelope ansatz used throughout:
//   p   = -sqrt(2w) g0(t) cos(w t)
//   S_z =  S cos(theta)
//   S_y =  S sin(theta) sin(w t)
//   S_x =  S sin(theta) cos(w t)
// q is reconstructed as q = -p'/w^2 so the canonical phase point is complete.

#pragma once

#include <algorithm>
#include <cmath>

#include "dicke/analytic.hpp"
#include "dicke/envelope.hpp"
#include "dicke/errors.hpp"
#include "dicke/model.hpp"

namespace dicke {

struct InitialState {
    CanonicalState canonical;
    SecondOrderState second_order;
    EnvelopeState envelope;
};

inline InitialState initial_state(const DickeParams& pr, SolutionCase sc,
                                  const EllipticModulus& k, double t0 = 0.0) {
    if (!pr.is_resonant())
        throw ConfigError("envelope ansatz requires resonance (omega = e_j)");

    const AnalyticSolution sol(sc, k, pr);
    const AnalyticPoint pt = sol.evaluate(t0);
    const double w = pr.omega;
    const double s = pr.s;

    // Spin angle: cos from s_z/S, magnitude of sin from normalization, sign
    // tracked by the S_y envelope (falling back to its time derivative at
    // envelope zeros so the branch is continuous through t0 = 0).
    const double cth = pt.s_z / s;
    const double sth_mag = std::sqrt(std::max(0.0, (1.0 - cth) * (1.0 + cth)));
    double branch = pt.s_y_envelope;
    if (branch == 0.0) {
        const double h = 1e-6 / std::max(sol.arg_rate(), 1.0);
        branch = sol.evaluate(t0 + h).s_y_envelope - pt.s_y_envelope;
    }
    const double sth = (branch < 0.0) ? -sth_mag : sth_mag;
    const double theta = std::atan2(sth, cth);

    const double theta_dot = 0.5 * pr.g * std::sqrt(2.0 * w) * pt.g0;
    const double cwt = std::cos(w * t0);
    const double swt = std::sin(w * t0);

    CanonicalState cs{};
    cs.p = -std::sqrt(2.0 * w) * pt.g0 * cwt;
    const double p_dot = -std::sqrt(2.0 * w) * (pt.g0_dot * cwt - w * pt.g0 * swt);
    cs.q = -p_dot / (w * w);
    cs.sz = s * cth;
    cs.sy = s * sth * swt;
    cs.sx = s * sth * cwt;

    SecondOrderState ps{};
    ps.p = cs.p;
    ps.p_dot = p_dot;
    ps.sz = cs.sz;
    ps.sz_dot = -s * sth * theta_dot;
    ps.sy = cs.sy;
    ps.sy_dot = s * (theta_dot * cth * swt + w * sth * cwt);
    ps.sx = cs.sx;
    ps.sx_dot = s * (theta_dot * cth * cwt - w * sth * swt);

    EnvelopeState es{pt.g0, pt.g0_dot, theta};
    return {cs, ps, es};
}

} // namespace dicke
