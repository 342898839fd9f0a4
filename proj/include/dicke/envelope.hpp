// envelope.hpp — the averaged slow-flow system for the condensate envelope
// g0, its rate v, and the spin rotation angle theta:
//
//   theta' = (g sqrt(2 w)/2) g0
//   g0'    = v
//   v'     = -(g^2 S w / 4) g0 (C + g0^2/S),  C = cos(theta) - g0^2/S
//
// C is recomputed from the state at every evaluation, so drift of the
// invariant channel is a genuine integrator diagnostic.

#pragma once

#include <cmath>

#include "dicke/model.hpp"
#include "dicke/ode.hpp"
#include "dicke/timeseries.hpp"

namespace dicke {

struct EnvelopeState {
    double g0;     // condensate envelope amplitude, scale sqrt(2S)
    double v;      // d g0 / dt
    double theta;  // spin rotation angle (radians)
};

// First adiabatic integral C = cos(theta) - g0^2 / S.
inline double adiabatic_invariant(const EnvelopeState& st, const DickeParams& pr) {
    return std::cos(st.theta) - st.g0 * st.g0 / pr.s;
}

// Residual of the algebraic slow relation sin(theta) = -(2 sqrt(2)/(g S sqrt(w))) v.
// Zero (to integrator accuracy) along consistently initialized cn-branch flows.
inline double envelope_constraint_residual(const EnvelopeState& st, const DickeParams& pr) {
    return std::sin(st.theta) +
           (2.0 * std::sqrt(2.0) / (pr.g * pr.s * std::sqrt(pr.omega))) * st.v;
}

inline EnvelopeState envelope_rhs(const EnvelopeState& st, const DickeParams& pr) {
    const double c = adiabatic_invariant(st, pr);
    EnvelopeState d{};
    d.g0 = st.v;
    d.v = -(pr.g * pr.g * pr.s * pr.omega / 4.0) * st.g0 * (c + st.g0 * st.g0 / pr.s);
    d.theta = 0.5 * pr.g * std::sqrt(2.0 * pr.omega) * st.g0;
    return d;
}

// Integrate the slow flow. Channels: t, g0, v, theta, invariant_C.
inline TimeSeries integrate_envelope(const EnvelopeState& initial, const DickeParams& pr,
                                     const SolverConfig& cfg, double t0 = 0.0) {
    const double sample_dt =
        2.0 * M_PI / pr.omega / static_cast<double>(cfg.samples_per_period);
    TimeSeries out({"t", "g0", "v", "theta", "invariant_C"});
    auto rhs = [&pr](double, const std::array<double, 3>& y, std::array<double, 3>& dy) {
        const EnvelopeState d = envelope_rhs(EnvelopeState{y[0], y[1], y[2]}, pr);
        dy[0] = d.g0;
        dy[1] = d.v;
        dy[2] = d.theta;
    };
    integrate_sampled<3>(rhs, {initial.g0, initial.v, initial.theta}, t0, cfg, sample_dt,
                         [&](double t, const std::array<double, 3>& y) {
                             const EnvelopeState st{y[0], y[1], y[2]};
                             out.push_sample(t, {t, st.g0, st.v, st.theta,
                                                 adiabatic_invariant(st, pr)});
                         });
    return out;
}

} // namespace dicke
