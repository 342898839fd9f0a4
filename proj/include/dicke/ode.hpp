// ode.hpp — deterministic ODE integration: classical fixed-step RK4 and an
// embedded adaptive Dormand-Prince 5(4) pair, sampled on a uniform output
// grid independent of the step sequence.

#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <functional>

#include "dicke/errors.hpp"

namespace dicke {

enum class Method {
    FixedRk4,
    AdaptiveRk45,
};

struct SolverConfig {
    Method method = Method::AdaptiveRk45;
    double dt = 1e-3;        // fixed-step size (FixedRk4); upper bound on substeps
    double abs_tol = 1e-12;  // adaptive only
    double rel_tol = 1e-10;  // adaptive only
    double t_end = 0.0;
    int samples_per_period = 40;  // output samples per fast period 2*pi/omega

    void validate() const {
        if (!(t_end > 0.0)) throw ConfigError("solver: t_end must be positive");
        if (method == Method::FixedRk4) {
            if (!(dt > 0.0)) throw ConfigError("solver: dt must be positive");
        } else {
            if (!(abs_tol > 0.0 && abs_tol <= 1e-2))
                throw ConfigError("solver: abs_tol must lie in (0, 1e-2]");
            if (!(rel_tol > 0.0 && rel_tol <= 1e-2))
                throw ConfigError("solver: rel_tol must lie in (0, 1e-2]");
        }
        if (samples_per_period < 20)
            throw ConfigError("solver: samples_per_period must be >= 20");
    }
};

namespace detail {

template <std::size_t N>
using StateVec = std::array<double, N>;

// One classical RK4 step.
template <std::size_t N, typename Rhs>
StateVec<N> rk4_step(const Rhs& f, double t, const StateVec<N>& y, double h) {
    StateVec<N> k1, k2, k3, k4, tmp;
    f(t, y, k1);
    for (std::size_t i = 0; i < N; ++i) tmp[i] = y[i] + 0.5 * h * k1[i];
    f(t + 0.5 * h, tmp, k2);
    for (std::size_t i = 0; i < N; ++i) tmp[i] = y[i] + 0.5 * h * k2[i];
    f(t + 0.5 * h, tmp, k3);
    for (std::size_t i = 0; i < N; ++i) tmp[i] = y[i] + h * k3[i];
    f(t + h, tmp, k4);
    StateVec<N> out;
    for (std::size_t i = 0; i < N; ++i)
        out[i] = y[i] + (h / 6.0) * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
    return out;
}

// Dormand-Prince 5(4) step with embedded error estimate. Returns the 5th
// order solution; err receives the scaled error norm.
template <std::size_t N, typename Rhs>
StateVec<N> dopri_step(const Rhs& f, double t, const StateVec<N>& y, double h,
                       double abs_tol, double rel_tol, double& err) {
    static constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
    static constexpr double a21 = 1.0 / 5;
    static constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
    static constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
    static constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187,
                            a53 = 64448.0 / 6561, a54 = -212.0 / 729;
    static constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                            a64 = 49.0 / 176, a65 = -5103.0 / 18656;
    static constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192,
                            b5 = -2187.0 / 6784, b6 = 11.0 / 84;
    static constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920,
                            e5 = -17253.0 / 339200, e6 = 22.0 / 525, e7 = -1.0 / 40;

    StateVec<N> k1, k2, k3, k4, k5, k6, k7, tmp, y5;
    f(t, y, k1);
    for (std::size_t i = 0; i < N; ++i) tmp[i] = y[i] + h * a21 * k1[i];
    f(t + c2 * h, tmp, k2);
    for (std::size_t i = 0; i < N; ++i) tmp[i] = y[i] + h * (a31 * k1[i] + a32 * k2[i]);
    f(t + c3 * h, tmp, k3);
    for (std::size_t i = 0; i < N; ++i)
        tmp[i] = y[i] + h * (a41 * k1[i] + a42 * k2[i] + a43 * k3[i]);
    f(t + c4 * h, tmp, k4);
    for (std::size_t i = 0; i < N; ++i)
        tmp[i] = y[i] + h * (a51 * k1[i] + a52 * k2[i] + a53 * k3[i] + a54 * k4[i]);
    f(t + c5 * h, tmp, k5);
    for (std::size_t i = 0; i < N; ++i)
        tmp[i] = y[i] + h * (a61 * k1[i] + a62 * k2[i] + a63 * k3[i] + a64 * k4[i] +
                             a65 * k5[i]);
    f(t + h, tmp, k6);
    for (std::size_t i = 0; i < N; ++i)
        y5[i] = y[i] + h * (b1 * k1[i] + b3 * k3[i] + b4 * k4[i] + b5 * k5[i] + b6 * k6[i]);
    f(t + h, y5, k7);

    err = 0.0;
    for (std::size_t i = 0; i < N; ++i) {
        const double ei = h * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] +
                               e6 * k6[i] + e7 * k7[i]);
        const double sc = abs_tol + rel_tol * std::max(std::abs(y[i]), std::abs(y5[i]));
        const double r = ei / sc;
        err += r * r;
    }
    err = std::sqrt(err / static_cast<double>(N));
    return y5;
}

} // namespace detail

// Integrate y' = f(t, y) from t0 with observer(t, y) invoked at t0 and then
// at every multiple of sample_dt up to t0 + t_end. Sample times are hit
// exactly; the adaptive step sequence is clamped to them so output is
// deterministic for a given config.
template <std::size_t N, typename Rhs, typename Observer>
void integrate_sampled(const Rhs& f, detail::StateVec<N> y, double t0,
                       const SolverConfig& cfg, double sample_dt, Observer&& observe) {
    cfg.validate();
    if (!(sample_dt > 0.0)) throw ConfigError("solver: sample interval must be positive");

    const long nsamples = static_cast<long>(std::llround(cfg.t_end / sample_dt));
    observe(t0, y);

    if (cfg.method == Method::FixedRk4) {
        const long sub = std::max(1L, static_cast<long>(std::ceil(sample_dt / cfg.dt - 1e-12)));
        const double h = sample_dt / static_cast<double>(sub);
        for (long is = 1; is <= nsamples; ++is) {
            const double tbase = t0 + static_cast<double>(is - 1) * sample_dt;
            for (long j = 0; j < sub; ++j)
                y = detail::rk4_step<N>(f, tbase + static_cast<double>(j) * h, y, h);
            observe(t0 + static_cast<double>(is) * sample_dt, y);
        }
        return;
    }

    double h = sample_dt;  // initial guess; controller adapts quickly
    for (long is = 1; is <= nsamples; ++is) {
        double t = t0 + static_cast<double>(is - 1) * sample_dt;
        const double t_target = t0 + static_cast<double>(is) * sample_dt;
        while (t < t_target) {
            const double h_try = std::min(h, t_target - t);
            double err = 0.0;
            const auto y_new = detail::dopri_step<N>(f, t, y, h_try, cfg.abs_tol,
                                                     cfg.rel_tol, err);
            if (err <= 1.0) {
                t += h_try;
                y = y_new;
            }
            const double fac =
                std::clamp(0.9 * std::pow(std::max(err, 1e-10), -0.2), 0.2, 5.0);
            h = h_try * fac;
            if (h < 1e-14 * std::max(1.0, std::abs(t)))
                throw IntegrationError("adaptive step size underflow", t);
        }
        observe(t_target, y);
    }
}

} // namespace dicke
