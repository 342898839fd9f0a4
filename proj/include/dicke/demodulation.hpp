// demodulation.hpp — sliding-window quadrature demodulation: extracts the
// slow envelope of a fast carrier-modulated channel, the numerical
// counterpart of averaging over fast oscillations. A rectangular window of
// an integer number of carrier half-periods with trapezoidal quadrature has
// exactly zero carrier leakage.

#pragma once

#include <cmath>
#include <cstddef>
#include <string>

#include "dicke/errors.hpp"
#include "dicke/timeseries.hpp"

namespace dicke {

enum class CarrierPhase {
    Cos,  // reference cos(w t): the p-channel convention
    Sin,  // reference sin(w t): the S_y-channel convention
};

struct DemodConfig {
    double carrier_frequency;  // w
    double window = 0.0;       // averaging window; 0 means one fast period 2*pi/w
    CarrierPhase phase = CarrierPhase::Cos;

    double effective_window() const {
        return window > 0.0 ? window : 2.0 * M_PI / carrier_frequency;
    }
};

namespace detail {

inline double uniform_dt(const std::vector<double>& t) {
    if (t.size() < 2) throw ConfigError("demodulation: series too short");
    const double dt = t[1] - t[0];
    for (std::size_t i = 2; i < t.size(); ++i) {
        if (std::abs((t[i] - t[i - 1]) - dt) > 1e-9 * dt)
            throw ConfigError("demodulation: series must be uniformly sampled");
    }
    return dt;
}

} // namespace detail

// Sliding-window quadrature amplitude 2 <x(t) carrier(t)> over a centered
// rectangular window, trapezoidal quadrature. Output channel is named
// "envelope"; the grid is trimmed by one window length at each end.
inline TimeSeries extract_envelope(const TimeSeries& series, const std::string& channel,
                                   const DemodConfig& cfg) {
    const auto& t = series.times();
    const auto& x = series.channel(channel);
    const double w = cfg.carrier_frequency;
    if (!(w > 0.0)) throw ConfigError("demodulation: carrier frequency must be positive");

    const double dt = detail::uniform_dt(t);
    const double period = 2.0 * M_PI / w;
    if (dt > period / 20.0 + 1e-12 * period)
        throw ConfigError("demodulation: need at least 20 samples per carrier period");

    const double win = cfg.effective_window();
    const double half_periods = win / (0.5 * period);
    if (std::abs(half_periods - std::round(half_periods)) > 1e-6)
        throw ConfigError(
            "demodulation: window must span an integer number of carrier half-periods");
    const double steps = win / dt;
    if (std::abs(steps - std::round(steps)) > 1e-6)
        throw ConfigError("demodulation: window must be an integer number of samples");
    const auto m = static_cast<std::size_t>(std::llround(steps));
    if (m < 2 || t.size() < 2 * m + 1)
        throw ConfigError("demodulation: series must span at least two windows");

    auto carrier = [&](double time) {
        return cfg.phase == CarrierPhase::Cos ? std::cos(w * time) : std::sin(w * time);
    };

    TimeSeries out({"t", "envelope"});
    // Centered window of m intervals around sample i; skip one full window
    // at each end of the series.
    const std::size_t lo = m;
    const std::size_t hi = t.size() - 1 - m;
    const std::size_t h = m / 2;
    for (std::size_t i = lo; i <= hi; ++i) {
        const std::size_t j0 = i - h;
        double acc = 0.0;
        for (std::size_t j = j0; j <= j0 + m; ++j) {
            const double wgt = (j == j0 || j == j0 + m) ? 0.5 : 1.0;
            acc += wgt * x[j] * carrier(t[j]);
        }
        out.push_sample(t[i], {t[i], 2.0 * acc / static_cast<double>(m)});
    }
    return out;
}

} // namespace dicke
