// analytic.hpp — closed-form Jacobi-elliptic solutions of the envelope
// system for both invariant branches, beat frequency and adiabaticity
// window, and modulus <-> invariant conversion.
//
// Both branches share the elliptic argument u = a t with a = g sqrt(S w)/2:
//   cn branch (C = 1 - 2k^2):  g0 = sqrt(2S) k cn(u,k)
//   dn branch (C = k^2 - 2):   g0 = sqrt(2S)   dn(u,k)

#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "dicke/elliptic.hpp"
#include "dicke/model.hpp"

namespace dicke {

// Beat frequency Omega = w pi g / (2 g_c K(k)); the envelope repeats with
// period 2 pi / Omega. Diverging beat period at k = 1 is rejected.
inline double beat_frequency(const DickeParams& pr, const EllipticModulus& k) {
    if (k.is_one()) throw std::domain_error("beat_frequency: infinite beat period at k = 1");
    return pr.omega * M_PI * pr.g / (2.0 * pr.g_c * complete_elliptic_k(k));
}

// Period of the signed envelope g0 itself. The intensity g0^2 repeats with
// the beat period 2 pi / Omega (elliptic argument shift 2K), but the signed
// cn-branch envelope changes sign there — the "phase change by pi" each
// beat — and needs two beats (argument shift 4K) to return.
inline double envelope_period(const DickeParams& pr, const EllipticModulus& k) {
    return 2.0 * (2.0 * M_PI / beat_frequency(pr, k));
}

struct AdiabaticWindow {
    double margin;       // k - (1 - 2 exp(-(pi/2) g/g_c))
    bool ok;             // k inside the slow-evolution window
    double omega_ratio;  // Omega / omega (infinite beat period reported as 0)
};

inline AdiabaticWindow adiabatic_window(const DickeParams& pr, const EllipticModulus& k) {
    const double threshold = 1.0 - 2.0 * std::exp(-0.5 * M_PI * pr.g / pr.g_c);
    const double margin = k.k() - threshold;
    const double ratio = k.is_one() ? 0.0 : beat_frequency(pr, k) / pr.omega;
    return {margin, margin >= 0.0, ratio};
}

// Invert the case-defining relation between the adiabatic invariant C and
// the elliptic modulus: C = 1 - 2k^2 (cn branch) or C = k^2 - 2 (dn branch).
inline EllipticModulus modulus_from_invariant(double c, SolutionCase sc) {
    if (sc == SolutionCase::Cn) {
        if (!(c >= -1.0 && c <= 1.0))
            throw std::domain_error("cn branch requires C in [-1, 1], got " +
                                    std::to_string(c));
        return EllipticModulus(std::sqrt(0.5 * (1.0 - c)));
    }
    if (!(c >= -2.0 && c <= -1.0))
        throw std::domain_error("dn branch requires C in [-2, -1], got " + std::to_string(c));
    return EllipticModulus(std::sqrt(c + 2.0));
}

inline double invariant_of_case(SolutionCase sc, const EllipticModulus& k) {
    return sc == SolutionCase::Cn ? 1.0 - 2.0 * k.k2() : k.k2() - 2.0;
}

// Slow variables of the closed-form solution at one instant.
struct AnalyticPoint {
    double g0;             // condensate envelope
    double g0_dot;         // its time derivative
    double theta;          // envelope rotation angle, atan2 convention
    double s_y_envelope;   // envelope of S_y (the amplitude of its sin w t carrier)
    double s_z;
};

class AnalyticSolution {
  public:
    AnalyticSolution(SolutionCase sc, const EllipticModulus& k, const DickeParams& pr)
        : case_(sc), k_(k), params_(pr) {}

    SolutionCase solution_case() const { return case_; }
    const EllipticModulus& modulus() const { return k_; }
    const DickeParams& params() const { return params_; }
    double arg_rate() const { return params_.arg_rate(); }
    double invariant() const { return invariant_of_case(case_, k_); }
    double beat_omega() const { return beat_frequency(params_, k_); }

    AnalyticPoint evaluate(double t) const {
        if (!std::isfinite(t)) throw std::domain_error("evaluate: non-finite time");
        const double a = arg_rate();
        const double amp = std::sqrt(2.0 * params_.s);
        const double k = k_.k();
        const double k2 = k_.k2();
        const double s = params_.s;
        const auto j = jacobi_elliptic(a * t, k_);

        AnalyticPoint out{};
        if (case_ == SolutionCase::Cn) {
            out.g0 = amp * k * j.cn;
            out.g0_dot = -amp * k * a * j.sn * j.dn;
            out.s_z = s * (1.0 - 2.0 * k2 * j.sn * j.sn);
            out.s_y_envelope = 2.0 * k * s * j.sn * j.dn;
        } else {
            out.g0 = amp * j.dn;
            out.g0_dot = -amp * k2 * a * j.sn * j.cn;
            out.s_z = s * k2 * (1.0 - 2.0 * j.sn * j.sn);
            out.s_y_envelope = 2.0 * k2 * s * j.sn * j.cn;
        }
        // Theta by atan2 on a (sin, cos) pair: cos(theta) = s_z / S with the
        // sine magnitude from normalization and its sign tracked through the
        // S_y envelope. On the cn branch this equals
        // atan2(s_y_envelope/S, s_z/S) identically (the envelope pair lies on
        // the radius-S circle) while staying consistent with the adiabatic
        // invariant on the dn branch, whose envelope pair has radius S k^2.
        const double cth = out.s_z / s;
        const double sth_mag = std::sqrt(std::max(0.0, (1.0 - cth) * (1.0 + cth)));
        out.theta = std::atan2(out.s_y_envelope < 0.0 ? -sth_mag : sth_mag, cth);
        return out;
    }

  private:
    SolutionCase case_;
    EllipticModulus k_;
    DickeParams params_;
};

} // namespace dicke
