// model.hpp — physical parameters, state representations and static fixed
// points of the semiclassical Dicke system
//
//   H = (p^2 + w^2 q^2)/2 + g p S_y - E_J S_z
//
// Natural units, hbar = 1. The critical coupling is g_c = sqrt(E_J / S).

#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "dicke/errors.hpp"

namespace dicke {

struct DickeParams {
    double omega;  // photon mode frequency
    double e_j;    // TLS level splitting
    double g;      // dipole coupling strength
    double s;      // total pseudo-spin magnitude, S = N/2
    double g_c;    // derived: sqrt(e_j / s)

    bool is_resonant() const { return std::abs(omega - e_j) <= 1e-12 * omega; }

    // Elliptic argument rate a = g sqrt(S w) / 2 shared by all closed-form
    // solutions.
    double arg_rate() const { return 0.5 * g * std::sqrt(s * omega); }
};

inline DickeParams make_params(double omega, double e_j, double g, double s) {
    auto check_finite = [](double v, const char* name) {
        if (!std::isfinite(v))
            throw ConfigError(std::string("parameter ") + name + " must be finite");
    };
    check_finite(omega, "omega");
    check_finite(e_j, "e_j");
    check_finite(g, "g");
    check_finite(s, "s");
    if (omega <= 0.0) throw ConfigError("parameter omega must be positive");
    if (e_j <= 0.0) throw ConfigError("parameter e_j must be positive");
    if (s <= 0.0) throw ConfigError("parameter s must be positive");
    if (g < 0.0) throw ConfigError("parameter g must be non-negative");
    return DickeParams{omega, e_j, g, s, std::sqrt(e_j / s)};
}

enum class SolutionCase {
    Cn,  // adiabatic invariant C = 1 - 2 k^2
    Dn,  // adiabatic invariant C = k^2 - 2
};

inline const char* to_string(SolutionCase c) {
    return c == SolutionCase::Cn ? "cn" : "dn";
}

// One member of the (possibly degenerate) static solution family:
// spin rotation angle theta0 and condensate amplitude lambda_R.
struct StaticState {
    double theta0;
    double lambda_r;
};

// Full canonical phase point: oscillator (q, p) plus spin vector.
struct CanonicalState {
    double q;
    double p;
    double sx;
    double sy;
    double sz;

    double spin_norm_sq() const { return sx * sx + sy * sy + sz * sz; }
};

// State of the second-order fast system:
// values and first time derivatives of p, S_x, S_y, S_z.
struct SecondOrderState {
    double p, p_dot;
    double sx, sx_dot;
    double sy, sy_dot;
    double sz, sz_dot;
};

inline double classical_energy(const CanonicalState& st, const DickeParams& pr) {
    return 0.5 * (st.p * st.p + pr.omega * pr.omega * st.q * st.q) +
           pr.g * st.p * st.sy - pr.e_j * st.sz;
}

// Stationary points of the averaged dynamics. Below threshold (g <= g_c)
// only the normal-phase point exists; above it the degenerate pair with
// cos(theta0) = (g_c/g)^2 and lambda_R = -g S sin(theta0)/sqrt(2 w), paired
// so that the coupling energy g p S_y is negative for both members.
inline std::vector<StaticState> static_fixed_points(const DickeParams& pr) {
    if (pr.g <= pr.g_c) return {StaticState{0.0, 0.0}};
    const double c = (pr.g_c / pr.g) * (pr.g_c / pr.g);  // cos(theta0)
    const double sth = std::sqrt((1.0 - c) * (1.0 + c));
    const double lam = pr.g * pr.s * sth / std::sqrt(2.0 * pr.omega);
    return {StaticState{std::acos(c), -lam}, StaticState{-std::acos(c), lam}};
}

} // namespace dicke
