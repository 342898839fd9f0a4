// full_dynamics.hpp — fast dynamics in two forms: the second-order system
// for the field and spin components (8-dim first-order form) and the
// canonical first-order Hamiltonian system used as an oracle. The two
// differ in the S_x and S_z sectors (the second-order system omits q-dependent
// terms), which is itself a measured validation product.

#pragma once

#include <array>
#include <cmath>

#include "dicke/model.hpp"
#include "dicke/ode.hpp"
#include "dicke/timeseries.hpp"

namespace dicke {

enum class FastSystem {
    SecondOrder,  // second-order field equation coupled to the Bloch-type spin equations
    Canonical,  // Hamiltonian oracle: q' = dH/dp etc., spin precession
};

// Canonical right-hand side:
//   q' = p + g S_y,  p' = -w^2 q,  S' = S x B_eff,  B_eff = (0, g p, -E_J)
inline CanonicalState derivatives_canonical(const CanonicalState& st,
                                            const DickeParams& pr) {
    CanonicalState d{};
    d.q = st.p + pr.g * st.sy;
    d.p = -pr.omega * pr.omega * st.q;
    d.sx = -pr.e_j * st.sy - pr.g * st.p * st.sz;
    d.sy = pr.e_j * st.sx;
    d.sz = pr.g * st.p * st.sx;
    return d;
}

// Second-order system in first-order form:
//   S_z'' = -g^2 p^2 S_z - g E_J p S_y
//   S_y'' = -E_J^2 S_y  - g E_J p S_z
//   S_x'' = -E_J^2 S_x  - g^2 p^2 S_x
//   p''   = -w^2 (p + g S_y)
inline SecondOrderState derivatives_second_order(const SecondOrderState& st, const DickeParams& pr) {
    const double gp2 = pr.g * pr.g * st.p * st.p;
    const double ej2 = pr.e_j * pr.e_j;
    SecondOrderState d{};
    d.p = st.p_dot;
    d.p_dot = -pr.omega * pr.omega * (st.p + pr.g * st.sy);
    d.sx = st.sx_dot;
    d.sx_dot = -ej2 * st.sx - gp2 * st.sx;
    d.sy = st.sy_dot;
    d.sy_dot = -ej2 * st.sy - pr.g * pr.e_j * st.p * st.sz;
    d.sz = st.sz_dot;
    d.sz_dot = -gp2 * st.sz - pr.g * pr.e_j * st.p * st.sy;
    return d;
}

namespace detail {

inline double second_order_energy(const SecondOrderState& st, const DickeParams& pr) {
    // q-equivalent reconstructed from p' = -w^2 q.
    const double q = -st.p_dot / (pr.omega * pr.omega);
    return 0.5 * (st.p * st.p + pr.omega * pr.omega * q * q) + pr.g * st.p * st.sy -
           pr.e_j * st.sz;
}

} // namespace detail

// Integrate the canonical system. Channels: t, q, p, sx, sy, sz, energy,
// spin_norm.
inline TimeSeries integrate_canonical(const CanonicalState& initial, const DickeParams& pr,
                                      const SolverConfig& cfg, double t0 = 0.0) {
    const double sample_dt =
        2.0 * M_PI / pr.omega / static_cast<double>(cfg.samples_per_period);
    TimeSeries out({"t", "q", "p", "sx", "sy", "sz", "energy", "spin_norm"});
    auto rhs = [&pr](double, const std::array<double, 5>& y, std::array<double, 5>& dy) {
        const CanonicalState d =
            derivatives_canonical(CanonicalState{y[0], y[1], y[2], y[3], y[4]}, pr);
        dy = {d.q, d.p, d.sx, d.sy, d.sz};
    };
    integrate_sampled<5>(rhs, {initial.q, initial.p, initial.sx, initial.sy, initial.sz},
                         t0, cfg, sample_dt, [&](double t, const std::array<double, 5>& y) {
                             const CanonicalState st{y[0], y[1], y[2], y[3], y[4]};
                             out.push_sample(t, {t, st.q, st.p, st.sx, st.sy, st.sz,
                                                 classical_energy(st, pr),
                                                 std::sqrt(st.spin_norm_sq())});
                         });
    return out;
}

// Integrate the second-order system. Channels: t, p, p_dot, sx, sy, sz, energy,
// spin_norm (energy uses the q-equivalent -p'/w^2).
inline TimeSeries integrate_second_order(const SecondOrderState& initial, const DickeParams& pr,
                                  const SolverConfig& cfg, double t0 = 0.0) {
    const double sample_dt =
        2.0 * M_PI / pr.omega / static_cast<double>(cfg.samples_per_period);
    TimeSeries out({"t", "p", "p_dot", "sx", "sy", "sz", "energy", "spin_norm"});
    auto pack = [](const SecondOrderState& s) {
        return std::array<double, 8>{s.p,  s.p_dot,  s.sx, s.sx_dot,
                                     s.sy, s.sy_dot, s.sz, s.sz_dot};
    };
    auto unpack = [](const std::array<double, 8>& y) {
        return SecondOrderState{y[0], y[1], y[2], y[3], y[4], y[5], y[6], y[7]};
    };
    auto rhs = [&pr, &pack, &unpack](double, const std::array<double, 8>& y,
                                     std::array<double, 8>& dy) {
        dy = pack(derivatives_second_order(unpack(y), pr));
    };
    integrate_sampled<8>(rhs, pack(initial), t0, cfg, sample_dt,
                         [&](double t, const std::array<double, 8>& y) {
                             const SecondOrderState st = unpack(y);
                             const double norm = std::sqrt(st.sx * st.sx + st.sy * st.sy +
                                                           st.sz * st.sz);
                             out.push_sample(t, {t, st.p, st.p_dot, st.sx, st.sy, st.sz,
                                                 detail::second_order_energy(st, pr), norm});
                         });
    return out;
}

} // namespace dicke
