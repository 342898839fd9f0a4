// observables.hpp — cavity observables as scalar projections on the
// polarization direction: electric field, total TLS dipole moment, and the
// energy breakdown between photon, dipole-coupling and Zeeman reservoirs.

#pragma once

#include <cmath>

#include "dicke/errors.hpp"
#include "dicke/model.hpp"

namespace dicke {

struct CavityGeometry {
    double volume = 1.0;     // cavity volume V
    double thickness = 1.0;  // effective JJ thickness l
    double charge = 1.0;     // pair charge 2e

    void validate() const {
        if (!(volume > 0.0)) throw ConfigError("geometry: volume must be positive");
        if (!(thickness > 0.0)) throw ConfigError("geometry: thickness must be positive");
    }
};

// E(t) = (2 sqrt(w) / sqrt(V)) g0(t) cos(w t); g0 may come from the analytic
// solution or from a demodulated numeric run.
inline double electric_field(double t, double g0_at_t, const DickeParams& pr,
                             const CavityGeometry& geom) {
    return 2.0 * std::sqrt(pr.omega / geom.volume) * g0_at_t * std::cos(pr.omega * t);
}

// d(t) = 2e l S_y = 2e l s_y_envelope sin(w t).
inline double dipole_moment(double t, double s_y_envelope_at_t, double omega,
                            const CavityGeometry& geom) {
    return geom.charge * geom.thickness * s_y_envelope_at_t * std::sin(omega * t);
}

struct EnergyBreakdown {
    double photon;
    double dipole_coupling;
    double zeeman;

    double total() const { return photon + dipole_coupling + zeeman; }
};

// Instantaneous breakdown from a canonical phase point. Under the carrier
// convention p = -sqrt(2w) g0 cos(w t), the field above maps to the momentum
// as E = -sqrt(2/V) p, so -E.d = 2e l sqrt(2/V) p S_y.
inline EnergyBreakdown energy_breakdown(const CanonicalState& st, const DickeParams& pr,
                                        const CavityGeometry& geom) {
    EnergyBreakdown e{};
    e.photon = 0.5 * (st.p * st.p + pr.omega * pr.omega * st.q * st.q);
    e.dipole_coupling =
        geom.charge * geom.thickness * std::sqrt(2.0 / geom.volume) * st.p * st.sy;
    e.zeeman = -pr.e_j * st.sz;
    return e;
}

// Breakdown from envelope variables, with the photon term fast-averaged:
// <p^2/2 + w^2 q^2/2> = w g0^2, the coupling term as -E.d at time t, and the
// Zeeman term from the slow S_z.
inline EnergyBreakdown energy_breakdown_envelope(double t, double g0, double s_y_envelope,
                                                 double s_z, const DickeParams& pr,
                                                 const CavityGeometry& geom) {
    EnergyBreakdown e{};
    e.photon = pr.omega * g0 * g0;
    e.dipole_coupling = -electric_field(t, g0, pr, geom) *
                        dipole_moment(t, s_y_envelope, pr.omega, geom);
    e.zeeman = -pr.e_j * s_z;
    return e;
}

} // namespace dicke
