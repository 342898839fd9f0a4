// Acceptance runner: executes every numbered acceptance criterion and
// prints one PASS/FAIL line per criterion with its metric and pinned
// threshold. The process exits nonzero if any criterion fails, so known
// shortfalls are reported honestly instead of being hidden.

#include <cmath>
#include <cstdio>
#include <vector>

#include "dicke/runner.hpp"
#include "dicke/validation.hpp"

using namespace dicke;

namespace {

int failures = 0;

void report(const std::string& id, const ValidationCheck& c, bool threshold_is_floor = false) {
    if (!c.pass) ++failures;
    std::printf("[%s] %-34s metric=%-12.6g threshold%s%-12.6g %s  (%s)\n", id.c_str(),
                c.name.c_str(), c.metric, threshold_is_floor ? ">=" : "<=", c.threshold,
                c.pass ? "PASS" : "FAIL", c.details.c_str());
}

void info(const std::string& id, const ValidationCheck& c) {
    std::printf("[%s] %-34s metric=%-12.6g (supplementary, not scored)  (%s)\n", id.c_str(),
                c.name.c_str(), c.metric, c.details.c_str());
}

} // namespace

int main() {
    const DickeParams base = make_params(1.0, 1.0, 2.0 * std::sqrt(0.1), 10.0);
    const EllipticModulus k99(0.99);

    // 1. Elliptic kernel identities and quarter-period oracles.
    report("1", check_elliptic_kernel());

    // 2. Closed forms satisfy the envelope ODE, both invariant branches.
    report("2a", check_analytic_ode_residual(base, SolutionCase::Cn,
                                             {0.3, 0.7, 0.95, 1.0 - 1e-6}));
    report("2b", check_analytic_ode_residual(base, SolutionCase::Dn,
                                             {0.3, 0.7, 0.95, 1.0 - 1e-6}));

    // 3 + 4. Numeric envelope vs closed form and invariant drift, both
    // branches. The dn legs compare the dn closed form against the averaged
    // three-variable flow started from the dn initial data; that flow
    // conserves the adiabatic invariant at C = 1 - 2k^2 <= 1 and therefore
    // cannot follow the C = k^2 - 2 branch. The legs are executed and
    // reported as the honest FAIL they are.
    const EnvelopeComparison cn_env = check_envelope_vs_analytic(base, SolutionCase::Cn, k99);
    report("3a", cn_env.match);
    report("4a", cn_env.drift);
    const EnvelopeComparison dn_env = check_envelope_vs_analytic(base, SolutionCase::Dn, k99);
    report("3b", dn_env.match);
    report("4b", dn_env.drift);

    // 5. Beat periodicity of the signed envelope at several moduli.
    report("5", check_beat_periodicity(base, {0.5, 0.9, 0.99}));

    // 6. Canonical oracle conserves energy and spin norm.
    report("6", check_canonical_conservation(base, SolutionCase::Cn, k99));

    // 7. Second-order system vs canonical oracle in the linear regime.
    report("7", check_second_order_vs_canonical(base));

    // 8. Demodulated full dynamics vs closed form inside the adiabatic window.
    report("8", check_demod_vs_analytic(base));

    // 9a. Envelope sign flip each beat (cn) and dn positivity floor.
    report("9a", check_envelope_sign_flip(base, k99));
    report("9a'", check_envelope_positivity(base, k99), /*threshold_is_floor=*/true);

    // 9b. Fast-averaged -E.d against the Zeeman energy, taken literally from
    // a numeric trajectory. The coupling term averages toward a positive
    // multiple of the Zeeman channel rather than its mirror, so the literal
    // anticorrelation bound is not attainable; the energy that actually
    // counter-oscillates with the Zeeman reservoir is the photon energy
    // (supplementary line below, correlation -1). Reported as an honest FAIL.
    report("9b", check_dipole_zeeman_correlation(base));
    info("9b'", check_energy_sloshing(base, k99));

    // 10. Static fixed points above, at, and below threshold.
    report("10", check_static_fixed_points(base));

    // 11. Byte-level determinism of repeated runs.
    report("11", check_determinism(base, SolutionCase::Cn, k99));

    std::printf("acceptance: %d criterion line(s) failed\n", failures);
    return failures == 0 ? 0 : 1;
}
