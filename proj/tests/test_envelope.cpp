#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <cmath>

#include "dicke/analytic.hpp"
#include "dicke/envelope.hpp"
#include "dicke/initial_state.hpp"

using namespace dicke;

namespace {

const DickeParams kAbove = make_params(1.0, 1.0, 2.0 * std::sqrt(0.1), 10.0);

SolverConfig envelope_solver(double t_end) {
    SolverConfig cfg;
    cfg.method = Method::AdaptiveRk45;
    cfg.rel_tol = 1e-10;
    cfg.abs_tol = 1e-12;
    cfg.t_end = t_end;
    cfg.samples_per_period = 40;
    return cfg;
}

} // namespace

TEST_CASE("adiabatic invariant values") {
    CHECK(adiabatic_invariant(EnvelopeState{0.0, 0.0, 0.0}, kAbove) == 1.0);

    const double kv = 0.8;
    const auto cn = initial_state(kAbove, SolutionCase::Cn, EllipticModulus(kv));
    CHECK(adiabatic_invariant(cn.envelope, kAbove) ==
          Catch::Approx(1.0 - 2.0 * kv * kv).margin(1e-12));

    const auto dn = initial_state(kAbove, SolutionCase::Dn, EllipticModulus(kv));
    CHECK(adiabatic_invariant(dn.envelope, kAbove) ==
          Catch::Approx(kv * kv - 2.0).margin(1e-12));
}

TEST_CASE("envelope right-hand side") {
    // Rest point: all derivatives vanish.
    const auto d0 = envelope_rhs(EnvelopeState{0.0, 0.0, 0.4}, kAbove);
    CHECK(d0.g0 == 0.0);
    CHECK(d0.v == 0.0);
    CHECK(d0.theta == 0.0);

    // At the cn turning point (theta = 0, g0 = sqrt(2S) k):
    // v' = -(g^2 S w / 4) sqrt(2S) k regardless of k.
    const double kv = 0.6;
    const double g0 = std::sqrt(2.0 * kAbove.s) * kv;
    const auto dt = envelope_rhs(EnvelopeState{g0, 0.0, 0.0}, kAbove);
    CHECK(dt.v == Catch::Approx(-(kAbove.g * kAbove.g * kAbove.s * kAbove.omega / 4.0) *
                                std::sqrt(2.0 * kAbove.s) * kv)
                      .margin(1e-10));
    CHECK(dt.theta ==
          Catch::Approx(0.5 * kAbove.g * std::sqrt(2.0 * kAbove.omega) * g0)
              .margin(1e-12));
}

TEST_CASE("small-amplitude envelope oscillates at g sqrt(S w)/2") {
    // Linearized small-amplitude frequency. The trajectory starts at a
    // cosine maximum, so the first sign change of g0 sits at a quarter
    // period.
    const double expected = 0.5 * kAbove.g * std::sqrt(kAbove.s * kAbove.omega);
    const EnvelopeState init{1e-4, 0.0, 0.0};
    const TimeSeries run =
        integrate_envelope(init, kAbove, envelope_solver(4.0 * M_PI / expected));
    const auto& t = run.times();
    const auto& g0 = run.channel("g0");
    double quarter_period = 0.0;
    for (std::size_t i = 1; i < t.size(); ++i) {
        if (g0[i - 1] > 0.0 && g0[i] <= 0.0) {
            // Linear interpolation of the zero crossing.
            const double frac = g0[i - 1] / (g0[i - 1] - g0[i]);
            quarter_period = t[i - 1] + frac * (t[i] - t[i - 1]);
            break;
        }
    }
    REQUIRE(quarter_period > 0.0);
    CHECK(0.5 * M_PI / quarter_period == Catch::Approx(expected).epsilon(1e-4));
}

TEST_CASE("rest point stays at rest") {
    const TimeSeries run =
        integrate_envelope(EnvelopeState{0.0, 0.0, 0.0}, kAbove, envelope_solver(10.0));
    for (const double v : run.channel("g0")) CHECK(v == 0.0);
    for (const double v : run.channel("theta")) CHECK(v == 0.0);
    for (const double v : run.channel("invariant_C")) CHECK(v == 1.0);
}

TEST_CASE("sign symmetry of the slow flow") {
    const auto init = initial_state(kAbove, SolutionCase::Cn, EllipticModulus(0.7));
    const EnvelopeState pos = init.envelope;
    const EnvelopeState negated{-pos.g0, -pos.v, -pos.theta};
    const TimeSeries a = integrate_envelope(pos, kAbove, envelope_solver(20.0));
    const TimeSeries b = integrate_envelope(negated, kAbove, envelope_solver(20.0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(std::abs(a.channel("g0")[i] + b.channel("g0")[i]) <= 1e-12);
        CHECK(std::abs(a.channel("v")[i] + b.channel("v")[i]) <= 1e-12);
        CHECK(std::abs(a.channel("theta")[i] + b.channel("theta")[i]) <= 1e-12);
    }
}

TEST_CASE("algebraic slow relation holds along cn trajectories") {
    const EllipticModulus k(0.99);
    const auto init = initial_state(kAbove, SolutionCase::Cn, k);
    const TimeSeries run = integrate_envelope(
        init.envelope, kAbove, envelope_solver(envelope_period(kAbove, k)));
    for (std::size_t i = 0; i < run.size(); ++i) {
        const EnvelopeState st{run.channel("g0")[i], run.channel("v")[i],
                               run.channel("theta")[i]};
        CHECK(std::abs(envelope_constraint_residual(st, kAbove)) <= 1e-7);
    }
}

TEST_CASE("invariant drift stays within integrator tolerance") {
    const EllipticModulus k(0.99);
    const auto init = initial_state(kAbove, SolutionCase::Cn, k);
    const TimeSeries run = integrate_envelope(
        init.envelope, kAbove, envelope_solver(3.0 * envelope_period(kAbove, k)));
    const auto& c = run.channel("invariant_C");
    for (const double v : c) CHECK(std::abs(v - c[0]) <= 1e-9);
}

TEST_CASE("phase-plane closure after one envelope period") {
    const EllipticModulus k(0.9);
    const double period = envelope_period(kAbove, k);
    const auto init = initial_state(kAbove, SolutionCase::Cn, k);
    // Integrate on a grid that lands exactly on the period.
    std::array<double, 3> y{init.envelope.g0, init.envelope.v, init.envelope.theta};
    std::array<double, 3> yend = y;
    SolverConfig cfg = envelope_solver(period);
    auto rhs = [&](double, const std::array<double, 3>& v, std::array<double, 3>& d) {
        const EnvelopeState dd = envelope_rhs(EnvelopeState{v[0], v[1], v[2]}, kAbove);
        d = {dd.g0, dd.v, dd.theta};
    };
    integrate_sampled<3>(rhs, y, 0.0, cfg, period / 256.0,
                         [&](double, const std::array<double, 3>& v) { yend = v; });
    CHECK(std::abs(yend[0] - y[0]) <= 1e-6);
    CHECK(std::abs(yend[1] - y[1]) <= 1e-6);
}

TEST_CASE("dn-branch numeric envelope never crosses zero") {
    const EllipticModulus k(0.9);
    const auto init = initial_state(kAbove, SolutionCase::Dn, k);
    const TimeSeries run = integrate_envelope(
        init.envelope, kAbove, envelope_solver(envelope_period(kAbove, k)));
    for (const double v : run.channel("g0")) CHECK(v > 0.0);
}
