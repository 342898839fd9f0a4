#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "dicke/analytic.hpp"
#include "dicke/envelope.hpp"
#include "dicke/validation.hpp"

using namespace dicke;

namespace {
const DickeParams kAbove = make_params(1.0, 1.0, 2.0 * std::sqrt(0.1), 10.0);
} // namespace

TEST_CASE("beat frequency") {
    // K(0) = pi/2 gives Omega = w g / g_c.
    CHECK(beat_frequency(kAbove, EllipticModulus(0.0)) ==
          Catch::Approx(kAbove.omega * kAbove.g / kAbove.g_c).epsilon(1e-14));
    const DickeParams at = make_params(1.0, 1.0, std::sqrt(0.1), 10.0);
    CHECK(beat_frequency(at, EllipticModulus(0.0)) ==
          Catch::Approx(at.omega).epsilon(1e-14));

    const EllipticModulus k99(0.99);
    CHECK(beat_frequency(kAbove, k99) ==
          Catch::Approx(kAbove.omega * M_PI * kAbove.g /
                        (2.0 * kAbove.g_c * complete_elliptic_k(k99)))
              .epsilon(1e-14));

    CHECK_THROWS_WITH(beat_frequency(kAbove, EllipticModulus(1.0)),
                      Catch::Matchers::ContainsSubstring("infinite beat period"));
}

TEST_CASE("adiabatic window") {
    // g/g_c = 2: threshold k >= 1 - 2 e^{-pi}.
    const double threshold = 1.0 - 2.0 * std::exp(-M_PI);
    CHECK(threshold == Catch::Approx(0.91358).margin(1e-5));
    const auto below = adiabatic_window(kAbove, EllipticModulus(0.9));
    CHECK_FALSE(below.ok);
    CHECK(below.margin == Catch::Approx(0.9 - threshold).margin(1e-12));
    const auto above = adiabatic_window(kAbove, EllipticModulus(0.95));
    CHECK(above.ok);

    // k = 1 is inside the window for any coupling; Omega/omega reported as 0.
    const auto soliton = adiabatic_window(kAbove, EllipticModulus(1.0));
    CHECK(soliton.ok);
    CHECK(soliton.omega_ratio == 0.0);

    // Window collapses as g/g_c grows.
    const DickeParams strong = make_params(1.0, 1.0, 20.0 * kAbove.g_c, 10.0);
    CHECK_FALSE(adiabatic_window(strong, EllipticModulus(0.999999)).ok);
}

TEST_CASE("modulus and invariant conversions") {
    CHECK(modulus_from_invariant(1.0, SolutionCase::Cn).k() == 0.0);
    CHECK(modulus_from_invariant(-1.0, SolutionCase::Cn).k() == 1.0);
    CHECK(modulus_from_invariant(-1.0, SolutionCase::Dn).k() == 1.0);
    CHECK(modulus_from_invariant(-2.0, SolutionCase::Dn).k() == 0.0);

    CHECK_THROWS_WITH(modulus_from_invariant(1.5, SolutionCase::Cn),
                      Catch::Matchers::ContainsSubstring("[-1, 1]"));
    CHECK_THROWS_WITH(modulus_from_invariant(-0.5, SolutionCase::Dn),
                      Catch::Matchers::ContainsSubstring("[-2, -1]"));

    // Round trip through the initial-state invariant is exact.
    for (const double c : {-0.9602, 0.0, 0.62}) {
        const EllipticModulus k = modulus_from_invariant(c, SolutionCase::Cn);
        CHECK(invariant_of_case(SolutionCase::Cn, k) == Catch::Approx(c).margin(1e-14));
    }
    for (const double c : {-1.19, -1.64, -1.99}) {
        const EllipticModulus k = modulus_from_invariant(c, SolutionCase::Dn);
        CHECK(invariant_of_case(SolutionCase::Dn, k) == Catch::Approx(c).margin(1e-14));
    }
}

TEST_CASE("closed-form evaluation at distinguished points") {
    const double s = kAbove.s;
    const double kv = 0.9;
    const EllipticModulus k(kv);

    SECTION("cn branch") {
        const AnalyticSolution sol(SolutionCase::Cn, k, kAbove);
        const AnalyticPoint p0 = sol.evaluate(0.0);
        CHECK(p0.g0 == Catch::Approx(std::sqrt(2.0 * s) * kv).margin(1e-12));
        CHECK(p0.s_z == Catch::Approx(s).margin(1e-12));
        CHECK(p0.s_y_envelope == Catch::Approx(0.0).margin(1e-12));

        // Quarter period a t = K: the "darkness" point.
        const double tq = complete_elliptic_k(k) / sol.arg_rate();
        const AnalyticPoint pq = sol.evaluate(tq);
        CHECK(pq.g0 == Catch::Approx(0.0).margin(1e-9));
        CHECK(pq.s_z == Catch::Approx(s * (1.0 - 2.0 * kv * kv)).margin(1e-9));
        CHECK(pq.s_y_envelope ==
              Catch::Approx(2.0 * kv * s * k.complement()).margin(1e-9));
    }

    SECTION("dn branch") {
        const AnalyticSolution sol(SolutionCase::Dn, k, kAbove);
        const AnalyticPoint p0 = sol.evaluate(0.0);
        CHECK(p0.g0 == Catch::Approx(std::sqrt(2.0 * s)).margin(1e-12));
        CHECK(p0.s_z == Catch::Approx(s * kv * kv).margin(1e-12));
    }

    SECTION("soliton limit k = 1: both cases degenerate to sech") {
        const AnalyticSolution cn1(SolutionCase::Cn, EllipticModulus(1.0), kAbove);
        const AnalyticSolution dn1(SolutionCase::Dn, EllipticModulus(1.0), kAbove);
        const double a = cn1.arg_rate();
        for (double t = 0.0; t <= 10.0 / a; t += 0.5 / a) {
            CHECK(std::abs(cn1.evaluate(t).g0 - dn1.evaluate(t).g0) <= 1e-10);
            CHECK(std::abs(cn1.evaluate(t).s_z - dn1.evaluate(t).s_z) <= 1e-10);
            CHECK(cn1.evaluate(t).g0 ==
                  Catch::Approx(std::sqrt(2.0 * s) / std::cosh(a * t)).margin(1e-12));
        }
        // s_z -> -S as |t| grows in the cn soliton.
        CHECK(cn1.evaluate(30.0 / a).s_z == Catch::Approx(-s).margin(1e-6));
    }
}

TEST_CASE("invariant exactness of the closed forms") {
    for (const double kv : {0.3, 0.7, 0.95}) {
        const EllipticModulus k(kv);
        for (const SolutionCase sc : {SolutionCase::Cn, SolutionCase::Dn}) {
            const AnalyticSolution sol(sc, k, kAbove);
            const double c = sol.invariant();
            for (double t = 0.0; t < 40.0; t += 0.37) {
                const AnalyticPoint p = sol.evaluate(t);
                const EnvelopeState st{p.g0, p.g0_dot, p.theta};
                CHECK(std::abs(adiabatic_invariant(st, kAbove) - c) <= 1e-12);
            }
        }
    }
}

TEST_CASE("closed forms satisfy the envelope ODE (finite differences)") {
    const std::vector<double> moduli{0.3, 0.7, 0.95, 1.0 - 1e-6};
    for (const SolutionCase sc : {SolutionCase::Cn, SolutionCase::Dn}) {
        const auto c = check_analytic_ode_residual(kAbove, sc, moduli);
        INFO(c.name << " metric " << c.metric);
        CHECK(c.pass);
    }
}

TEST_CASE("signed-envelope periodicity and beat antiperiodicity") {
    for (const double kv : {0.5, 0.9, 0.99}) {
        const EllipticModulus k(kv);
        const AnalyticSolution sol(SolutionCase::Cn, k, kAbove);
        const double period = envelope_period(kAbove, k);
        const double beat = 2.0 * M_PI / sol.beat_omega();
        CHECK(period == Catch::Approx(2.0 * beat).epsilon(1e-14));
        for (double t = 0.0; t < period; t += period / 17.0) {
            CHECK(std::abs(sol.evaluate(t + period).g0 - sol.evaluate(t).g0) <=
                  1e-10 * std::sqrt(2.0 * kAbove.s));
            // One beat flips the envelope sign: the "phase change by pi".
            CHECK(std::abs(sol.evaluate(t + beat).g0 + sol.evaluate(t).g0) <=
                  1e-10 * std::sqrt(2.0 * kAbove.s));
        }
    }
}

TEST_CASE("theta tracking and s_y envelope consistency") {
    // The cn-branch (s_y_envelope, s_z) pair lies on the radius-S spin
    // sphere, so S sin(theta) recovered through atan2 reproduces the
    // envelope exactly; the dn-branch pair lies on the radius S k^2 circle
    // (a measured property of the closed-form solution family).
    {
        const AnalyticSolution sol(SolutionCase::Cn, EllipticModulus(0.8), kAbove);
        for (double t = 0.0; t < 30.0; t += 0.41) {
            const AnalyticPoint p = sol.evaluate(t);
            CHECK(std::abs(kAbove.s * std::sin(p.theta) - p.s_y_envelope) <= 1e-10);
            CHECK(std::abs(kAbove.s * std::cos(p.theta) - p.s_z) <= 1e-10);
        }
    }
    {
        // The dn pair lives on the radius S k^2 circle; theta keeps the
        // invariant-compatible convention cos(theta) = s_z / S with the sign
        // of sin(theta) following the S_y envelope.
        const AnalyticSolution sol(SolutionCase::Dn, EllipticModulus(0.8), kAbove);
        for (double t = 0.0; t < 30.0; t += 0.41) {
            const AnalyticPoint p = sol.evaluate(t);
            CHECK(std::abs(kAbove.s * std::cos(p.theta) - p.s_z) <= 1e-10);
            if (p.s_y_envelope != 0.0)
                CHECK(std::sin(p.theta) * p.s_y_envelope >= 0.0);
        }
    }
    CHECK_THROWS_AS(
        AnalyticSolution(SolutionCase::Cn, EllipticModulus(0.5), kAbove)
            .evaluate(std::nan("")),
        std::domain_error);
}

TEST_CASE("dn branch with k = 0 is a frozen degenerate solution") {
    const AnalyticSolution sol(SolutionCase::Dn, EllipticModulus(0.0), kAbove);
    for (double t = 0.0; t < 10.0; t += 1.3) {
        const AnalyticPoint p = sol.evaluate(t);
        CHECK(p.g0 == Catch::Approx(std::sqrt(2.0 * kAbove.s)).margin(1e-12));
        CHECK(p.s_z == Catch::Approx(0.0).margin(1e-12));
        CHECK(p.theta == Catch::Approx(0.5 * M_PI).margin(1e-12));
    }
}
