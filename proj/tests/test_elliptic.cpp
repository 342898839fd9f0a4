#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "dicke/elliptic.hpp"

using namespace dicke;

namespace {

// Truncated hypergeometric series for K(k), the independent oracle:
// K = (pi/2) sum_n [(2n)!/(2^{2n}(n!)^2)]^2 k^{2n}.
double k_series(double k) {
    double coeff = 1.0, pow_k = 1.0, sum = 1.0;
    for (int n = 1; n < 2000; ++n) {
        const double r = (2.0 * n - 1.0) / (2.0 * n);
        coeff *= r * r;
        pow_k *= k * k;
        const double term = coeff * pow_k;
        sum += term;
        if (term < 1e-18 * sum) break;
    }
    return 0.5 * M_PI * sum;
}

} // namespace

TEST_CASE("modulus domain and complementary modulus") {
    CHECK_THROWS_AS(EllipticModulus(-0.1), std::domain_error);
    CHECK_THROWS_AS(EllipticModulus(1.1), std::domain_error);
    CHECK_THROWS_AS(EllipticModulus(std::nan("")), std::domain_error);

    const EllipticModulus m(0.6);
    CHECK(m.k() == 0.6);
    CHECK(m.k2() == Catch::Approx(0.36).epsilon(1e-15));
    CHECK(m.complement_sq() == Catch::Approx(0.64).epsilon(1e-15));

    // Cancellation-safe near k = 1: (1-k)(1+k) keeps the leading digits.
    const EllipticModulus near_one(1.0 - 1e-12);
    CHECK(near_one.complement_sq() == Catch::Approx(2e-12).epsilon(1e-3));

    const EllipticModulus from_kp = EllipticModulus::from_complement_sq(1e-20);
    CHECK(from_kp.complement_sq() == 1e-20);
    CHECK(from_kp.k() == 1.0);  // within double spacing of 1
    CHECK_FALSE(from_kp.is_one());
}

TEST_CASE("complete elliptic integral K(k)") {
    CHECK(std::abs(complete_elliptic_k(EllipticModulus(0.0)) - 0.5 * M_PI) <= 1e-15);
    CHECK(std::abs(complete_elliptic_k(EllipticModulus(0.5)) - k_series(0.5)) <= 1e-12);

    // Series oracle agreement over the moderate-modulus range.
    for (double k = 0.05; k <= 0.7; k += 0.05)
        CHECK(std::abs(complete_elliptic_k(EllipticModulus(k)) - k_series(k)) <= 1e-12);

    // Monotonically increasing in k.
    double prev = 0.0;
    for (double k = 0.0; k < 1.0; k += 0.01) {
        const double v = complete_elliptic_k(EllipticModulus(k));
        CHECK(v > prev);
        prev = v;
    }

    // Logarithmic divergence: K ~ ln(4/k') as k -> 1.
    for (const double kp2 : {2e-8 - 1e-16, 1e-17, 1e-20}) {
        const EllipticModulus m = EllipticModulus::from_complement_sq(kp2);
        const double asym = std::log(4.0 / std::sqrt(kp2));
        CHECK(std::abs(complete_elliptic_k(m) - asym) / asym <= 1e-6);
    }
    CHECK(complete_elliptic_k(EllipticModulus(1.0 - 1e-10)) >= 10.0);

    CHECK_THROWS_WITH(complete_elliptic_k(EllipticModulus(1.0)),
                      Catch::Matchers::ContainsSubstring("divergent quarter period"));
}

TEST_CASE("jacobi elliptic degenerate moduli") {
    for (const double u : {-3.7, -1.0, 0.0, 0.4, 2.9, 11.0}) {
        const auto j0 = jacobi_elliptic(u, EllipticModulus(0.0));
        CHECK(j0.sn == Catch::Approx(std::sin(u)).margin(1e-15));
        CHECK(j0.cn == Catch::Approx(std::cos(u)).margin(1e-15));
        CHECK(j0.dn == 1.0);

        const auto j1 = jacobi_elliptic(u, EllipticModulus(1.0));
        CHECK(j1.sn == Catch::Approx(std::tanh(u)).margin(1e-15));
        CHECK(j1.cn == Catch::Approx(1.0 / std::cosh(u)).margin(1e-15));
        CHECK(j1.dn == Catch::Approx(1.0 / std::cosh(u)).margin(1e-15));
    }
    const auto origin = jacobi_elliptic(0.0, EllipticModulus(0.77));
    CHECK(origin.sn == 0.0);
    CHECK(origin.cn == 1.0);
    CHECK(origin.dn == 1.0);

    CHECK_THROWS_AS(jacobi_elliptic(std::nan(""), EllipticModulus(0.5)),
                    std::domain_error);
    CHECK_THROWS_AS(jacobi_elliptic(INFINITY, EllipticModulus(0.5)), std::domain_error);
}

TEST_CASE("jacobi elliptic identities over the modulus range") {
    for (const double kv : {0.0, 0.5, 0.9, 0.99, 1.0 - 1e-10}) {
        const EllipticModulus k(kv);
        const double quarter =
            kv < 1.0 ? complete_elliptic_k(k) : 0.5 * M_PI;
        double worst1 = 0.0, worst2 = 0.0;
        for (int i = 0; i < 10000; ++i) {
            const double u = -10.0 * quarter +
                             20.0 * quarter * (static_cast<double>(i) + 0.5) / 10000.0;
            const auto j = jacobi_elliptic(u, k);
            worst1 = std::max(worst1, std::abs(j.sn * j.sn + j.cn * j.cn - 1.0));
            worst2 = std::max(worst2,
                              std::abs(j.dn * j.dn + k.k2() * j.sn * j.sn - 1.0));
        }
        CHECK(worst1 <= 1e-12);
        CHECK(worst2 <= 1e-12);
    }
}

TEST_CASE("jacobi elliptic quarter-period values and periodicity") {
    const EllipticModulus k(0.9);
    const double quarter = complete_elliptic_k(k);
    const auto at_k = jacobi_elliptic(quarter, k);
    CHECK(at_k.sn == Catch::Approx(1.0).margin(1e-10));
    CHECK(at_k.cn == Catch::Approx(0.0).margin(1e-10));
    CHECK(at_k.dn == Catch::Approx(k.complement()).margin(1e-10));

    for (const double kv : {0.3, 0.9, 0.99}) {
        const EllipticModulus m(kv);
        const double kk = complete_elliptic_k(m);
        for (const double u : {-5.2, 0.7, 3.1, 17.9}) {
            const auto a = jacobi_elliptic(u, m);
            const auto b = jacobi_elliptic(u + 4.0 * kk, m);
            const auto c = jacobi_elliptic(u + 2.0 * kk, m);
            CHECK(std::abs(a.sn - b.sn) <= 1e-11);
            CHECK(std::abs(a.cn - b.cn) <= 1e-11);
            CHECK(std::abs(a.dn - b.dn) <= 1e-11);
            CHECK(std::abs(a.dn - c.dn) <= 1e-11);  // dn has period 2K
        }
    }
}

TEST_CASE("jacobi elliptic derivative consistency") {
    const double h = 1e-5;
    for (const double kv : {0.2, 0.6, 0.95}) {
        const EllipticModulus k(kv);
        for (const double u : {-2.3, 0.4, 1.9, 6.1}) {
            const auto jm = jacobi_elliptic(u - h, k);
            const auto jp = jacobi_elliptic(u + h, k);
            const auto j = jacobi_elliptic(u, k);
            CHECK(std::abs((jp.sn - jm.sn) / (2.0 * h) - j.cn * j.dn) <= 1e-7);
            CHECK(std::abs((jp.cn - jm.cn) / (2.0 * h) + j.sn * j.dn) <= 1e-7);
            CHECK(std::abs((jp.dn - jm.dn) / (2.0 * h) + k.k2() * j.sn * j.cn) <= 1e-7);
        }
    }
}
