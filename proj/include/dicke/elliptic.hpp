// elliptic.hpp — real-argument elliptic kernel: K(k) and Jacobi sn/cn/dn.
//
// K(k) uses the arithmetic-geometric mean; sn/cn/dn use the descending
// Landen (Gauss) transformation with backward recurrence. Both are
// quadratically convergent and dependency-free.

#pragma once

#include <array>
#include <cmath>
#include <stdexcept>
#include <string>

namespace dicke {

// Elliptic modulus k in [0, 1]. The complementary modulus squared
// k'^2 = (1-k)(1+k) is precomputed at construction; near k = 1 callers may
// construct from k'^2 directly so that moduli closer to 1 than double
// spacing allows remain representable.
class EllipticModulus {
  public:
    explicit EllipticModulus(double k) {
        if (!(k >= 0.0 && k <= 1.0))
            throw std::domain_error("elliptic modulus k must lie in [0, 1], got " +
                                    std::to_string(k));
        k_ = k;
        kp2_ = (1.0 - k) * (1.0 + k);
    }

    // Construct from the complementary modulus squared k'^2 = 1 - k^2.
    static EllipticModulus from_complement_sq(double kp2) {
        if (!(kp2 >= 0.0 && kp2 <= 1.0))
            throw std::domain_error("k'^2 must lie in [0, 1], got " + std::to_string(kp2));
        EllipticModulus m(0.0);
        m.kp2_ = kp2;
        m.k_ = std::sqrt(1.0 - kp2);
        return m;
    }

    double k() const { return k_; }
    double k2() const { return k_ * k_; }
    double complement_sq() const { return kp2_; }      // k'^2
    double complement() const { return std::sqrt(kp2_); }  // k'
    bool is_one() const { return kp2_ == 0.0; }
    bool is_zero() const { return k_ == 0.0; }

  private:
    double k_;
    double kp2_;
};

// Complete elliptic integral of the first kind, K(k), by AGM iteration.
// Diverges logarithmically as k -> 1; k = 1 is rejected.
inline double complete_elliptic_k(const EllipticModulus& m) {
    if (m.is_one())
        throw std::domain_error("complete_elliptic_k: divergent quarter period at k = 1");
    double a = 1.0;
    double b = m.complement();
    for (int i = 0; i < 64; ++i) {
        const double an = 0.5 * (a + b);
        const double bn = std::sqrt(a * b);
        a = an;
        b = bn;
        if (std::abs(a - b) <= 1e-17 * a) break;
    }
    return M_PI / (2.0 * a);
}

struct JacobiTriple {
    double sn;
    double cn;
    double dn;
};

namespace detail {

// Descending-Landen/AGM evaluation of sn, cn, dn for 0 < k < 1.
// Backward recurrence after the AGM scale chain; accuracy is quadratic in
// the truncation threshold, so 1e-8 yields near machine precision.
inline JacobiTriple jacobi_agm(double u, double kp2) {
    constexpr double kTrunc = 1e-8;
    std::array<double, 16> em{};
    std::array<double, 16> en{};
    double emc = kp2;
    double a = 1.0;
    double c = 0.0;
    int l = 0;
    for (int i = 0; i < 16; ++i) {
        l = i;
        em[static_cast<std::size_t>(i)] = a;
        emc = std::sqrt(emc);
        en[static_cast<std::size_t>(i)] = emc;
        c = 0.5 * (a + emc);
        if (std::abs(a - emc) <= kTrunc * a) break;
        emc *= a;
        a = c;
    }
    const double phi = c * u;
    double sn = std::sin(phi);
    double cn = std::cos(phi);
    double dn = 1.0;
    if (sn != 0.0) {
        double aa = cn / sn;
        c *= aa;
        for (int i = l; i >= 0; --i) {
            const double b = em[static_cast<std::size_t>(i)];
            aa *= c;
            c *= dn;
            dn = (en[static_cast<std::size_t>(i)] + aa) / (b + aa);
            aa = c / b;
        }
        const double s = 1.0 / std::sqrt(c * c + 1.0);
        sn = (sn >= 0.0) ? s : -s;
        cn = c * sn;
    }
    return {sn, cn, dn};
}

} // namespace detail

// Jacobi elliptic functions sn(u,k), cn(u,k), dn(u,k), evaluated in one
// pass. Degenerate moduli return the exact trigonometric/hyperbolic limits.
// For 0 < k < 1 the argument is reduced modulo 4K before the Landen descent
// so accuracy is preserved at large |u|.
inline JacobiTriple jacobi_elliptic(double u, const EllipticModulus& m) {
    if (!std::isfinite(u))
        throw std::domain_error("jacobi_elliptic: non-finite argument");
    if (m.is_zero()) return {std::sin(u), std::cos(u), 1.0};
    if (m.is_one()) {
        const double sech = 1.0 / std::cosh(u);
        return {std::tanh(u), sech, sech};
    }

    const double quarter = complete_elliptic_k(m);
    // Reduce to [0, 4K), then fold into [0, K] via quarter-period symmetries.
    double v = std::fmod(u, 4.0 * quarter);
    if (v < 0.0) v += 4.0 * quarter;
    double sign_sn = 1.0;
    double sign_cn = 1.0;
    if (v >= 2.0 * quarter) {   // sn(u+2K) = -sn, cn(u+2K) = -cn, dn periodic
        v -= 2.0 * quarter;
        sign_sn = -sign_sn;
        sign_cn = -sign_cn;
    }
    if (v > quarter) {          // sn(2K-u) = sn, cn(2K-u) = -cn, dn(2K-u) = dn
        v = 2.0 * quarter - v;
        sign_cn = -sign_cn;
    }

    JacobiTriple j = detail::jacobi_agm(v, m.complement_sq());
    j.sn *= sign_sn;
    j.cn *= sign_cn;
    return j;
}

} // namespace dicke
