#pragma once

#include <cmath>
#include <stdexcept>

#include "quadrature.hpp"

namespace elastica::elliptic {

inline constexpr double kPi = 3.141592653589793238462643383279502884;

// Elliptic modulus k in [0, 1].
struct Modulus {
    double k;
    explicit Modulus(double k_) : k(k_) {
        if (!(k_ >= 0.0 && k_ <= 1.0))
            throw std::domain_error("elliptic modulus must lie in [0, 1]");
    }
};

inline Modulus inv_sqrt2() { return Modulus(1.0 / std::sqrt(2.0)); }

struct JacobiTriple {
    double sn;
    double cn;
    double dn;
};

// Complete elliptic integral of the first kind by arithmetic-geometric mean:
// K(k) = pi / (2 agm(1, sqrt(1-k^2))).
inline double complete_K(Modulus mod) {
    const double k = mod.k;
    if (k == 1.0) throw std::domain_error("complete_K diverges at k = 1");
    double a = 1.0, b = std::sqrt((1.0 - k) * (1.0 + k));
    while (a - b > 1e-17 * a) {
        const double an = 0.5 * (a + b);
        b = std::sqrt(a * b);
        a = an;
    }
    return kPi / (2.0 * a);
}

namespace detail {

// Incomplete integral of the first kind, A(phi) = int_0^phi (1-k^2 sin^2)^{-1/2}.
inline double amplitude_integral(double phi, double k2, double tol = 1e-13) {
    return adaptive_simpson(
        [k2](double t) {
            const double s = std::sin(t);
            return 1.0 / std::sqrt(1.0 - k2 * s * s);
        },
        0.0, phi, tol);
}

}  // namespace detail

// Jacobi sn/cn/dn at argument x, computed by inverting the amplitude integral.
// The argument is reduced modulo the 4K period in extended precision first.
inline JacobiTriple jacobi(double x, Modulus mod) {
    if (!std::isfinite(x)) throw std::domain_error("jacobi: non-finite argument");
    const double k = mod.k;
    if (k == 1.0) {
        // degenerate period: sn = tanh, cn = dn = sech
        const double c = 1.0 / std::cosh(x);
        return {std::tanh(x), c, c};
    }
    const double k2 = k * k;
    const double K = complete_K(mod);

    // fold x into [0, K] with sign bookkeeping: long double keeps the phase
    // honest out to ~100 periods
    const long double P = 4.0L * static_cast<long double>(K);
    long double xr = std::fmod(static_cast<long double>(x), P);
    if (xr < 0.0L) xr += P;
    double sgn_sn = 1.0, sgn_cn = 1.0;
    if (xr >= 2.0L * static_cast<long double>(K)) {
        xr -= 2.0L * static_cast<long double>(K);
        sgn_sn = -sgn_sn;
        sgn_cn = -sgn_cn;
    }
    double u = static_cast<double>(xr);
    if (u > K) {
        u = static_cast<double>(2.0L * static_cast<long double>(K) - xr);
        sgn_cn = -sgn_cn;
    }

    // bracketed Newton for phi with incremental quadrature accumulation
    double phi;
    if (u <= 0.0) {
        phi = 0.0;
    } else if (u >= K) {
        phi = 0.5 * kPi;
    } else {
        double lo = 0.0, hi = 0.5 * kPi;
        phi = (u / K) * 0.5 * kPi;
        double A = detail::amplitude_integral(phi, k2);
        for (int i = 0; i < 80; ++i) {
            const double r = A - u;
            if (std::abs(r) < 5e-14) break;
            if (r > 0.0)
                hi = phi;
            else
                lo = phi;
            const double s = std::sin(phi);
            double next = phi - r * std::sqrt(1.0 - k2 * s * s);
            if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
            A += adaptive_simpson(
                [k2](double t) {
                    const double st = std::sin(t);
                    return 1.0 / std::sqrt(1.0 - k2 * st * st);
                },
                phi, next, 1e-14);
            phi = next;
        }
    }

    const double s = std::sin(phi), c = std::cos(phi);
    return {sgn_sn * s, sgn_cn * c, std::sqrt(1.0 - k2 * s * s)};
}

// F(r) = int_0^r sqrt(1-t^2) / sqrt(1-t^2/2) dt, the horizontal-coordinate
// primitive of the rectangular elastica. Substituting t = sin(a) removes the
// square-root endpoint behavior: F(r) = int_0^{asin r} cos^2 a / sqrt(1 - sin^2(a)/2) da.
inline double incomplete_F_primitive(double r) {
    if (!(r >= -1.0 && r <= 1.0))
        throw std::domain_error("incomplete_F_primitive: argument outside [-1, 1]");
    const double sign = r < 0.0 ? -1.0 : 1.0;
    const double upper = std::asin(std::abs(r));
    const double val = adaptive_simpson(
        [](double a) {
            const double s = std::sin(a);
            const double c2 = 1.0 - s * s;
            return c2 / std::sqrt(1.0 - 0.5 * s * s);
        },
        0.0, upper, 1e-13);
    return sign * val;
}

struct PaperConstants {
    double c_star;        // int_0^{pi/2} sqrt(cos p) dp
    double h_star;        // 2 / c_star
    double theta_star;    // arctan(h_star)
    double K_half_sqrt2;  // K(1/sqrt 2)
};

// The sqrt(cos) endpoint singularity is removed by cos(p) = cos^2(q), which
// turns the integrand into the smooth 2 cos^2 q / sqrt(1 + cos^2 q).
inline PaperConstants paper_constants() {
    const double c_star = adaptive_simpson(
        [](double q) {
            const double c = std::cos(q);
            return 2.0 * c * c / std::sqrt(1.0 + c * c);
        },
        0.0, 0.5 * kPi, 1e-14);
    PaperConstants pc;
    pc.c_star = c_star;
    pc.h_star = 2.0 / c_star;
    pc.theta_star = std::atan(pc.h_star);
    pc.K_half_sqrt2 = complete_K(inv_sqrt2());
    return pc;
}

}  // namespace elastica::elliptic
