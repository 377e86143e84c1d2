#pragma once

#include <cmath>
#include <stdexcept>

namespace elastica {

// Plain bisection on a bracketing interval, to absolute bracket width x_tol.
template <class F>
double bisect(const F& f, double a, double b, double x_tol = 1e-13,
              int max_iter = 200) {
    double fa = f(a), fb = f(b);
    if (fa == 0.0) return a;
    if (fb == 0.0) return b;
    if (fa * fb > 0.0) throw std::invalid_argument("bisect: root not bracketed");
    for (int i = 0; i < max_iter && (b - a) > x_tol; ++i) {
        const double m = 0.5 * (a + b);
        const double fm = f(m);
        if (fm == 0.0) return m;
        if (fa * fm < 0.0) {
            b = m;
            fb = fm;
        } else {
            a = m;
            fa = fm;
        }
    }
    return 0.5 * (a + b);
}

// Brent-style bisection/secant/inverse-quadratic hybrid.
template <class F>
double brent(const F& f, double a, double b, double x_tol = 1e-13,
             int max_iter = 200) {
    double fa = f(a), fb = f(b);
    if (fa == 0.0) return a;
    if (fb == 0.0) return b;
    if (fa * fb > 0.0) throw std::invalid_argument("brent: root not bracketed");
    if (std::abs(fa) < std::abs(fb)) {
        std::swap(a, b);
        std::swap(fa, fb);
    }
    double c = a, fc = fa, d = b - a;
    bool mflag = true;
    for (int i = 0; i < max_iter; ++i) {
        if (fb == 0.0 || std::abs(b - a) <= x_tol) return b;
        double s;
        if (fa != fc && fb != fc) {
            s = a * fb * fc / ((fa - fb) * (fa - fc)) +
                b * fa * fc / ((fb - fa) * (fb - fc)) +
                c * fa * fb / ((fc - fa) * (fc - fb));
        } else {
            s = b - fb * (b - a) / (fb - fa);
        }
        const double lo = 0.25 * (3.0 * a + b);
        const bool out = (s < std::fmin(lo, b)) || (s > std::fmax(lo, b));
        if (out || (mflag && std::abs(s - b) >= 0.5 * std::abs(b - c)) ||
            (!mflag && std::abs(s - b) >= 0.5 * std::abs(c - d)) ||
            (mflag && std::abs(b - c) < x_tol) ||
            (!mflag && std::abs(c - d) < x_tol)) {
            s = 0.5 * (a + b);
            mflag = true;
        } else {
            mflag = false;
        }
        const double fs = f(s);
        d = c;
        c = b;
        fc = fb;
        if (fa * fs < 0.0) {
            b = s;
            fb = fs;
        } else {
            a = s;
            fa = fs;
        }
        if (std::abs(fa) < std::abs(fb)) {
            std::swap(a, b);
            std::swap(fa, fb);
        }
    }
    return b;
}

// Newton iteration safeguarded by a bracket; falls back to bisection whenever
// the Newton step leaves [lo, hi]. f returns the residual, df its derivative.
template <class F, class DF>
double newton_bracketed(const F& f, const DF& df, double lo, double hi,
                        double x0, double f_tol = 1e-13, int max_iter = 100) {
    double x = x0;
    double flo = f(lo);
    for (int i = 0; i < max_iter; ++i) {
        const double fx = f(x);
        if (std::abs(fx) <= f_tol) return x;
        if (flo * fx < 0.0)
            hi = x;
        else
            lo = x;
        const double d = df(x);
        double next = x - fx / d;
        if (!(next > lo && next < hi) || d == 0.0) next = 0.5 * (lo + hi);
        if (hi - lo < 1e-16 * (1.0 + std::abs(x))) return next;
        x = next;
    }
    return x;
}

}  // namespace elastica
