#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace elastica {

namespace detail {

template <class F>
double simpson_step(const F& f, double a, double fa, double b, double fb,
                    double fm, double whole, double tol, int depth, int max_depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = f(lm), frm = f(rm);
    const double h = b - a;
    const double left = (h / 12.0) * (fa + 4.0 * flm + fm);
    const double right = (h / 12.0) * (fm + 4.0 * frm + fb);
    const double delta = left + right - whole;
    if (depth >= max_depth || std::abs(delta) <= 15.0 * tol)
        return left + right + delta / 15.0;
    return simpson_step(f, a, fa, m, fm, flm, left, 0.5 * tol, depth + 1, max_depth) +
           simpson_step(f, m, fm, b, fb, frm, right, 0.5 * tol, depth + 1, max_depth);
}

}  // namespace detail

// Adaptive Simpson with Richardson correction, absolute tolerance.
template <class F>
double adaptive_simpson(const F& f, double a, double b, double tol = 1e-12,
                        int max_depth = 40) {
    if (a == b) return 0.0;
    const double fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
    if (!std::isfinite(fa) || !std::isfinite(fb) || !std::isfinite(fm))
        throw std::domain_error("adaptive_simpson: non-finite integrand value");
    const double whole = ((b - a) / 6.0) * (fa + 4.0 * fm + fb);
    return detail::simpson_step(f, a, fa, b, fb, fm, whole, tol, 0, max_depth);
}

// Composite Simpson over equally spaced samples; n must be odd.
inline double composite_simpson(const std::vector<double>& values, double dx) {
    const std::size_t n = values.size();
    if (n < 3 || n % 2 == 0)
        throw std::invalid_argument("composite_simpson: needs an odd number of samples >= 3");
    double odd = 0.0, even = 0.0;
    for (std::size_t i = 1; i + 1 < n; i += 2) odd += values[i];
    for (std::size_t i = 2; i + 1 < n; i += 2) even += values[i];
    return (dx / 3.0) * (values.front() + values.back() + 4.0 * odd + 2.0 * even);
}

inline double composite_trapezoid(const std::vector<double>& values, double dx) {
    if (values.size() < 2)
        throw std::invalid_argument("composite_trapezoid: needs at least 2 samples");
    double s = 0.5 * (values.front() + values.back());
    for (std::size_t i = 1; i + 1 < values.size(); ++i) s += values[i];
    return s * dx;
}

}  // namespace elastica
