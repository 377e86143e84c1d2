#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "quadrature.hpp"
#include "vec2.hpp"

namespace elastica {

inline constexpr double kTwoPi = 6.283185307179586476925286766559005768;

// |kappa| below this counts as a vanishing-curvature node; callers are
// expected to work with curves normalized to unit scale.
inline constexpr double kKappaZero = 1e-12;
inline constexpr double kOriginRadius = 1e-12;

struct CurveNode {
    double s = 0.0;
    Vec2 position;
    Vec2 tangent;
    double curvature = 0.0;
};

// A plane curve sampled at arclength nodes, carrying analytic tangent and
// curvature data. Immutable after construction; construction validates the
// arclength parametrization.
class ArclengthCurve {
  public:
    explicit ArclengthCurve(std::vector<CurveNode> nodes) : nodes_(std::move(nodes)) {
        if (nodes_.size() < 2)
            throw std::invalid_argument("ArclengthCurve: need at least 2 nodes");
        double kappa_max = 0.0;
        for (const auto& n : nodes_) kappa_max = std::fmax(kappa_max, std::abs(n.curvature));
        for (std::size_t i = 0; i < nodes_.size(); ++i) {
            if (std::abs(norm(nodes_[i].tangent) - 1.0) > 1e-10)
                throw std::invalid_argument("ArclengthCurve: non-unit tangent at node " +
                                            std::to_string(i));
            if (i) {
                const double ds = nodes_[i].s - nodes_[i - 1].s;
                if (!(ds > 0.0))
                    throw std::invalid_argument("ArclengthCurve: arclength not increasing");
                const double chord = norm(nodes_[i].position - nodes_[i - 1].position);
                if (std::abs(chord - ds) > 0.5 * kappa_max * ds * ds + 1e-9)
                    throw std::invalid_argument(
                        "ArclengthCurve: chord/arclength mismatch at node " + std::to_string(i));
            }
        }
        generic_ = true;
        for (std::size_t i = 1; i < nodes_.size(); ++i)
            if (norm(nodes_[i].position) < kOriginRadius) generic_ = false;
    }

    const std::vector<CurveNode>& nodes() const { return nodes_; }
    const CurveNode& node(std::size_t i) const { return nodes_.at(i); }
    std::size_t size() const { return nodes_.size(); }
    bool generic() const { return generic_; }
    double length() const { return nodes_.back().s - nodes_.front().s; }

  private:
    std::vector<CurveNode> nodes_;
    bool generic_ = false;
};

struct OsculatingDisk {
    Vec2 center;    // evolute point e(s)
    double radius;  // 1 / |kappa|
};

struct AngleSample {
    double s = 0.0;
    double omega = 0.0;    // unwrapped polar tangential angle
    double omega_s = 0.0;  // from the derivative identity, not differencing
};

struct AngleTrace {
    std::vector<AngleSample> samples;
    std::size_t first_node = 0;  // curve node index of samples[0]
};

// Frenet reconstruction: integrate theta' = kappa, gamma' = (cos, sin) theta
// with classical RK4 at uniform step; node data taken from the analytic inputs.
inline ArclengthCurve from_curvature(const std::function<double(double)>& kappa,
                                     double length, Vec2 start, Vec2 start_tangent,
                                     std::size_t n_samples) {
    if (!(length > 0.0)) throw std::invalid_argument("from_curvature: length must be positive");
    if (n_samples < 16) throw std::invalid_argument("from_curvature: need n_samples >= 16");
    const double ds = length / static_cast<double>(n_samples - 1);
    double theta = std::atan2(start_tangent.y, start_tangent.x);
    Vec2 p = start;
    std::vector<CurveNode> nodes(n_samples);
    auto eval = [&kappa](double s) {
        const double k = kappa(s);
        if (!std::isfinite(k)) throw std::invalid_argument("from_curvature: non-finite curvature");
        return k;
    };
    for (std::size_t i = 0; i < n_samples; ++i) {
        const double s = static_cast<double>(i) * ds;
        nodes[i] = {s, p, {std::cos(theta), std::sin(theta)}, eval(s)};
        if (i + 1 == n_samples) break;
        // RK4 on (theta, x, y)
        const double k1 = eval(s);
        const double k2 = eval(s + 0.5 * ds);
        const double k4 = eval(s + ds);
        const double t1 = theta;
        const double t2 = theta + 0.5 * ds * k1;
        const double t3 = theta + 0.5 * ds * k2;
        const double t4 = theta + ds * k2;
        p.x += (ds / 6.0) * (std::cos(t1) + 2.0 * std::cos(t2) + 2.0 * std::cos(t3) + std::cos(t4));
        p.y += (ds / 6.0) * (std::sin(t1) + 2.0 * std::sin(t2) + 2.0 * std::sin(t3) + std::sin(t4));
        theta += (ds / 6.0) * (k1 + 4.0 * k2 + k4);
    }
    return ArclengthCurve(std::move(nodes));
}

// Arclength sampling of a graph y = f(x); node data is analytic, the x(s)
// reparametrization is integrated with RK4.
inline ArclengthCurve from_graph(const std::function<double(double)>& f,
                                 const std::function<double(double)>& fp,
                                 const std::function<double(double)>& fpp,
                                 double x0, double x1, std::size_t n_samples) {
    if (!(x1 > x0)) throw std::invalid_argument("from_graph: empty interval");
    const double total = adaptive_simpson(
        [&fp](double x) { return std::hypot(1.0, fp(x)); }, x0, x1, 1e-13);
    const double ds = total / static_cast<double>(n_samples - 1);
    auto dxds = [&fp](double x) { return 1.0 / std::hypot(1.0, fp(x)); };
    double x = x0;
    std::vector<CurveNode> nodes(n_samples);
    for (std::size_t i = 0; i < n_samples; ++i) {
        const double slope = fp(x);
        const double g = std::hypot(1.0, slope);
        nodes[i] = {static_cast<double>(i) * ds,
                    {x, f(x)},
                    {1.0 / g, slope / g},
                    fpp(x) / (g * g * g)};
        if (i + 1 == n_samples) break;
        const double k1 = dxds(x);
        const double k2 = dxds(x + 0.5 * ds * k1);
        const double k3 = dxds(x + 0.5 * ds * k2);
        const double k4 = dxds(x + ds * k3);
        x += (ds / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    }
    return ArclengthCurve(std::move(nodes));
}

// Generalized evolute kappa*gamma + N; reduces to N where the curvature vanishes.
inline Vec2 be_vector(const ArclengthCurve& curve, std::size_t i) {
    const CurveNode& n = curve.node(i);
    return n.curvature * n.position + perp(n.tangent);
}

inline OsculatingDisk osculating_disk(const ArclengthCurve& curve, std::size_t i) {
    const CurveNode& n = curve.node(i);
    if (std::abs(n.curvature) < kKappaZero)
        throw std::domain_error("osculating_disk: undefined where curvature vanishes");
    return {n.position + perp(n.tangent) / n.curvature, 1.0 / std::abs(n.curvature)};
}

// Unwrapped polar tangential angle along the curve. The first node may sit at
// the origin, in which case the trace starts at the second node. The branch is
// fixed so the first computed value lies in (-pi, pi]; omega_s comes from the
// derivative identity omega_s = |gamma|^{-2} (gamma . be).
inline AngleTrace polar_tangential_angle(const ArclengthCurve& curve) {
    std::size_t first = 0;
    if (norm(curve.node(0).position) < kOriginRadius) first = 1;
    for (std::size_t i = std::max<std::size_t>(first, 1); i < curve.size(); ++i)
        if (norm(curve.node(i).position) < kOriginRadius)
            throw std::domain_error("polar_tangential_angle: node " + std::to_string(i) +
                                    " lies at the origin (curve not generic)");
    AngleTrace trace;
    trace.first_node = first;
    trace.samples.reserve(curve.size() - first);
    double prev_raw = 0.0, omega = 0.0;
    for (std::size_t i = first; i < curve.size(); ++i) {
        const CurveNode& n = curve.node(i);
        const Vec2 X = normalized(n.position);
        const double raw = signed_angle(X, n.tangent);
        if (i == first) {
            omega = raw;  // branch: first value in (-pi, pi]
        } else {
            omega += std::remainder(raw - prev_raw, kTwoPi);
        }
        prev_raw = raw;
        const double r2 = dot(n.position, n.position);
        const double omega_s = n.curvature + dot(n.position, perp(n.tangent)) / r2;
        trace.samples.push_back({n.s, omega, omega_s});
    }
    return trace;
}

enum class SignClass { PositiveOmegaS, NegativeOmegaS, Tangential };

// Geometric sign characterization: sign of gamma.N where kappa vanishes,
// sign of kappa * (gamma.e) otherwise; cross-checked against the derivative
// identity before returning.
inline SignClass sign_classification(const ArclengthCurve& curve, std::size_t i,
                                     double zero_band = 1e-10) {
    const CurveNode& n = curve.node(i);
    if (norm(n.position) < kOriginRadius)
        throw std::domain_error("sign_classification: node at origin");
    const Vec2 N = perp(n.tangent);
    double q;  // equals omega_s * |gamma|^2 in exact arithmetic
    if (std::abs(n.curvature) < kKappaZero) {
        q = dot(n.position, N);
    } else {
        const Vec2 e = n.position + N / n.curvature;
        q = n.curvature * dot(n.position, e);
    }
    const double r2 = dot(n.position, n.position);
    const double omega_s = n.curvature + dot(n.position, N) / r2;
    if (q > zero_band && omega_s * r2 < -zero_band)
        throw std::logic_error("sign_classification: characterization disagrees with identity");
    if (q < -zero_band && omega_s * r2 > zero_band)
        throw std::logic_error("sign_classification: characterization disagrees with identity");
    if (q > zero_band) return SignClass::PositiveOmegaS;
    if (q < -zero_band) return SignClass::NegativeOmegaS;
    return SignClass::Tangential;
}

struct TaitKneserReport {
    bool nested = false;
    bool precondition_ok = false;
    std::size_t bad_node = 0;       // where monotonicity/sign breaks, if it does
    std::size_t pairs_checked = 0;
    double min_margin = 0.0;
    std::optional<std::pair<std::size_t, std::size_t>> first_violation;
};

// Pairwise strict nesting of osculating disks for curves of strictly monotone
// curvature without sign change. Pairs at index gap 1 are exempt: their
// margins are O(ds^3) and drown in discretization.
inline TaitKneserReport tait_kneser_check(const ArclengthCurve& curve,
                                          double margin_tol = 1e-10) {
    TaitKneserReport rep;
    const auto& nodes = curve.nodes();
    const bool increasing = nodes[1].curvature > nodes[0].curvature;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        const double k = nodes[i].curvature;
        if (std::abs(k) < kKappaZero || (k > 0) != (nodes[0].curvature > 0) ||
            (i && ((nodes[i].curvature > nodes[i - 1].curvature) != increasing ||
                   nodes[i].curvature == nodes[i - 1].curvature))) {
            rep.bad_node = i;
            return rep;
        }
    }
    rep.precondition_ok = true;
    std::vector<OsculatingDisk> disks(nodes.size());
    for (std::size_t i = 0; i < nodes.size(); ++i) disks[i] = osculating_disk(curve, i);
    // kappa*kappa_s > 0: disks shrink with s, later inside earlier; < 0: reverse
    const bool shrinking = (nodes[0].curvature > 0) == increasing;
    rep.nested = true;
    rep.min_margin = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i + 2 < nodes.size(); ++i) {
        for (std::size_t j = i + 2; j < nodes.size(); ++j) {
            const auto& outer = shrinking ? disks[i] : disks[j];
            const auto& inner = shrinking ? disks[j] : disks[i];
            const double margin =
                outer.radius - (norm(outer.center - inner.center) + inner.radius);
            rep.min_margin = std::fmin(rep.min_margin, margin);
            ++rep.pairs_checked;
            if (margin <= margin_tol && rep.nested) {
                rep.nested = false;
                rep.first_violation = {i, j};
            }
        }
    }
    return rep;
}

}  // namespace elastica
