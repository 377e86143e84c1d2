#pragma once

#include <cmath>

namespace elastica {

struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    Vec2() = default;
    Vec2(double x_, double y_) : x(x_), y(y_) {}

    Vec2 operator+(const Vec2& o) const { return {x + o.x, y + o.y}; }
    Vec2 operator-(const Vec2& o) const { return {x - o.x, y - o.y}; }
    Vec2 operator*(double c) const { return {c * x, c * y}; }
    Vec2 operator/(double c) const { return {x / c, y / c}; }
    Vec2& operator+=(const Vec2& o) { x += o.x; y += o.y; return *this; }
    Vec2& operator-=(const Vec2& o) { x -= o.x; y -= o.y; return *this; }
};

inline Vec2 operator*(double c, const Vec2& v) { return {c * v.x, c * v.y}; }

inline double dot(const Vec2& a, const Vec2& b) { return a.x * b.x + a.y * b.y; }

// z-component of the 3D cross product; positive when b is counterclockwise from a
inline double cross(const Vec2& a, const Vec2& b) { return a.x * b.y - a.y * b.x; }

inline double norm(const Vec2& v) { return std::hypot(v.x, v.y); }

inline Vec2 normalized(const Vec2& v) {
    const double n = norm(v);
    return {v.x / n, v.y / n};
}

// counterclockwise rotation through angle phi
inline Vec2 rotate(const Vec2& v, double phi) {
    const double c = std::cos(phi), s = std::sin(phi);
    return {c * v.x - s * v.y, s * v.x + c * v.y};
}

// counterclockwise rotation through pi/2 (tangent -> normal)
inline Vec2 perp(const Vec2& v) { return {-v.y, v.x}; }

// signed angle from a to b in (-pi, pi]
inline double signed_angle(const Vec2& a, const Vec2& b) {
    return std::atan2(cross(a, b), dot(a, b));
}

}  // namespace elastica
