#pragma once

#include <cmath>
#include <limits>

#include "hilbert/error.hpp"

namespace hilbert {

// Plane points and tangent vectors share one representation; the distinction
// is carried by the aliases below, the way small geometry codebases usually
// do it.
struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    friend constexpr Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
    friend constexpr Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
    friend constexpr Vec2 operator-(Vec2 a) { return {-a.x, -a.y}; }
    friend constexpr Vec2 operator*(double s, Vec2 a) { return {s * a.x, s * a.y}; }
    friend constexpr Vec2 operator*(Vec2 a, double s) { return {s * a.x, s * a.y}; }
    friend constexpr Vec2 operator/(Vec2 a, double s) { return {a.x / s, a.y / s}; }
    friend constexpr bool operator==(Vec2 a, Vec2 b) { return a.x == b.x && a.y == b.y; }
};

using Point2 = Vec2;
using Vector2 = Vec2;

constexpr double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
constexpr double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }

inline double l1_norm(Vec2 v) { return std::abs(v.x) + std::abs(v.y); }
inline double linf_norm(Vec2 v) { return std::max(std::abs(v.x), std::abs(v.y)); }
inline double l2_norm(Vec2 v) { return std::hypot(v.x, v.y); }

inline bool is_finite(Vec2 v) { return std::isfinite(v.x) && std::isfinite(v.y); }

constexpr Vec2 lerp(Vec2 a, Vec2 b, double t) {
    return {(1.0 - t) * a.x + t * b.x, (1.0 - t) * a.y + t * b.y};
}

// Strict weak order used wherever an unordered pair needs one canonical
// orientation (notably the distance chord).
constexpr bool lex_less(Vec2 a, Vec2 b) {
    return a.x < b.x || (a.x == b.x && a.y < b.y);
}

// Parameter of p along the segment a -> b, read off the coordinate in which
// b - a is largest. Keeps the division well conditioned for any direction.
inline double dominant_axis_param(Vec2 p, Vec2 a, Vec2 b) {
    const Vec2 d = b - a;
    if (std::abs(d.x) >= std::abs(d.y)) {
        return (p.x - a.x) / d.x;
    }
    return (p.y - a.y) / d.y;
}

// 2x2 matrix, row major.
struct Mat2 {
    double a = 1.0, b = 0.0;
    double c = 0.0, d = 1.0;

    constexpr Vec2 apply(Vec2 v) const { return {a * v.x + b * v.y, c * v.x + d * v.y}; }

    constexpr double det() const { return a * d - b * c; }

    friend constexpr Mat2 operator*(const Mat2& m, const Mat2& n) {
        return {m.a * n.a + m.b * n.c, m.a * n.b + m.b * n.d,
                m.c * n.a + m.d * n.c, m.c * n.b + m.d * n.d};
    }

    static constexpr Mat2 identity() { return {}; }

    // Matrix with the given columns.
    static constexpr Mat2 from_columns(Vec2 c1, Vec2 c2) {
        return {c1.x, c2.x, c1.y, c2.y};
    }
};

inline Mat2 inverse(const Mat2& m) {
    const double det = m.det();
    if (det == 0.0 || !std::isfinite(det)) {
        throw Error(ErrorKind::DegenerateBasis, "matrix is singular");
    }
    return {m.d / det, -m.b / det, -m.c / det, m.a / det};
}

// Operator norm for maps between l1-normed planes: the largest absolute
// column sum.
inline double opnorm_l1(const Mat2& m) {
    return std::max(std::abs(m.a) + std::abs(m.c), std::abs(m.b) + std::abs(m.d));
}

// Exact l1 distance from p to the segment [a, b]. The distance is piecewise
// linear and convex in the segment parameter, so the minimum sits at one of
// at most four candidate parameters: the endpoints and the parameters where
// either coordinate difference changes sign.
inline double l1_dist_point_segment(Vec2 p, Vec2 a, Vec2 b) {
    const Vec2 d = b - a;
    double best = std::min(l1_norm(p - a), l1_norm(p - b));
    auto consider = [&](double t) {
        if (t > 0.0 && t < 1.0) best = std::min(best, l1_norm(p - lerp(a, b, t)));
    };
    if (d.x != 0.0) consider((p.x - a.x) / d.x);
    if (d.y != 0.0) consider((p.y - a.y) / d.y);
    return best;
}

} // namespace hilbert
