#pragma once

#include <array>
#include <cmath>

#include "hilbert/error.hpp"
#include "hilbert/geometry.hpp"

namespace hilbert {

// The model domains used throughout: the open unit square S = (-1,1)^2, its
// triangular slice D = { |y| < x < 1 }, and the open cone Z = { |Y| < X }.
// The coordinatewise atanh map sends S to the plane and D onto Z; this header
// carries that map, its tangent, and the sector bookkeeping that identifies
// which square edges a ray from a point of D exits through.

inline bool in_unit_square(Point2 m) {
    return std::abs(m.x) < 1.0 && std::abs(m.y) < 1.0;
}

inline bool in_triangle_slice(Point2 m) {
    return std::abs(m.y) < m.x && m.x < 1.0;
}

inline bool in_cone(Point2 p) {
    return std::abs(p.y) < p.x;
}

namespace detail {

// atanh blows past double range as |x| -> 1; beyond this guard the result is
// no longer meaningful, so the map refuses instead of returning huge values.
constexpr double atanh_guard = 1.0 - 1e-15;

inline double guarded_atanh(double x, const char* axis) {
    if (!(std::abs(x) <= atanh_guard)) {
        throw Error(ErrorKind::OutOfDomain,
                    std::string(axis) + " coordinate too close to the square boundary");
    }
    return std::atanh(x);
}

} // namespace detail

// Coordinatewise atanh: S -> R^2.
inline Point2 atanh_map(Point2 m) {
    return {detail::guarded_atanh(m.x, "x"), detail::guarded_atanh(m.y, "y")};
}

// Coordinatewise tanh: R^2 -> S. Round-trip accuracy through atanh_map decays
// like e^(2X) ulps per coordinate (about 1e-12 near |X| = 5.5, 1e-9 near 9);
// past |X| ~ 17.6 the result is inside atanh_map's boundary guard, and tanh
// rounds to exactly 1 past |X| ~ 19, so round trips there are meaningless.
inline Point2 atanh_map_inv(Point2 p) {
    if (!is_finite(p)) throw Error(ErrorKind::OutOfDomain, "non-finite point");
    return {std::tanh(p.x), std::tanh(p.y)};
}

// Tangent map of atanh_map at m: V = (l, u) goes to (l/(1-x^2), u/(1-y^2)).
// The denominators are computed factored, (1-x)(1+x), which stays a few ulps
// accurate all the way to the boundary where the expanded form loses half its
// digits to cancellation.
inline Vector2 atanh_map_tangent(Point2 m, Vector2 v) {
    if (!(std::abs(m.x) <= detail::atanh_guard && std::abs(m.y) <= detail::atanh_guard)) {
        throw Error(ErrorKind::OutOfDomain, "base point too close to the square boundary");
    }
    return {v.x / ((1.0 - m.x) * (1.0 + m.x)), v.y / ((1.0 - m.y) * (1.0 + m.y))};
}

// ---------------------------------------------------------------------------
// Sectors
// ---------------------------------------------------------------------------

struct SectorPair {
    Vec2 v1;
    Vec2 v2;
};

struct SectorCoords {
    double s = 0.0; // coefficient of v1
    double t = 0.0; // coefficient of v2
};

// Coordinates of V in the (generally non orthogonal) basis (v1, v2), via the
// two determinant ratios. V lies in the closed sector spanned by v1 and v2
// exactly when both coordinates are nonnegative.
inline SectorCoords sector_coordinates(const SectorPair& basis, Vector2 v) {
    const double den = cross(basis.v1, basis.v2);
    if (den == 0.0 || !std::isfinite(den)) {
        throw Error(ErrorKind::DegenerateBasis, "sector basis vectors are collinear");
    }
    return {cross(v, basis.v2) / den, cross(basis.v1, v) / den};
}

inline bool sector_contains(const SectorPair& basis, Vector2 v, double slack = 1e-12) {
    const SectorCoords c = sector_coordinates(basis, v);
    return c.s >= -slack && c.t >= -slack;
}

// ---------------------------------------------------------------------------
// Zone classification over the triangle slice
// ---------------------------------------------------------------------------

// At a base point m of the triangle slice, four reference vectors point at
// the square's corners:
//   V1 = (1-x, 1-y),  V2 = (-1+x, 1+y),  V3 = (-1-x, 1-y),  V4 = (-1-x, -1-y).
// The sectors they span (plus the antipodal copies) cover every direction,
// and within each sector the exit edges of the ray, hence the closed form of
// the Finsler norm, are fixed.
enum class ZoneLabel { Z12, Z23, Z34, Z4m1, Zm12, Zm23, Zm34, Z1m4 };

inline const char* to_string(ZoneLabel z) {
    switch (z) {
        case ZoneLabel::Z12: return "Z12";
        case ZoneLabel::Z23: return "Z23";
        case ZoneLabel::Z34: return "Z34";
        case ZoneLabel::Z4m1: return "Z4m1";
        case ZoneLabel::Zm12: return "Zm12";
        case ZoneLabel::Zm23: return "Zm23";
        case ZoneLabel::Zm34: return "Zm34";
        case ZoneLabel::Z1m4: return "Z1m4";
    }
    return "?";
}

inline ZoneLabel antipodal_zone(ZoneLabel z) {
    switch (z) {
        case ZoneLabel::Z12: return ZoneLabel::Zm12;
        case ZoneLabel::Z23: return ZoneLabel::Zm23;
        case ZoneLabel::Z34: return ZoneLabel::Zm34;
        case ZoneLabel::Z4m1: return ZoneLabel::Z1m4;
        case ZoneLabel::Zm12: return ZoneLabel::Z12;
        case ZoneLabel::Zm23: return ZoneLabel::Z23;
        case ZoneLabel::Zm34: return ZoneLabel::Z34;
        case ZoneLabel::Z1m4: return ZoneLabel::Z4m1;
    }
    return ZoneLabel::Z12;
}

inline std::array<Vec2, 4> corner_vectors(Point2 m) {
    return {Vec2{1.0 - m.x, 1.0 - m.y}, Vec2{-1.0 + m.x, 1.0 + m.y},
            Vec2{-1.0 - m.x, 1.0 - m.y}, Vec2{-1.0 - m.x, -1.0 - m.y}};
}

inline SectorPair zone_sector(Point2 m, ZoneLabel z) {
    const auto c = corner_vectors(m);
    switch (z) {
        case ZoneLabel::Z12: return {c[0], c[1]};
        case ZoneLabel::Z23: return {c[1], c[2]};
        case ZoneLabel::Z34: return {c[2], c[3]};
        case ZoneLabel::Z4m1: return {c[3], -c[0]};
        case ZoneLabel::Zm12: return {-c[0], -c[1]};
        case ZoneLabel::Zm23: return {-c[1], -c[2]};
        case ZoneLabel::Zm34: return {-c[2], -c[3]};
        case ZoneLabel::Z1m4: return {-c[3], c[0]};
    }
    return {c[0], c[1]};
}

// First zone (in declaration order) whose closed sector holds V, so ties on
// a shared ray resolve to the lower-numbered zone. V is normalized before the
// sector tests to keep the 1e-12 slack meaningful at any magnitude.
inline ZoneLabel classify_zone(Point2 m, Vector2 v) {
    if (!in_triangle_slice(m)) {
        throw Error(ErrorKind::OutOfDomain, "base point must lie in the triangle slice");
    }
    if (v == Vec2{0.0, 0.0}) throw Error(ErrorKind::ZeroVector, "cannot classify a zero vector");

    const Vec2 w = v / l1_norm(v);
    constexpr ZoneLabel order[] = {ZoneLabel::Z12,  ZoneLabel::Z23,  ZoneLabel::Z34,
                                   ZoneLabel::Z4m1, ZoneLabel::Zm12, ZoneLabel::Zm23,
                                   ZoneLabel::Zm34, ZoneLabel::Z1m4};
    for (ZoneLabel z : order) {
        if (sector_contains(zone_sector(m, z), w)) return z;
    }
    // The eight sectors cover the plane; unreachable for finite input.
    throw Error(ErrorKind::OutOfDomain, "direction escaped every zone");
}

// ---------------------------------------------------------------------------
// Closed-form Finsler norm on the square
// ---------------------------------------------------------------------------

// F_S at (m, V) through the per-zone exit edges. Writing V = (l, u):
//   Z12 : both rays exit horizontal edges        -> u / (1 - y^2)
//   Z23 : backward x = 1, forward y = 1          -> ( -l/(1-x) + u/(1-y) ) / 2
//   Z34 : both rays exit vertical edges          -> -l / (1 - x^2)
//   Z4m1: backward x = 1, forward y = -1         -> ( -l/(1-x) - u/(1+y) ) / 2
// Antipodal zones delegate to their positive counterpart with -V; the norm is
// reversible on the square.
inline double finsler_square(Point2 m, Vector2 v) {
    if (v == Vec2{0.0, 0.0}) {
        if (!in_triangle_slice(m)) {
            throw Error(ErrorKind::OutOfDomain, "base point must lie in the triangle slice");
        }
        return 0.0;
    }
    ZoneLabel z = classify_zone(m, v);
    switch (z) {
        case ZoneLabel::Zm12:
        case ZoneLabel::Zm23:
        case ZoneLabel::Zm34:
        case ZoneLabel::Z1m4:
            v = -v;
            z = antipodal_zone(z);
            break;
        default:
            break;
    }
    const double x = m.x, y = m.y;
    switch (z) {
        // 1 - x^2 factored as (1-x)(1+x): near the boundary the factored form
        // is exact to a few ulps while the expanded one cancels catastrophically.
        case ZoneLabel::Z12: return v.y / ((1.0 - y) * (1.0 + y));
        case ZoneLabel::Z23: return 0.5 * (-v.x / (1.0 - x) + v.y / (1.0 - y));
        case ZoneLabel::Z34: return -v.x / ((1.0 - x) * (1.0 + x));
        case ZoneLabel::Z4m1: return 0.5 * (-v.x / (1.0 - x) - v.y / (1.0 + y));
        default: break;
    }
    throw Error(ErrorKind::OutOfDomain, "unreachable zone");
}

// ---------------------------------------------------------------------------
// The two-sided comparison with the tangent map
// ---------------------------------------------------------------------------

struct SandwichResult {
    double finsler = 0.0;  // F_S(m, V)
    double image = 0.0;    // l1 norm of the tangent-map image of V
    double ratio = 0.0;    // image / finsler, in [1, 2] up to rounding
};

// The l1 norm of the tangent-map image pinches F_S between itself and twice
// itself. Equality on the left is attained (m = (1/2, 0), V = (0, 1)); the
// right constant is approached as m -> 0 with V -> (1, 1), so both constants
// are optimal.
inline SandwichResult sandwich_check(Point2 m, Vector2 v) {
    if (v == Vec2{0.0, 0.0}) throw Error(ErrorKind::ZeroVector, "sandwich needs a direction");
    SandwichResult r;
    r.finsler = finsler_square(m, v);
    const Vec2 img = atanh_map_tangent(m, v);
    r.image = l1_norm(img);
    r.ratio = r.image / r.finsler;
    return r;
}

} // namespace hilbert
