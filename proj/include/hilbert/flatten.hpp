#pragma once

#include <cmath>
#include <cstddef>
#include <sstream>
#include <vector>

#include "hilbert/error.hpp"
#include "hilbert/geometry.hpp"
#include "hilbert/metric.hpp"
#include "hilbert/polygon.hpp"
#include "hilbert/square_model.hpp"

namespace hilbert {

// Fan decomposition of a convex polygon around the origin: triangle k is
// spanned by vertices v_k and v_{k+1}, and the linear map L_k carries that
// spine onto the corners (1,-1) and (1,1) of the standard square, i.e. the
// triangle onto the square's triangular slice. Conjugating the coordinatewise
// atanh map by L_k on each triangle glues into a global homeomorphism of the
// polygon onto the plane that is bi-Lipschitz for the Hilbert metric; this
// class carries the maps and the bookkeeping, the constants live in
// constants.hpp.
class FanDecomposition {
public:
    const ConvexPolygon& polygon() const { return polygon_; }
    std::size_t size() const { return polygon_.size(); }
    Vec2 spine(std::size_t k) const { return polygon_.vertex(k); }
    const Mat2& sector_map(std::size_t k) const { return maps_[k % maps_.size()]; }
    const Mat2& sector_map_inv(std::size_t k) const { return inv_maps_[k % inv_maps_.size()]; }

    // Index of the half-open fan triangle holding p: sector coordinates
    // (s, t) in the spine basis with s, t >= 0 and s + t < 1. The triangles
    // are scanned in order, so a point on a shared spine ray reports the
    // smaller of the two adjacent indices (and the origin reports 0).
    std::size_t locate_triangle(Point2 p) const {
        polygon_.require_interior(p, "fan query point");
        const std::size_t n = size();
        for (std::size_t k = 0; k < n; ++k) {
            const SectorCoords c =
                sector_coordinates({spine(k), spine(k + 1)}, p);
            if (c.s >= -1e-12 && c.t >= -1e-12 && c.s + c.t < 1.0) return k;
        }
        throw Error(ErrorKind::PointNotInterior, "point escaped every fan triangle");
    }

    // The flattening map on triangle k, exposed so the cross-ray consistency
    // of adjacent triangles can be checked directly.
    Point2 forward_in_triangle(std::size_t k, Point2 p) const {
        return sector_map_inv(k).apply(atanh_map(sector_map(k).apply(p)));
    }

    // Global flattening map: polygon interior -> plane.
    Point2 forward(Point2 p) const { return forward_in_triangle(locate_triangle(p), p); }

    // Inverse map: plane -> polygon interior. Refuses inputs whose square
    // coordinates exceed 20 in sup norm, where tanh is saturated to within an
    // ulp of 1 and a round trip would silently land on the boundary.
    Point2 inverse(Point2 img) const {
        if (!is_finite(img)) throw Error(ErrorKind::OutOfDomain, "non-finite image point");
        const std::size_t k = locate_sector(img);
        const Vec2 w = sector_map(k).apply(img);
        if (linf_norm(w) > 20.0) {
            std::ostringstream msg;
            msg << "image magnitude " << linf_norm(w) << " exceeds the saturation bound 20";
            throw Error(ErrorKind::SaturationOverflow, msg.str());
        }
        return sector_map_inv(k).apply(atanh_map_inv(w));
    }

    // Derivative of the flattening map at p, defined away from the spine
    // rays (the map is smooth on each open triangle and only continuous
    // across rays).
    Mat2 jacobian(Point2 p) const {
        polygon_.require_interior(p, "jacobian base point");
        const double guard = 1e-12 * polygon_.l1_diameter();
        for (std::size_t k = 0; k < size(); ++k) {
            if (l1_dist_point_segment(p, {0.0, 0.0}, spine(k)) < guard) {
                throw Error(ErrorKind::OnFanRay,
                            "point within " + std::to_string(guard) + " of spine ray " +
                                std::to_string(k));
            }
        }
        const std::size_t k = locate_triangle(p);
        const Vec2 w = sector_map(k).apply(p);
        const Mat2 stretch{1.0 / ((1.0 - w.x) * (1.0 + w.x)), 0.0, 0.0,
                           1.0 / ((1.0 - w.y) * (1.0 + w.y))};
        return sector_map_inv(k) * stretch * sector_map(k);
    }

    friend FanDecomposition build_fan(ConvexPolygon polygon);

private:
    explicit FanDecomposition(ConvexPolygon polygon) : polygon_(std::move(polygon)) {}

    // Sector of the full plane (no s + t < 1 cap) holding the direction of
    // img; every plane point belongs to some spine sector because the origin
    // is interior. Normalized first so the 1e-12 slack is scale free.
    std::size_t locate_sector(Point2 img) const {
        if (img == Vec2{0.0, 0.0}) return 0;
        const Vec2 w = img / l1_norm(img);
        const std::size_t n = size();
        for (std::size_t k = 0; k < n; ++k) {
            if (sector_contains({spine(k), spine(k + 1)}, w)) return k;
        }
        throw Error(ErrorKind::OutOfDomain, "image direction escaped every sector");
    }

    ConvexPolygon polygon_;
    std::vector<Mat2> maps_;
    std::vector<Mat2> inv_maps_;
};

// Builds the fan around the origin. The origin must be strictly interior (the
// error suggests the translation that recenters the polygon); triangles whose
// spines subtend less than 1e-10 radians at the origin are refused because
// their sector maps are effectively singular.
inline FanDecomposition build_fan(ConvexPolygon polygon) {
    if (!polygon.contains_interior({0.0, 0.0})) {
        const Vec2 c = polygon.centroid();
        std::ostringstream msg;
        msg << "origin must be strictly interior; translate by centroid (" << c.x << ", "
            << c.y << ")";
        throw Error(ErrorKind::OriginNotInterior, msg.str());
    }

    FanDecomposition fan(std::move(polygon));
    const std::size_t n = fan.polygon_.size();
    fan.maps_.reserve(n);
    fan.inv_maps_.reserve(n);

    // Both corners of the square slice as a column matrix and its inverse;
    // the sector maps are B * V^-1 and V * B^-1 so that the inverse map sends
    // (1,-1), (1,1) back to the spines exactly, not through a second matrix
    // inversion.
    const Mat2 corner = Mat2::from_columns({1.0, -1.0}, {1.0, 1.0});
    const Mat2 corner_inv = inverse(corner);

    for (std::size_t k = 0; k < n; ++k) {
        const Vec2 vk = fan.polygon_.vertex(k);
        const Vec2 vk1 = fan.polygon_.vertex(k + 1);
        const double angle = std::atan2(std::abs(cross(vk, vk1)), dot(vk, vk1));
        if (!(angle >= 1e-10)) {
            throw Error(ErrorKind::NearDegenerateTriangle,
                        "triangle " + std::to_string(k) + " subtends " +
                            std::to_string(angle) + " rad at the origin");
        }
        const Mat2 spines = Mat2::from_columns(vk, vk1);
        fan.maps_.push_back(corner * inverse(spines));
        fan.inv_maps_.push_back(spines * corner_inv);
    }
    return fan;
}

} // namespace hilbert
