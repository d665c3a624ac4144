#pragma once

#include <algorithm>
#include <cstddef>
#include <utility>
#include <vector>

#include "hilbert/error.hpp"
#include "hilbert/geometry.hpp"

namespace hilbert {

// An open, bounded, strictly convex polygonal domain. Construction goes
// through validate_polygon, which normalizes the vertex order to
// counterclockwise and rejects anything that is not strictly convex, so the
// rest of the library can assume a clean boundary representation.
class ConvexPolygon {
public:
    struct Edge {
        Vec2 origin;        // vertex k
        Vec2 dir;           // vertex k+1 - vertex k
        Vec2 inward_normal; // unit (l2) normal pointing into the domain
    };

    std::size_t size() const { return vertices_.size(); }
    const std::vector<Vec2>& vertices() const { return vertices_; }
    Vec2 vertex(std::size_t k) const { return vertices_[k % vertices_.size()]; }
    const std::vector<Edge>& edges() const { return edges_; }

    double l1_diameter() const { return l1_diameter_; }

    // Points closer to the boundary than this are treated as not interior.
    double interior_margin() const { return eps_in_; }

    // Signed distance from p to the nearest edge supporting line; positive
    // inside, negative outside.
    double boundary_clearance(Vec2 p) const {
        double worst = std::numeric_limits<double>::infinity();
        for (const Edge& e : edges_) {
            worst = std::min(worst, dot(e.inward_normal, p - e.origin));
        }
        return worst;
    }

    // Strict interior test. No clamping: a point within `margin` of the
    // boundary is simply reported outside.
    bool contains_interior(Vec2 p, double margin) const {
        if (!is_finite(p)) return false;
        return boundary_clearance(p) > margin;
    }

    bool contains_interior(Vec2 p) const { return contains_interior(p, eps_in_); }

    void require_interior(Vec2 p, const char* role) const {
        if (!contains_interior(p)) {
            throw Error(ErrorKind::PointNotInterior,
                        std::string(role) + " must lie strictly inside the domain");
        }
    }

    // Area centroid; used to suggest a recentering translation.
    Vec2 centroid() const {
        double area2 = 0.0;
        Vec2 acc{0.0, 0.0};
        const std::size_t n = vertices_.size();
        for (std::size_t k = 0; k < n; ++k) {
            const Vec2 a = vertices_[k];
            const Vec2 b = vertices_[(k + 1) % n];
            const double w = cross(a, b);
            area2 += w;
            acc = acc + w * (a + b);
        }
        return acc / (3.0 * area2);
    }

    void bounding_box(Vec2& lo, Vec2& hi) const {
        lo = hi = vertices_.front();
        for (const Vec2& v : vertices_) {
            lo.x = std::min(lo.x, v.x);
            lo.y = std::min(lo.y, v.y);
            hi.x = std::max(hi.x, v.x);
            hi.y = std::max(hi.y, v.y);
        }
    }

    friend ConvexPolygon validate_polygon(std::vector<Vec2> vertices);

private:
    ConvexPolygon() = default;

    std::vector<Vec2> vertices_;
    std::vector<Edge> edges_;
    double l1_diameter_ = 0.0;
    double eps_in_ = 0.0;
};

// Validates a vertex list as a strictly convex polygon. Either orientation is
// accepted; clockwise input is reversed. Duplicate or collinear consecutive
// vertices are Degenerate, a sign change in the corner turns is NotConvex.
inline ConvexPolygon validate_polygon(std::vector<Vec2> vertices) {
    if (vertices.size() < 3) {
        throw Error(ErrorKind::TooFewVertices, "need at least 3 vertices, got " +
                                                   std::to_string(vertices.size()));
    }
    for (const Vec2& v : vertices) {
        if (!is_finite(v)) throw Error(ErrorKind::Degenerate, "non-finite vertex coordinate");
    }

    const std::size_t n = vertices.size();

    double area2 = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        area2 += cross(vertices[k], vertices[(k + 1) % n]);
    }
    if (area2 == 0.0) throw Error(ErrorKind::Degenerate, "zero signed area");
    if (area2 < 0.0) std::reverse(vertices.begin(), vertices.end());

    for (std::size_t k = 0; k < n; ++k) {
        const Vec2 e0 = vertices[(k + 1) % n] - vertices[k];
        const Vec2 e1 = vertices[(k + 2) % n] - vertices[(k + 1) % n];
        if (e0 == Vec2{0.0, 0.0}) throw Error(ErrorKind::Degenerate, "duplicate vertex");
        const double turn = cross(e0, e1);
        if (turn == 0.0) throw Error(ErrorKind::Degenerate, "collinear consecutive vertices");
        if (turn < 0.0) {
            throw Error(ErrorKind::NotConvex,
                        "reflex corner at vertex " + std::to_string((k + 1) % n));
        }
    }

    ConvexPolygon poly;
    poly.vertices_ = std::move(vertices);
    poly.edges_.reserve(n);
    for (std::size_t k = 0; k < n; ++k) {
        const Vec2 o = poly.vertices_[k];
        const Vec2 d = poly.vertices_[(k + 1) % n] - o;
        const Vec2 left{-d.y, d.x}; // interior is on the left of a CCW edge
        poly.edges_.push_back({o, d, left / l2_norm(left)});
    }

    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            poly.l1_diameter_ = std::max(poly.l1_diameter_,
                                         l1_norm(poly.vertices_[i] - poly.vertices_[j]));
        }
    }
    poly.eps_in_ = 1e-12 * poly.l1_diameter_;
    return poly;
}

// Image of a polygon under an invertible linear map (revalidated, so the
// orientation is restored if the map flips it).
inline ConvexPolygon map_polygon(const Mat2& m, const ConvexPolygon& poly) {
    std::vector<Vec2> mapped;
    mapped.reserve(poly.size());
    for (const Vec2& v : poly.vertices()) mapped.push_back(m.apply(v));
    return validate_polygon(std::move(mapped));
}

} // namespace hilbert
