#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdio>
#include <limits>
#include <string>
#include <vector>

#include "hilbert/error.hpp"
#include "hilbert/geometry.hpp"
#include "hilbert/polygon.hpp"

namespace hilbert {

// ---------------------------------------------------------------------------
// Boundary ray crossing
// ---------------------------------------------------------------------------

struct RayExit {
    double t = 0.0;        // smallest positive ray parameter reaching the boundary
    Vec2 hit;              // p + t * v
    std::size_t edge = 0;  // index of the boundary edge that was hit
};

// Walks every edge, solves the 1-D crossing against its supporting line and
// keeps the nearest hit whose edge parameter is inside [-1e-12, 1 + 1e-12].
// The slack admits vertex hits from either adjacent edge; the two candidates
// then agree on t to rounding.
inline RayExit ray_exit(const ConvexPolygon& domain, Point2 p, Vector2 v) {
    if (v == Vec2{0.0, 0.0}) {
        throw Error(ErrorKind::ZeroVector, "ray direction must be nonzero");
    }
    domain.require_interior(p, "ray base point");

    constexpr double edge_slack = 1e-12;
    RayExit best;
    best.t = std::numeric_limits<double>::infinity();

    const auto& edges = domain.edges();
    for (std::size_t k = 0; k < edges.size(); ++k) {
        const Vec2 w = edges[k].origin - p;
        const double denom = cross(v, edges[k].dir);
        if (denom == 0.0) continue; // ray parallel to this edge
        const double t = cross(w, edges[k].dir) / denom;
        if (t <= 0.0 || t >= best.t) continue;
        const double along = cross(w, v) / denom;
        if (along < -edge_slack || along > 1.0 + edge_slack) continue;
        best.t = t;
        best.hit = p + t * v;
        best.edge = k;
    }

    if (!std::isfinite(best.t)) {
        // Interior base point guarantees a forward crossing; reaching this
        // means the polygon data is corrupt.
        throw Error(ErrorKind::Degenerate, "no boundary crossing found for interior ray");
    }
    return best;
}

// ---------------------------------------------------------------------------
// Chords and the cross ratio
// ---------------------------------------------------------------------------

// The full chord through two interior points: a is the boundary hit on the
// p side, b the one on the q side, and p, q sit at parameters s < t of the
// segment a -> b.
struct ChordParam {
    Vec2 a;
    Vec2 b;
    double s = 0.0;
    double t = 0.0;
    std::size_t edge_a = 0;
    std::size_t edge_b = 0;
};

inline ChordParam chord(const ConvexPolygon& domain, Point2 p, Point2 q) {
    if (p == q) throw Error(ErrorKind::CoincidentPoints, "chord needs two distinct points");
    domain.require_interior(q, "chord endpoint");

    const Vec2 u = q - p;
    const RayExit back = ray_exit(domain, p, -u);
    const RayExit fwd = ray_exit(domain, p, u);

    ChordParam ch;
    ch.a = back.hit;
    ch.b = fwd.hit;
    ch.edge_a = back.edge;
    ch.edge_b = fwd.edge;
    ch.s = dominant_axis_param(p, ch.a, ch.b);
    ch.t = dominant_axis_param(q, ch.a, ch.b);
    return ch;
}

// [a, p, q, b] for the chord parameters: ((1-s)/s) * (t/(1-t)). Always > 1
// for a valid chord; equals 1 when the two points coincide (s = t).
inline double cross_ratio(const ChordParam& ch) {
    if (!(ch.s > 0.0 && ch.s <= ch.t && ch.t < 1.0)) {
        throw Error(ErrorKind::BadConfig, "chord parameters must satisfy 0 < s <= t < 1");
    }
    return ((1.0 - ch.s) / ch.s) * (ch.t / (1.0 - ch.t));
}

// ---------------------------------------------------------------------------
// Distance, Finsler norm, lengths, balls
// ---------------------------------------------------------------------------

// Half the log of the chord cross ratio. The two arguments are ordered
// canonically before the chord is built, so swapping them reproduces the
// same value bit for bit; without this the two independently computed chords
// disagree by far more than the advertised symmetry bound near the boundary.
inline double hilbert_distance(const ConvexPolygon& domain, Point2 p, Point2 q) {
    if (p == q) {
        domain.require_interior(p, "distance argument");
        return 0.0;
    }
    if (lex_less(q, p)) std::swap(p, q);
    return 0.5 * std::log(cross_ratio(chord(domain, p, q)));
}

// F(p, v) = (1/2) (1/t_minus + 1/t_plus) where t_plus and t_minus are the
// ray parameters at which p + t v and p - t v leave the domain. Equals the
// norm-weighted harmonic form (1/2)|v|(1/|p-p_minus| + 1/|p-p_plus|) for any
// norm, and is the metric derivative of hilbert_distance along v.
inline double finsler_norm(const ConvexPolygon& domain, Point2 p, Vector2 v) {
    if (v == Vec2{0.0, 0.0}) {
        domain.require_interior(p, "base point");
        return 0.0;
    }
    const double t_plus = ray_exit(domain, p, v).t;
    const double t_minus = ray_exit(domain, p, -v).t;
    return 0.5 * (1.0 / t_minus + 1.0 / t_plus);
}

namespace detail {

// Globally adaptive Simpson quadrature: a worst-first queue of subintervals,
// each carrying the signed Richardson defect of its two-half refinement, is
// refined until the summed |defect| fits the error budget 15 * tol. Budgeting
// the error globally instead of per subinterval matters here: the chord
// speeds this integrates pick up evaluation jitter near the domain boundary
// (position rounding amplified by the 1/distance profile), and a per-interval
// acceptance race against that jitter floor degenerates into near-full
// binary trees, while in the global sum the jitter contributes only
// jitter * width and refinement always makes progress.
template <typename F>
double adaptive_simpson(const F& f, double lo, double hi, double tol) {
    struct Piece {
        double a, b;                  // subinterval; midpoint recomputed as needed
        double fa, flm, fm, frm, fb;  // f at a, (a+m)/2, m, (m+b)/2, b
        double s2;                    // refined Simpson value (left half + right half)
        double delta;                 // s2 minus the unrefined Simpson value
        long long seq;                // insertion order, for deterministic ties
    };
    const auto worse = [](const Piece& x, const Piece& y) {
        const double ax = std::abs(x.delta), ay = std::abs(y.delta);
        return ax != ay ? ax < ay : x.seq > y.seq;  // max-heap on |delta|, FIFO on ties
    };
    const auto bail = [&](const char* why) {
        char buf[32];
        std::snprintf(buf, sizeof(buf), "%.3e", tol);
        throw Error(ErrorKind::ToleranceNotReached,
                    std::string("adaptive Simpson ") + why + " at tolerance " + buf);
    };

    long long seq = 0;
    long long evals = 0;
    const auto make = [&](double a, double fa, double m, double fm, double b, double fb,
                          double s1) {
        const double flm = f(0.5 * (a + m));
        const double frm = f(0.5 * (m + b));
        evals += 2;
        const double sl = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
        const double sr = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
        const Piece piece{a, b, fa, flm, fm, frm, fb, sl + sr, sl + sr - s1, seq++};
        // A non-finite sample (a pole right on an evaluation node) would
        // otherwise poison the error sum as NaN and end the loop silently.
        if (!std::isfinite(piece.s2) || !std::isfinite(piece.delta)) {
            bail("met a non-finite integrand value");
        }
        return piece;
    };

    const double fa = f(lo), fb = f(hi), fm = f(0.5 * (lo + hi));
    const double s1 = (hi - lo) / 6.0 * (fa + 4.0 * fm + fb);
    // An error budget below the ulp of the estimate itself can never be
    // certified; report that immediately instead of burning the budget.
    if (15.0 * tol < std::numeric_limits<double>::epsilon() * std::abs(s1)) {
        bail("was asked for less than one ulp of the integral");
    }

    std::vector<Piece> heap;
    heap.push_back(make(lo, fa, 0.5 * (lo + hi), fm, hi, fb, s1));
    double err_sum = std::abs(heap.front().delta);

    constexpr long long kMaxEvals = 400000;
    while (err_sum > 15.0 * tol) {
        if (evals >= kMaxEvals) bail("exhausted its evaluation budget");
        std::pop_heap(heap.begin(), heap.end(), worse);
        const Piece p = heap.back();
        heap.pop_back();
        const double m = 0.5 * (p.a + p.b);
        // A worst-offender too narrow to bisect means the budget sits below
        // what rounding admits (or the integrand is not integrable).
        if (!(p.a < m && m < p.b)) bail("hit an unsplittable subinterval");
        err_sum -= std::abs(p.delta);
        const double sl = (m - p.a) / 6.0 * (p.fa + 4.0 * p.flm + p.fm);
        const double sr = (p.b - m) / 6.0 * (p.fm + 4.0 * p.frm + p.fb);
        const Piece l = make(p.a, p.fa, 0.5 * (p.a + m), p.flm, m, p.fm, sl);
        const Piece r = make(m, p.fm, 0.5 * (m + p.b), p.frm, p.b, p.fb, sr);
        err_sum += std::abs(l.delta) + std::abs(r.delta);
        heap.push_back(l);
        std::push_heap(heap.begin(), heap.end(), worse);
        heap.push_back(r);
        std::push_heap(heap.begin(), heap.end(), worse);
    }

    double total = 0.0;
    for (const Piece& p : heap) total += p.s2 + p.delta / 15.0;
    return total;
}

} // namespace detail

// Length of the straight segment [p, q] in the Finsler metric, by adaptive
// Simpson quadrature to absolute tolerance `tol`. Straight segments are
// geodesics here, so this agrees with hilbert_distance up to quadrature and
// rounding error; the verification suites lean on exactly that identity.
inline double segment_length(const ConvexPolygon& domain, Point2 p, Point2 q, double tol) {
    if (!(tol > 0.0) || !std::isfinite(tol)) {
        throw Error(ErrorKind::BadConfig, "quadrature tolerance must be positive");
    }
    domain.require_interior(p, "segment endpoint");
    domain.require_interior(q, "segment endpoint");
    if (p == q) return 0.0;

    const Vec2 u = q - p;
    auto speed = [&](double t) { return finsler_norm(domain, lerp(p, q, t), u); };
    return detail::adaptive_simpson(speed, 0.0, 1.0, tol);
}

// Boundary polyline of the metric ball around `center`, one vertex per
// direction at equally spaced angles. Along each direction the distance grows
// strictly from 0 toward infinity at the boundary, so a bisection on the ray
// parameter pins the crossing of radius r to 1e-9.
inline std::vector<Point2> metric_ball(const ConvexPolygon& domain, Point2 center, double r,
                                       int n_dirs) {
    if (!(r > 0.0) || !std::isfinite(r)) {
        throw Error(ErrorKind::BadConfig, "ball radius must be positive and finite");
    }
    if (n_dirs < 8) {
        throw Error(ErrorKind::BadConfig, "need at least 8 directions, got " +
                                              std::to_string(n_dirs));
    }
    domain.require_interior(center, "ball center");

    constexpr double pi = 3.14159265358979323846;
    std::vector<Point2> ring;
    ring.reserve(static_cast<std::size_t>(n_dirs));

    for (int j = 0; j < n_dirs; ++j) {
        const double theta = 2.0 * pi * static_cast<double>(j) / static_cast<double>(n_dirs);
        const Vec2 dir{std::cos(theta), std::sin(theta)};

        double hi = ray_exit(domain, center, dir).t;
        // Pull the bracket end inward until the probe point passes the strict
        // interior test.
        while (!domain.contains_interior(center + hi * dir)) hi *= 1.0 - 1e-9;
        if (hilbert_distance(domain, center, center + hi * dir) < r) {
            throw Error(ErrorKind::PointNotInterior,
                        "radius " + std::to_string(r) +
                            " is not reachable within the interior margin");
        }

        double lo = 0.0;
        double u = 0.5 * hi;
        for (int iter = 0; iter < 200; ++iter) {
            const double d = hilbert_distance(domain, center, center + u * dir);
            if (std::abs(d - r) <= 1e-9) break;
            if (d < r) lo = u; else hi = u;
            u = 0.5 * (lo + hi);
        }
        ring.push_back(center + u * dir);
    }
    return ring;
}

} // namespace hilbert
