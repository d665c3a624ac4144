#pragma once

#include <chrono>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "hilbert/constants.hpp"
#include "hilbert/error.hpp"
#include "hilbert/flatten.hpp"
#include "hilbert/geometry.hpp"
#include "hilbert/io.hpp"
#include "hilbert/metric.hpp"
#include "hilbert/polygon.hpp"
#include "hilbert/rng.hpp"
#include "hilbert/square_model.hpp"

namespace hilbert {

// ---------------------------------------------------------------------------
// Verification suites: seeded property sweeps over every library invariant.
// Each suite produces a deterministic report; a failure is a named check plus
// a detail string with the offending numbers.
// ---------------------------------------------------------------------------

struct VerifyOptions {
    long long samples = 20000;
    std::uint64_t seed = 1;
    // Integration tolerance for the length-vs-distance comparison; the fixed
    // invariant tolerances (symmetry, zone slack, ...) are pinned and do not
    // scale with this knob.
    double tolerance = 1e-9;
};

struct CheckFailure {
    std::string check;
    std::string detail;
};

struct SuiteReport {
    std::string suite;
    long long samples = 0;
    std::uint64_t seed = 0;
    double tolerance = 0.0;
    long long failure_count = 0;
    std::vector<CheckFailure> failures; // first kMaxStoredFailures only
    nlohmann::ordered_json extrema = nlohmann::ordered_json::object();

    bool ok() const { return failure_count == 0; }
};

inline constexpr std::size_t kMaxStoredFailures = 50;

inline nlohmann::ordered_json to_json(const SuiteReport& r) {
    nlohmann::ordered_json j;
    j["suite"] = r.suite;
    j["samples"] = r.samples;
    j["seed"] = r.seed;
    j["tolerance"] = r.tolerance;
    j["failure_count"] = r.failure_count;
    j["failures"] = nlohmann::ordered_json::array();
    for (const CheckFailure& f : r.failures) {
        j["failures"].push_back({{"check", f.check}, {"detail", f.detail}});
    }
    j["extrema"] = r.extrema;
    return j;
}

namespace detail {

inline void fail(SuiteReport& r, std::string check, std::string detail) {
    ++r.failure_count;
    if (r.failures.size() < kMaxStoredFailures) {
        r.failures.push_back({std::move(check), std::move(detail)});
    }
}

inline void check(SuiteReport& r, bool ok, const std::string& name, const std::string& detail) {
    if (!ok) fail(r, name, detail);
}

inline Point2 sample_interior(SplitMix64& rng, const ConvexPolygon& poly, double margin) {
    Vec2 lo, hi;
    poly.bounding_box(lo, hi);
    for (;;) {
        const Point2 p{rng.uniform(lo.x, hi.x), rng.uniform(lo.y, hi.y)};
        if (poly.contains_interior(p, margin)) return p;
    }
}

// Random point of the wedge slice {|y| < x < 1}, kept away from the slice
// boundary (and hence the square's boundary) by the given margin.
inline Point2 sample_slice(SplitMix64& rng, double margin) {
    for (;;) {
        const double x = rng.uniform(0.0, 1.0);
        const double y = rng.uniform(-1.0, 1.0);
        if (x >= margin && x <= 1.0 - margin && std::abs(y) <= x * (1.0 - margin)) return {x, y};
    }
}

struct Extremum {
    double value = -std::numeric_limits<double>::infinity();
    void track(double v) { value = std::max(value, v); }
};

} // namespace detail

// The three stock domains used by the suites and the acceptance harness: the
// standard square, a regular pentagon, and an irregular hexagon. All contain
// the origin strictly.
inline std::vector<std::pair<std::string, ConvexPolygon>> builtin_domains() {
    std::vector<Vec2> pentagon;
    for (int k = 0; k < 5; ++k) {
        const double angle = std::numbers::pi * (0.5 + 0.4 * k);
        pentagon.push_back({std::cos(angle), std::sin(angle)});
    }
    return {
        {"square", standard_square()},
        {"pentagon", validate_polygon(pentagon)},
        {"hexagon", validate_polygon({{2.0, 0.0},
                                      {1.0, 1.5},
                                      {-0.8, 1.2},
                                      {-1.6, 0.3},
                                      {-1.2, -1.0},
                                      {0.5, -1.4}})},
    };
}

// ---------------------------------------------------------------------------
// Metric suite
// ---------------------------------------------------------------------------

// Checks the metric axioms and the Finsler-norm consistency properties on one
// polygon. `finsler_bias` exists for mutation testing: the value of
// finsler_norm is multiplied by it before the consistency checks, so any bias
// other than 1 must produce failures (the test suite verifies that a +1%
// bias is caught). The CLI always runs with bias 1.
inline void metric_checks(SuiteReport& out, const std::string& label, const ConvexPolygon& poly,
                          const VerifyOptions& opts, double finsler_bias = 1.0) {
    SplitMix64 rng(opts.seed);
    const double diam = poly.l1_diameter();
    const double margin = 1e-6 * diam;
    const double deep_margin = 1e-2 * diam; // for the difference-quotient check

    // Pinned invertible maps for the linear-invariance property.
    const std::vector<std::pair<std::string, Mat2>> maps = {
        {"stretch", {2.0, 1.0, 0.5, 3.0}},
        {"rotation", {0.8, -0.6, 0.6, 0.8}},
        {"shear", {1.0, 0.7, 0.0, 1.0}},
    };
    std::vector<ConvexPolygon> mapped;
    for (const auto& [name, L] : maps) mapped.push_back(map_polygon(L, poly));

    // Enlarged copy about the centroid: a strict superset, for monotonicity.
    const Point2 z = poly.centroid();
    std::vector<Vec2> grown;
    for (const Vec2& v : poly.vertices()) grown.push_back(z + 1.5 * (v - z));
    const ConvexPolygon superset = validate_polygon(std::move(grown));

    detail::Extremum max_sym, max_tri, max_lin, max_deriv, max_normform, max_mono, max_seg,
        max_chord, max_rayexit;
    const long long seg_stride = std::max<long long>(1, opts.samples / 200);

    for (long long i = 0; i < opts.samples; ++i) {
        const Point2 p = detail::sample_interior(rng, poly, margin);
        const Point2 q = detail::sample_interior(rng, poly, margin);
        const Point2 r = detail::sample_interior(rng, poly, margin);

        if (hilbert_distance(poly, p, p) != 0.0) {
            detail::fail(out, label + ".identity", "d(p,p) != 0 at p=(" + fmt17(p.x) + "," +
                                                       fmt17(p.y) + ")");
        }

        const double dpq = hilbert_distance(poly, p, q);
        const double dqp = hilbert_distance(poly, q, p);
        const double sym = std::abs(dpq - dqp) / (1.0 + dpq);
        max_sym.track(sym);
        if (sym > 1e-12) {
            detail::fail(out, label + ".symmetry", "defect " + fmt17(sym));
        }
        if (!(p == q) && !(dpq > 0.0)) {
            detail::fail(out, label + ".positivity", "d(p,q) = " + fmt17(dpq) + " for p != q");
        }

        const double tri = hilbert_distance(poly, p, r) - (dpq + hilbert_distance(poly, q, r));
        max_tri.track(tri);
        if (tri > 1e-9) {
            detail::fail(out, label + ".triangle", "defect " + fmt17(tri));
        }

        for (std::size_t m = 0; m < maps.size(); ++m) {
            const Mat2& L = maps[m].second;
            const double dl = hilbert_distance(mapped[m], L.apply(p), L.apply(q));
            const double defect = std::abs(dl - dpq) / (1.0 + dpq);
            max_lin.track(defect);
            if (defect > 1e-9) {
                detail::fail(out, label + ".linear_invariance",
                             maps[m].first + " defect " + fmt17(defect));
            }
        }

        // Finsler-norm consistency battery.
        const Vec2 v = rng.direction();
        const double f = finsler_norm(poly, p, v) * finsler_bias;

        const RayExit fwd = ray_exit(poly, p, v);
        const RayExit bwd = ray_exit(poly, p, -v);
        const double norm_form =
            0.5 * l1_norm(v) * (1.0 / l1_norm(p - bwd.hit) + 1.0 / l1_norm(p - fwd.hit));
        const double nf_rel = std::abs(f - norm_form) / norm_form;
        max_normform.track(nf_rel);
        // Recovering t * v as p - (p + t * v) cancels, so the hit-point form
        // carries a rounding error of order eps * |p| / t on its dominant
        // term; the tolerance budgets that on top of a flat floor.
        const double nf_tol = 1e-12 + 8.0 * std::numeric_limits<double>::epsilon() *
                                          (1.0 + l1_norm(p)) / std::min(fwd.t, bwd.t);
        if (nf_rel > nf_tol) {
            detail::fail(out, label + ".norm_form", "relative defect " + fmt17(nf_rel));
        }

        const double f_super = finsler_norm(superset, p, v);
        const double f_plain = finsler_bias == 1.0 ? f : f / finsler_bias;
        const double mono = (f_super - f_plain) / f_plain;
        max_mono.track(mono);
        if (mono > 1e-12) {
            detail::fail(out, label + ".monotonicity",
                         "superset norm exceeds by relative " + fmt17(mono));
        }

        if (poly.boundary_clearance(p) > deep_margin) {
            const double step = 1e-6;
            const double quotient = hilbert_distance(poly, p, p + step * v) / step;
            const double rel = std::abs(quotient - f) / f;
            max_deriv.track(rel);
            if (rel > 1e-4) {
                detail::fail(out, label + ".derivative", "relative defect " + fmt17(rel));
            }
        }

        if (i % 10 == 0 && !(p == q)) {
            const ChordParam ch = chord(poly, p, q);
            const double rec =
                std::max(l1_norm(lerp(ch.a, ch.b, ch.s) - p), l1_norm(lerp(ch.a, ch.b, ch.t) - q));
            const double rel = rec / (1.0 + std::max(l1_norm(p), l1_norm(q)));
            max_chord.track(rel);
            if (!(0.0 < ch.s && ch.s < ch.t && ch.t < 1.0) || rel > 1e-9) {
                detail::fail(out, label + ".chord_reconstruction",
                             "s=" + fmt17(ch.s) + " t=" + fmt17(ch.t) + " defect " + fmt17(rel));
            }
            const double exit_defect = std::abs(poly.boundary_clearance(fwd.hit));
            max_rayexit.track(exit_defect);
            if (exit_defect > 1e-12 * diam) {
                detail::fail(out, label + ".ray_exit_on_boundary", "defect " + fmt17(exit_defect));
            }
        }

        if (i % seg_stride == 0 && !(p == q)) {
            try {
                const double seg = segment_length(poly, p, q, opts.tolerance);
                const double defect = std::abs(seg - dpq);
                max_seg.track(defect);
                if (defect > opts.tolerance + 1e-9) {
                    detail::fail(out, label + ".segment_vs_distance", "defect " + fmt17(defect));
                }
            } catch (const Error& e) {
                detail::fail(out, label + ".segment_vs_distance", e.what());
            }
        }
    }

    auto& ex = out.extrema[label];
    ex["max_symmetry_defect"] = max_sym.value;
    ex["max_triangle_defect"] = max_tri.value;
    ex["max_linear_invariance_defect"] = max_lin.value;
    ex["max_norm_form_rel_defect"] = max_normform.value;
    ex["max_monotonicity_excess"] = max_mono.value;
    ex["max_derivative_rel_defect"] = max_deriv.value;
    ex["max_chord_reconstruction_defect"] = max_chord.value;
    ex["max_ray_exit_boundary_defect"] = max_rayexit.value;
    ex["max_segment_vs_distance_defect"] = max_seg.value;
}

inline void metric_suite(SuiteReport& out, const VerifyOptions& opts) {
    for (const auto& [label, poly] : builtin_domains()) {
        metric_checks(out, label, poly, opts);
    }
}

// ---------------------------------------------------------------------------
// Sandwich suite (the atanh map versus the square's Finsler norm)
// ---------------------------------------------------------------------------

inline void sandwich_suite(SuiteReport& out, const VerifyOptions& opts) {
    SplitMix64 rng(opts.seed);
    double min_ratio = std::numeric_limits<double>::infinity();
    double max_ratio = -std::numeric_limits<double>::infinity();
    detail::Extremum max_roundtrip;

    for (long long i = 0; i < opts.samples; ++i) {
        const Point2 m = detail::sample_slice(rng, 1e-9);
        const Vec2 v = rng.direction();
        const SandwichResult s = sandwich_check(m, v);
        min_ratio = std::min(min_ratio, s.ratio);
        max_ratio = std::max(max_ratio, s.ratio);
        if (!(s.ratio >= 1.0 - 1e-9 && s.ratio <= 2.0 + 1e-9)) {
            detail::fail(out, "sandwich.ratio_bounds",
                         "ratio " + fmt17(s.ratio) + " at m=(" + fmt17(m.x) + "," + fmt17(m.y) +
                             ") v=(" + fmt17(v.x) + "," + fmt17(v.y) + ")");
        }

        // Forward/backward round trip of the coordinatewise atanh map.
        const double cap = 1.0 - 1e-9;
        const Point2 w{rng.uniform(-cap, cap), rng.uniform(-cap, cap)};
        const double rt = l1_norm(atanh_map_inv(atanh_map(w)) - w);
        max_roundtrip.track(rt);
        if (rt > 1e-12) {
            detail::fail(out, "sandwich.atanh_round_trip", "defect " + fmt17(rt));
        }
    }

    const double witness = sandwich_check({0.5, 0.0}, {0.0, 1.0}).ratio;
    detail::check(out, std::abs(witness - 1.0) <= 1e-12, "sandwich.witness_ratio_one",
                  "ratio " + fmt17(witness));

    const double sharp = sandwich_check({1e-6, 0.0}, {1.0, 1.0}).ratio;
    detail::check(out, sharp >= 1.99, "sandwich.sharpness", "ratio " + fmt17(sharp));

    out.extrema["min_ratio"] = min_ratio;
    out.extrema["max_ratio"] = max_ratio;
    out.extrema["witness_ratio"] = witness;
    out.extrema["sharpness_ratio"] = sharp;
    out.extrema["max_atanh_round_trip_defect"] = max_roundtrip.value;
}

// ---------------------------------------------------------------------------
// Zones suite (classification, inclusions, case formulas)
// ---------------------------------------------------------------------------

namespace detail {

// The inclusion each zone guarantees for the direction (lambda, mu) at
// m = (x, y) in the wedge slice. Returns the worst violation (<= 0 when the
// inclusion holds); `slack`-free, the caller applies tolerance.
inline double zone_inclusion_defect(ZoneLabel z, Point2 m, Vec2 v) {
    // Antipodal zones satisfy the mirrored inclusion.
    switch (z) {
        case ZoneLabel::Zm12: case ZoneLabel::Zm23: case ZoneLabel::Zm34: case ZoneLabel::Z1m4:
            return zone_inclusion_defect(antipodal_zone(z), m, -v);
        default: break;
    }
    const double sx = (1.0 - m.x) * (1.0 + m.x);
    const double sy = (1.0 - m.y) * (1.0 + m.y);
    switch (z) {
        case ZoneLabel::Z12:
            return std::max(-v.y, std::abs(v.x) / sx - v.y / sy);
        case ZoneLabel::Z23:
            return std::max(v.x, -v.y);
        case ZoneLabel::Z34:
            return std::max(v.x, std::abs(v.y) / sy - (-v.x) / sx);
        default: // Z4m1
            return std::max(v.x, v.y);
    }
}

} // namespace detail

inline void zones_suite(SuiteReport& out, const VerifyOptions& opts) {
    SplitMix64 rng(opts.seed);
    const ConvexPolygon square = standard_square();

    detail::Extremum max_inclusion, max_case_rel, max_reconstruct;
    long long antipode_skipped = 0;

    for (long long i = 0; i < opts.samples; ++i) {
        const Point2 m = detail::sample_slice(rng, 1e-9);
        const Vec2 v = rng.direction();

        ZoneLabel z;
        try {
            z = classify_zone(m, v);
        } catch (const Error& e) {
            detail::fail(out, "zones.classify", e.what());
            continue;
        }

        const double defect = detail::zone_inclusion_defect(z, m, v);
        max_inclusion.track(defect);
        if (defect > 1e-12) {
            detail::fail(out, "zones.inclusion",
                         to_string(z) + std::string(" defect ") + fmt17(defect));
        }

        // Sector coordinates reconstruct the vector.
        const SectorPair basis = zone_sector(m, z);
        const SectorCoords sc = sector_coordinates(basis, v);
        const double rec = l1_norm(sc.s * basis.v1 + sc.t * basis.v2 - v) / l1_norm(v);
        max_reconstruct.track(rec);
        if (rec > 1e-12) {
            detail::fail(out, "zones.sector_reconstruction", "defect " + fmt17(rec));
        }
        if (!(sc.s >= -1e-12 && sc.t >= -1e-12)) {
            detail::fail(out, "zones.sector_membership",
                         "s=" + fmt17(sc.s) + " t=" + fmt17(sc.t));
        }

        // Case formula versus the generic chord-based norm on the square.
        const double by_case = finsler_square(m, v);
        const double generic = finsler_norm(square, m, v);
        const double rel = std::abs(by_case - generic) / generic;
        max_case_rel.track(rel);
        if (rel > 1e-12) {
            detail::fail(out, "zones.case_vs_generic",
                         to_string(z) + std::string(" relative defect ") + fmt17(rel));
        }

        // Reversibility is exact by construction.
        if (finsler_square(m, -v) != by_case) {
            detail::fail(out, "zones.reversibility", "F(m,-v) != F(m,v)");
        }

        // Antipodal labelling; skipped when v is within 1e-9 of a sector
        // boundary ray, where the lowest-label tie-break may legitimately
        // pick non-antipodal representatives of the same ray.
        if (std::min(sc.s, sc.t) * l1_norm(basis.v1 + basis.v2) > 1e-9 * l1_norm(v)) {
            const ZoneLabel za = classify_zone(m, -v);
            if (za != antipodal_zone(z)) {
                detail::fail(out, "zones.antipode",
                             std::string(to_string(z)) + " vs " + to_string(za));
            }
        } else {
            ++antipode_skipped;
        }
    }

    out.extrema["max_inclusion_defect"] = max_inclusion.value;
    out.extrema["max_sector_reconstruction_defect"] = max_reconstruct.value;
    out.extrema["max_case_vs_generic_rel_defect"] = max_case_rel.value;
    out.extrema["antipode_checks_skipped_near_rays"] = antipode_skipped;
}

// ---------------------------------------------------------------------------
// Comparison suite (triangle/quadrilateral norm ratio versus the constant A)
// ---------------------------------------------------------------------------

inline const std::vector<TQConfig>& builtin_tq_configs() {
    static const std::vector<TQConfig> configs = {
        {0.5, 1.0, 2.0}, {0.2, 1.0, 1.5}, {0.9, 2.0, 5.0}, {0.5, 1.0, 10.0}, {0.05, 3.0, 3.5}};
    return configs;
}

inline void comparison_suite(SuiteReport& out, const VerifyOptions& opts) {
    const auto& configs = builtin_tq_configs();
    for (std::size_t i = 0; i < configs.size(); ++i) {
        const TQConfig& cfg = configs[i];
        const std::string label = "config_" + std::to_string(i);
        try {
            const TQConstants k = case_constants(cfg);
            const double parts[] = {k.K1, k.K2, k.K3, k.K4, k.K5, k.K6, k.K, k.A};
            for (double p : parts) {
                if (!(p > 0.0 && p <= 1.0)) {
                    detail::fail(out, label + ".constants_in_unit_interval", fmt17(p));
                }
            }
            detail::check(out, k.A <= std::min(k.K2, k.K3) + 1e-15, label + ".A_below_K2_K3",
                          "A=" + fmt17(k.A));

            const RatioSweep sweep =
                verify_A_empirically(cfg, opts.samples, opts.seed + i, 1e-9);
            detail::check(out, sweep.violations == 0, label + ".ratio_violations",
                          std::to_string(sweep.violations) + " samples outside [A, 1]");
            detail::check(out, sweep.inf_ratio >= k.A - 1e-9, label + ".inf_ratio_above_A",
                          "inf " + fmt17(sweep.inf_ratio) + " vs A " + fmt17(k.A));
            detail::check(out, sweep.sup_ratio <= 1.0 + 1e-9, label + ".sup_ratio_below_one",
                          "sup " + fmt17(sweep.sup_ratio));

            auto& ex = out.extrema[label];
            ex["A"] = k.A;
            ex["inf_ratio"] = sweep.inf_ratio;
            ex["sup_ratio"] = sweep.sup_ratio;
            ex["violations"] = sweep.violations;
        } catch (const Error& e) {
            detail::fail(out, label + ".unexpected_error", e.what());
        }
    }
}

// ---------------------------------------------------------------------------
// Flatten suite (fan map round trips, regularity, bi-Lipschitz bounds)
// ---------------------------------------------------------------------------

inline void flatten_checks(SuiteReport& out, const std::string& label, const ConvexPolygon& poly,
                           const VerifyOptions& opts) {
    const FanDecomposition fan = build_fan(poly);
    const TheoremConstants tc = theorem_constants(fan);
    const double C = tc.C;
    const double K = tc.K;
    detail::check(out, C >= K && K >= 1.0, label + ".constant_ordering",
                  "C=" + fmt17(C) + " K=" + fmt17(K));

    SplitMix64 rng(opts.seed);
    const double diam = poly.l1_diameter();
    const double margin = 1e-6 * diam;

    // Fan ray segments (origin to boundary along each spine), for keeping the
    // finite-difference Jacobian probe away from the non-smooth set.
    std::vector<Vec2> ray_hits;
    for (std::size_t k = 0; k < fan.size(); ++k) {
        ray_hits.push_back(ray_exit(poly, {0.0, 0.0}, fan.spine(k)).hit);
    }
    auto ray_distance = [&](Point2 p) {
        double d = std::numeric_limits<double>::infinity();
        for (const Vec2& h : ray_hits) d = std::min(d, l1_dist_point_segment(p, {0.0, 0.0}, h));
        return d;
    };

    detail::Extremum max_rt, max_rt_img, max_ray, max_crossray, max_fd;
    double min_jr = std::numeric_limits<double>::infinity();
    double max_jr = -std::numeric_limits<double>::infinity();

    for (long long i = 0; i < opts.samples; ++i) {
        const Point2 p = detail::sample_interior(rng, poly, margin);
        Point2 img, back;
        try {
            img = fan.forward(p);
            back = fan.inverse(img);
        } catch (const Error& e) {
            detail::fail(out, label + ".forward_inverse_error", e.what());
            continue;
        }
        const double rt = l1_norm(back - p);
        max_rt.track(rt);
        if (rt > 1e-9) {
            detail::fail(out, label + ".round_trip",
                         "defect " + fmt17(rt) + " at (" + fmt17(p.x) + "," + fmt17(p.y) + ")");
        }

        if (i % 10 == 0) {
            const double rt2 = l1_norm(fan.forward(back) - img);
            max_rt_img.track(rt2);
            if (rt2 > 1e-9) {
                detail::fail(out, label + ".image_round_trip", "defect " + fmt17(rt2));
            }

            // The image of an off-ray point stays strictly inside its sector.
            const std::size_t k = fan.locate_triangle(p);
            try {
                const SectorCoords sc =
                    sector_coordinates({fan.spine(k), fan.spine(k + 1)}, img);
                if (ray_distance(p) > 1e-9 * diam && !(sc.s > 0.0 && sc.t > 0.0)) {
                    detail::fail(out, label + ".image_in_open_sector",
                                 "s=" + fmt17(sc.s) + " t=" + fmt17(sc.t));
                }
            } catch (const Error& e) {
                detail::fail(out, label + ".image_in_open_sector", e.what());
            }
        }

        // Jacobian sandwich between the Finsler norm and its image.
        if (i % 10 == 0 && ray_distance(p) > 1e-9 * diam) {
            try {
                const Mat2 J = fan.jacobian(p);
                const Vec2 v = rng.direction();
                const double ratio = l1_norm(J.apply(v)) / finsler_norm(poly, p, v);
                min_jr = std::min(min_jr, ratio);
                max_jr = std::max(max_jr, ratio);
                if (!(ratio >= 1.0 / K - 1e-9 && ratio <= K + 1e-9)) {
                    detail::fail(out, label + ".jacobian_sandwich",
                                 "ratio " + fmt17(ratio) + " K " + fmt17(K));
                }
                if (!(J.det() > 0.0)) {
                    detail::fail(out, label + ".jacobian_orientation", "det " + fmt17(J.det()));
                }
            } catch (const Error&) {
                // OnFanRay despite the distance guard: skip, never a failure.
            }
        }

        // Finite-difference agreement, on points far from rays and boundary.
        if (i % 100 == 0 && ray_distance(p) > 1e-3 * diam &&
            poly.boundary_clearance(p) > 1e-2 * diam) {
            try {
                const Mat2 J = fan.jacobian(p);
                const double h = 1e-7;
                const Vec2 cx = (1.0 / (2.0 * h)) * (fan.forward(p + Vec2{h, 0.0}) -
                                                     fan.forward(p - Vec2{h, 0.0}));
                const Vec2 cy = (1.0 / (2.0 * h)) * (fan.forward(p + Vec2{0.0, h}) -
                                                     fan.forward(p - Vec2{0.0, h}));
                const Mat2 fd = Mat2::from_columns(cx, cy);
                const double scale = std::max({1.0, std::abs(J.a), std::abs(J.b), std::abs(J.c),
                                               std::abs(J.d)});
                const double rel = std::max({std::abs(fd.a - J.a), std::abs(fd.b - J.b),
                                             std::abs(fd.c - J.c), std::abs(fd.d - J.d)}) /
                                   scale;
                max_fd.track(rel);
                if (rel > 1e-5) {
                    detail::fail(out, label + ".jacobian_finite_difference",
                                 "relative defect " + fmt17(rel));
                }
            } catch (const Error&) {
                // Skip rare guard trips; agreement is checked on the rest.
            }
        }
    }

    // Ray formula and cross-ray consistency at fixed parameters.
    const double params[] = {0.1, 0.25, 0.5, 0.75, 0.9, 0.99};
    for (std::size_t k = 0; k < fan.size(); ++k) {
        for (double s : params) {
            const Point2 p = s * fan.spine(k);
            const Point2 expected = std::atanh(s) * fan.spine(k);
            const double ray_defect = l1_norm(fan.forward(p) - expected);
            max_ray.track(ray_defect);
            if (ray_defect > 1e-12) {
                detail::fail(out, label + ".ray_formula",
                             "spine " + std::to_string(k) + " s=" + fmt17(s) + " defect " +
                                 fmt17(ray_defect));
            }

            const std::size_t prev = (k + fan.size() - 1) % fan.size();
            const double cross_defect =
                l1_norm(fan.forward_in_triangle(k, p) - fan.forward_in_triangle(prev, p));
            max_crossray.track(cross_defect);
            if (cross_defect > 1e-12) {
                detail::fail(out, label + ".cross_ray_consistency",
                             "spine " + std::to_string(k) + " s=" + fmt17(s) + " defect " +
                                 fmt17(cross_defect));
            }
        }
    }

    // Global bi-Lipschitz bound with the constructive constant.
    const RatioSweep sweep = empirical_lipschitz(fan, opts.samples, opts.seed + 7);
    detail::check(out, sweep.inf_ratio >= 1.0 / C - 1e-9, label + ".lipschitz_lower",
                  "min ratio " + fmt17(sweep.inf_ratio) + " vs 1/C " + fmt17(1.0 / C));
    detail::check(out, sweep.sup_ratio <= C + 1e-9, label + ".lipschitz_upper",
                  "max ratio " + fmt17(sweep.sup_ratio) + " vs C " + fmt17(C));

    auto& ex = out.extrema[label];
    ex["C"] = C;
    ex["K"] = K;
    ex["max_round_trip_defect"] = max_rt.value;
    ex["max_image_round_trip_defect"] = max_rt_img.value;
    ex["max_ray_formula_defect"] = max_ray.value;
    ex["max_cross_ray_defect"] = max_crossray.value;
    ex["min_lipschitz_ratio"] = sweep.inf_ratio;
    ex["max_lipschitz_ratio"] = sweep.sup_ratio;
    ex["min_jacobian_ratio"] = min_jr;
    ex["max_jacobian_ratio"] = max_jr;
    ex["max_jacobian_fd_rel_defect"] = max_fd.value;
}

inline void flatten_suite(SuiteReport& out, const VerifyOptions& opts) {
    for (const auto& [label, poly] : builtin_domains()) {
        try {
            flatten_checks(out, label, poly, opts);
        } catch (const Error& e) {
            detail::fail(out, label + ".unexpected_error", e.what());
        }
    }
}

// ---------------------------------------------------------------------------
// Constants suite (certifications of the closed forms and minimizers)
// ---------------------------------------------------------------------------

inline void constants_suite(SuiteReport& out, const VerifyOptions& opts) {
    // Slope-change bound versus the direct grid supremum.
    const double alphas[] = {0.1, 0.5, 1.0, 2.0, 10.0};
    for (double alpha : alphas) {
        const double m = m_of_alpha(alpha);
        const MGridCheck chk = m_grid_certification(alpha, 400);
        const std::string label = "m_alpha_" + fmt17(alpha);
        detail::check(out, chk.max_excess <= 0.0, label + ".grid_dominated",
                      "excess " + fmt17(chk.max_excess));
        detail::check(out, m - chk.grid_sup <= 1e-3, label + ".grid_sup_close",
                      "closed form " + fmt17(m) + " vs grid " + fmt17(chk.grid_sup));
        auto& ex = out.extrema[label];
        ex["closed_form"] = m;
        ex["grid_sup"] = chk.grid_sup;
        ex["gap"] = m - chk.grid_sup;
    }
    detail::check(out, m_of_alpha(1.0) == 1.0, "m_alpha_one_exact", fmt17(m_of_alpha(1.0)));

    // delta0 minimizer versus the dense grid oracle.
    const auto& configs = builtin_tq_configs();
    for (std::size_t i = 0; i < configs.size(); ++i) {
        const TQConfig& cfg = configs[i];
        const std::string label = "delta0_config_" + std::to_string(i);
        const double al = alpha0(cfg.b, cfg.c);
        const double d = delta0(cfg.a, al);
        const Delta0GridOracle oracle = delta0_grid_oracle(cfg.a, al, 2000, 2000);
        detail::check(out, d > 0.0, label + ".positive", fmt17(d));
        detail::check(out, d <= oracle.value + 1e-12, label + ".below_grid",
                      "minimizer " + fmt17(d) + " grid " + fmt17(oracle.value));
        detail::check(out, oracle.value - d <= 2.0 * oracle.step, label + ".near_grid",
                      "gap " + fmt17(oracle.value - d) + " step " + fmt17(oracle.step));
        auto& ex = out.extrema[label];
        ex["minimizer"] = d;
        ex["grid_value"] = oracle.value;
        ex["grid_step"] = oracle.step;
    }

    // Projection comparison property sweep.
    SplitMix64 rng(opts.seed);
    long long tested = 0, truths = 0, rejected = 0;
    const long long target = opts.samples;
    while (tested < target && rejected < 100 * target) {
        const Point2 omega{rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0)};
        const Point2 q1{rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0)};
        const Point2 q2{rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0)};
        const double t1 = rng.uniform(0.05, 0.95);
        const double t2 = rng.uniform(0.05, 0.95);
        try {
            const bool ok = projection_lemma_check(omega, q1, q2, t1, t2);
            ++tested;
            if (ok) {
                ++truths;
            } else {
                detail::fail(out, "projection.strict_inequality",
                             "false at omega=(" + fmt17(omega.x) + "," + fmt17(omega.y) + ")");
            }
        } catch (const Error&) {
            ++rejected; // configuration missed a precondition; resample
        }
    }
    detail::check(out, tested == target, "projection.sample_count",
                  std::to_string(tested) + " of " + std::to_string(target));
    out.extrema["projection_tested"] = tested;
    out.extrema["projection_true"] = truths;
    out.extrema["projection_rejected_configs"] = rejected;

    // Enclosing construction on the square against the hand-computed values.
    try {
        const ConvexPolygon square = standard_square();
        const EnclosingParams ep = enclosing_parameters(square, square);
        detail::check(out,
                      std::abs(ep.a - 0.99) <= 1e-12 && ep.b == 1.0 &&
                          std::abs(ep.c - 3.0) <= 1e-12,
                      "enclosing.square_reference",
                      "a=" + fmt17(ep.a) + " b=" + fmt17(ep.b) + " c=" + fmt17(ep.c));
        out.extrema["enclosing_square"] = {{"a", ep.a}, {"b", ep.b}, {"c", ep.c}};
    } catch (const Error& e) {
        detail::fail(out, "enclosing.square_reference", e.what());
    }

    // Full constant chain on the stock fans: ledger invariants.
    for (const auto& [label, poly] : builtin_domains()) {
        try {
            const TheoremConstants tc = theorem_constants(build_fan(poly));
            bool ok = tc.C >= tc.K && tc.K >= 1.0;
            for (const EdgeConstants& ec : tc.edges) {
                ok = ok && ec.tq.A > 0.0 && ec.tq.A <= 1.0 && ec.B >= 1.0 && ec.M >= 1.0 &&
                     ec.Lambda >= 1.0 && ec.alpha > 0.0;
            }
            detail::check(out, ok, label + ".ledger_invariants",
                          "C=" + fmt17(tc.C) + " K=" + fmt17(tc.K));
            out.extrema[label + "_C"] = tc.C;
            out.extrema[label + "_K"] = tc.K;
        } catch (const Error& e) {
            detail::fail(out, label + ".ledger_invariants", e.what());
        }
    }
}

// ---------------------------------------------------------------------------
// Suite dispatch
// ---------------------------------------------------------------------------

inline const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {"metric",  "sandwich", "zones",
                                                   "comparison", "flatten",  "constants"};
    return names;
}

inline SuiteReport run_suite(const std::string& suite, const VerifyOptions& opts) {
    SuiteReport report;
    report.suite = suite;
    report.samples = opts.samples;
    report.seed = opts.seed;
    report.tolerance = opts.tolerance;

    if (suite == "metric") {
        metric_suite(report, opts);
    } else if (suite == "sandwich") {
        sandwich_suite(report, opts);
    } else if (suite == "zones") {
        zones_suite(report, opts);
    } else if (suite == "comparison") {
        comparison_suite(report, opts);
    } else if (suite == "flatten") {
        flatten_suite(report, opts);
    } else if (suite == "constants") {
        constants_suite(report, opts);
    } else if (suite == "all") {
        for (const std::string& name : suite_names()) {
            SuiteReport sub = run_suite(name, opts);
            report.failure_count += sub.failure_count;
            for (CheckFailure& f : sub.failures) {
                if (report.failures.size() < kMaxStoredFailures) {
                    report.failures.push_back({name + "." + f.check, std::move(f.detail)});
                }
            }
            report.extrema[name] = std::move(sub.extrema);
        }
    } else {
        throw Error(ErrorKind::BadConfig,
                    "unknown suite '" + suite +
                        "' (choose metric, sandwich, zones, comparison, flatten, constants, all)");
    }
    return report;
}

} // namespace hilbert
