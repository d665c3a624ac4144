// Acceptance harness: one pass/fail line per criterion, exit code = number of
// failed criteria. Sample sizes and tolerances are fixed here on purpose; the
// configurable sweeps live in the `verify` CLI subcommand instead.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <unistd.h>
#include <vector>

#include "hilbert/constants.hpp"
#include "hilbert/flatten.hpp"
#include "hilbert/geometry.hpp"
#include "hilbert/metric.hpp"
#include "hilbert/polygon.hpp"
#include "hilbert/rng.hpp"
#include "hilbert/square_model.hpp"
#include "hilbert/verify.hpp"

using namespace hilbert;

namespace {

int failures = 0;

void report(int criterion, const char* name, bool pass, const std::string& detail) {
    std::printf("%s  criterion %d (%s): %s\n", pass ? "PASS" : "FAIL", criterion, name,
                detail.c_str());
    std::fflush(stdout);
    if (!pass) ++failures;
}

std::string num(double x) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.3g", x);
    return buf;
}

Point2 sample_interior(SplitMix64& rng, const ConvexPolygon& poly, double margin) {
    Vec2 lo, hi;
    poly.bounding_box(lo, hi);
    for (;;) {
        const Point2 p{rng.uniform(lo.x, hi.x), rng.uniform(lo.y, hi.y)};
        if (poly.contains_interior(p, margin)) return p;
    }
}

Point2 sample_slice(SplitMix64& rng) {
    for (;;) {
        const double x = rng.uniform(0.0, 1.0);
        const double y = rng.uniform(-1.0, 1.0);
        if (x >= 1e-9 && x <= 1.0 - 1e-9 && std::abs(y) <= x * (1.0 - 1e-9)) return {x, y};
    }
}

// Criterion 1: metric axioms on the three stock polygons.
void criterion_metric_axioms() {
    const auto t0 = std::chrono::steady_clock::now();
    const long long triples = 100000;
    double max_sym = 0.0, max_tri = -std::numeric_limits<double>::infinity();
    long long bad = 0;

    std::uint64_t seed = 42;
    for (const auto& [label, poly] : builtin_domains()) {
        SplitMix64 rng(seed++);
        const double margin = 1e-6 * poly.l1_diameter();
        for (long long i = 0; i < triples; ++i) {
            const Point2 p = sample_interior(rng, poly, margin);
            const Point2 q = sample_interior(rng, poly, margin);
            const Point2 r = sample_interior(rng, poly, margin);

            if (hilbert_distance(poly, p, p) != 0.0) ++bad;

            const double dpq = hilbert_distance(poly, p, q);
            const double sym = std::abs(dpq - hilbert_distance(poly, q, p)) / (1.0 + dpq);
            max_sym = std::max(max_sym, sym);
            if (sym > 1e-12) ++bad;

            const double slack =
                hilbert_distance(poly, p, r) - (dpq + hilbert_distance(poly, q, r));
            max_tri = std::max(max_tri, slack);
            if (slack > 1e-9) ++bad;
        }
    }

    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool pass = bad == 0 && secs <= 60.0;
    report(1, "metric axioms, 3 polygons x 1e5 triples", pass,
           "violations " + std::to_string(bad) + ", max symmetry defect " + num(max_sym) +
               ", max triangle slack " + num(max_tri) + ", " + num(secs) + " s (limit 60)");
}

// Criterion 2: the tangent-map image pinches the square norm within [1, 2].
void criterion_sandwich() {
    SplitMix64 rng(42);
    long long bad = 0;
    double min_ratio = std::numeric_limits<double>::infinity();
    double max_ratio = -min_ratio;
    for (long long i = 0; i < 100000; ++i) {
        const SandwichResult s = sandwich_check(sample_slice(rng), rng.direction());
        min_ratio = std::min(min_ratio, s.ratio);
        max_ratio = std::max(max_ratio, s.ratio);
        if (!(s.ratio >= 1.0 - 1e-9 && s.ratio <= 2.0 + 1e-9)) ++bad;
    }
    const double witness = sandwich_check({0.5, 0.0}, {0.0, 1.0}).ratio;
    const double sharp = sandwich_check({1e-6, 0.0}, {1.0, 1.0}).ratio;
    const bool pass =
        bad == 0 && std::abs(witness - 1.0) <= 1e-12 && sharp >= 1.99;
    report(2, "norm sandwich on the square, 1e5 samples", pass,
           "violations " + std::to_string(bad) + ", ratios in [" + num(min_ratio) + ", " +
               num(max_ratio) + "], witness " + num(witness) + ", sharpness " + num(sharp));
}

// Criterion 3: quadrature along segments reproduces the distance.
void criterion_geodesic() {
    long long bad = 0;
    double max_defect = 0.0;
    std::uint64_t seed = 4242;
    for (const auto& [label, poly] : builtin_domains()) {
        SplitMix64 rng(seed++);
        const double margin = 1e-6 * poly.l1_diameter();
        for (int i = 0; i < 1000; ++i) {
            const Point2 p = sample_interior(rng, poly, margin);
            const Point2 q = sample_interior(rng, poly, margin);
            if (p == q) continue;
            const double defect =
                std::abs(segment_length(poly, p, q, 1e-9) - hilbert_distance(poly, p, q));
            max_defect = std::max(max_defect, defect);
            if (defect > 1e-8) ++bad;
        }
    }
    report(3, "segment length vs distance, 3 x 1e3 pairs", bad == 0,
           "violations " + std::to_string(bad) + ", max defect " + num(max_defect) +
               " (limit 1e-8)");
}

// Criterion 4: the constant A bounds the norm ratio of the nested pair.
void criterion_comparison() {
    long long total_violations = 0;
    std::string spans;
    const auto& configs = builtin_tq_configs();
    for (std::size_t i = 0; i < configs.size(); ++i) {
        const RatioSweep sweep =
            verify_A_empirically(configs[i], 100000, 42 + static_cast<std::uint64_t>(i));
        total_violations += sweep.violations;
        if (!spans.empty()) spans += "; ";
        spans += "A" + std::to_string(i) + "=" + num(case_constants(configs[i]).A) + " inf=" +
                 num(sweep.inf_ratio) + " sup=" + num(sweep.sup_ratio);
    }
    report(4, "nested-pair norm ratio vs A, 5 configs x 1e5", total_violations == 0,
           "violations " + std::to_string(total_violations) + "; " + spans);
}

// Criterion 5: closed-form slope-change bound vs the grid supremum.
void criterion_m_alpha() {
    bool pass = m_of_alpha(1.0) == 1.0;
    std::string gaps = pass ? "M(1)=1 exact" : "M(1) != 1";
    for (double alpha : {0.1, 0.5, 1.0, 2.0, 10.0}) {
        const MGridCheck g = m_grid_certification(alpha, 400);
        const double gap = m_of_alpha(alpha) - g.grid_sup;
        if (!(g.max_excess <= 0.0 && gap <= 1e-3)) pass = false;
        gaps += "; alpha=" + num(alpha) + " gap=" + num(gap);
    }
    report(5, "slope-change bound vs 400x400 grid", pass, gaps);
}

// Criterion 6: flattening round trips, ray formulas, and the constant C.
void criterion_flattening() {
    bool pass = true;
    std::string detail;
    std::uint64_t seed = 42;
    for (const auto& [label, poly] : builtin_domains()) {
        const FanDecomposition fan = build_fan(poly);
        const double C = theorem_constants(fan).C;

        SplitMix64 rng(seed++);
        const double margin = 1e-6 * poly.l1_diameter();
        double max_rt = 0.0;
        for (int i = 0; i < 10000; ++i) {
            const Point2 p = sample_interior(rng, poly, margin);
            max_rt = std::max(max_rt, l1_norm(fan.inverse(fan.forward(p)) - p));
        }

        double max_ray = 0.0, max_cross = 0.0;
        for (std::size_t k = 0; k < fan.size(); ++k) {
            for (double s : {0.1, 0.25, 0.5, 0.75, 0.9, 0.99}) {
                const Point2 p = s * fan.spine(k);
                max_ray = std::max(
                    max_ray, l1_norm(fan.forward(p) - std::atanh(s) * fan.spine(k)));
                const std::size_t prev = (k + fan.size() - 1) % fan.size();
                max_cross = std::max(max_cross, l1_norm(fan.forward_in_triangle(k, p) -
                                                        fan.forward_in_triangle(prev, p)));
            }
        }

        const RatioSweep sweep = empirical_lipschitz(fan, 100000, 4242);
        const bool ok = max_rt <= 1e-9 && max_ray <= 1e-12 && max_cross <= 1e-12 &&
                        sweep.inf_ratio >= 1.0 / C - 1e-9 && sweep.sup_ratio <= C + 1e-9;
        pass = pass && ok;
        if (!detail.empty()) detail += "; ";
        detail += label + ": rt=" + num(max_rt) + " ray=" + num(max_ray) + " cross=" +
                  num(max_cross) + " ratios [" + num(sweep.inf_ratio) + ", " +
                  num(sweep.sup_ratio) + "] in [" + num(1.0 / C) + ", " + num(C) + "]";
    }
    report(6, "flattening map suite, 3 polygons", pass, detail);
}

// Criterion 7: the projection ratio inequality on random valid configurations.
void criterion_projection() {
    SplitMix64 rng(7);
    const long long target = 10000;
    long long tested = 0, bad = 0, rejected = 0;
    while (tested < target && rejected < 100 * target) {
        const Point2 omega{rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0)};
        const Point2 q1{rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0)};
        const Point2 q2{rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0)};
        const double t1 = rng.uniform(0.05, 0.95);
        const double t2 = rng.uniform(0.05, 0.95);
        try {
            if (!projection_lemma_check(omega, q1, q2, t1, t2)) ++bad;
            ++tested;
        } catch (const Error&) {
            ++rejected;
        }
    }
    report(7, "projection ratio inequality, 1e4 configs", tested == target && bad == 0,
           std::to_string(tested) + " tested, " + std::to_string(bad) + " false, " +
               std::to_string(rejected) + " precondition rejects");
}

// Criterion 8: the verification CLI is byte-deterministic for a fixed seed.
void criterion_determinism() {
    const char* exe = std::getenv("HILBERT_CLI");
    if (exe == nullptr) {
        report(8, "verify CLI determinism", false,
               "HILBERT_CLI is not set; run through ctest or set it to the CLI binary");
        return;
    }
    const auto dir = std::filesystem::temp_directory_path() /
                     ("hilbert_acceptance_" + std::to_string(::getpid()));
    std::filesystem::create_directories(dir);
    const auto out1 = dir / "all_seed42_run1.json";
    const auto out2 = dir / "all_seed42_run2.json";

    auto run = [&](const std::filesystem::path& out) {
        const std::string cmd = std::string(exe) + " verify --suite all --seed 42 --out " +
                                out.string() + " > /dev/null 2>&1";
        const int status = std::system(cmd.c_str());
        return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    };
    auto slurp = [](const std::filesystem::path& p) {
        std::ifstream in(p, std::ios::binary);
        std::ostringstream ss;
        ss << in.rdbuf();
        return ss.str();
    };

    const int code1 = run(out1);
    const int code2 = run(out2);
    const std::string blob1 = slurp(out1);
    const std::string blob2 = slurp(out2);
    const bool pass = code1 == 0 && code2 == 0 && !blob1.empty() && blob1 == blob2;
    report(8, "verify CLI determinism", pass,
           "exit codes " + std::to_string(code1) + "/" + std::to_string(code2) + ", " +
               std::to_string(blob1.size()) + " bytes, " +
               (blob1 == blob2 ? "byte-identical" : "DIFFER"));
    std::error_code ec;
    std::filesystem::remove_all(dir, ec);
}

} // namespace

int main() {
    const auto t0 = std::chrono::steady_clock::now();
    criterion_metric_axioms();
    criterion_sandwich();
    criterion_geodesic();
    criterion_comparison();
    criterion_m_alpha();
    criterion_flattening();
    criterion_projection();
    criterion_determinism();
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("%d of 8 criteria failed (%.1f s total)\n", failures, secs);
    return failures;
}
