// Command-line front end: distance and ball queries, grid flattening, the
// constants ledger, and the verification suites.
//
// Exit codes: 0 success, 1 input/validation error, 2 verification failure.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "hilbert/constants.hpp"
#include "hilbert/error.hpp"
#include "hilbert/flatten.hpp"
#include "hilbert/geometry.hpp"
#include "hilbert/io.hpp"
#include "hilbert/metric.hpp"
#include "hilbert/polygon.hpp"
#include "hilbert/svg.hpp"
#include "hilbert/verify.hpp"

namespace {

using namespace hilbert;

double parse_double(const std::string& text, const std::string& flag) {
    std::size_t pos = 0;
    double value = 0.0;
    try {
        value = std::stod(text, &pos);
    } catch (const std::exception&) {
        throw Error(ErrorKind::BadConfig, flag + ": '" + text + "' is not a number");
    }
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos != text.size() || !std::isfinite(value)) {
        throw Error(ErrorKind::BadConfig, flag + ": '" + text + "' is not a finite number");
    }
    return value;
}

std::vector<double> parse_tuple(const std::string& text, std::size_t n, const std::string& flag) {
    std::vector<double> values;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = text.find(',', start);
        values.push_back(parse_double(
            text.substr(start, comma == std::string::npos ? comma : comma - start), flag));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    if (values.size() != n) {
        throw Error(ErrorKind::BadConfig,
                    flag + ": expected " + std::to_string(n) + " comma-separated numbers");
    }
    return values;
}

Point2 parse_point(const std::string& text, const std::string& flag) {
    const std::vector<double> v = parse_tuple(text, 2, flag);
    return {v[0], v[1]};
}

void write_output(const std::string& out_path, const std::string& content) {
    if (out_path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw Error(ErrorKind::BadConfig, "cannot open output file: " + out_path);
    out << content;
}

int cmd_distance(const std::string& polygon_path, const std::string& p_str,
                 const std::string& q_str) {
    const ConvexPolygon poly = load_polygon(polygon_path);
    const Point2 p = parse_point(p_str, "--p");
    const Point2 q = parse_point(q_str, "--q");
    std::cout << fmt17(hilbert_distance(poly, p, q)) << '\n';
    return 0;
}

int cmd_ball(const std::string& polygon_path, const std::string& center_str, double radius,
             int dirs, const std::string& out_path) {
    const ConvexPolygon poly = load_polygon(polygon_path);
    const Point2 center = parse_point(center_str, "--p");
    const std::vector<Point2> ball = metric_ball(poly, center, radius, dirs);

    Vec2 lo, hi;
    poly.bounding_box(lo, hi);
    SvgCanvas canvas(lo, hi);
    canvas.add_polygon(poly, "black");
    canvas.add_closed_polyline(ball, "crimson");
    write_output(out_path, canvas.render());
    return 0;
}

int cmd_flatten(const std::string& polygon_path, int grid_n, const std::string& out_path,
                const std::string& format) {
    if (grid_n < 2) throw Error(ErrorKind::BadConfig, "--grid must be at least 2");
    const ConvexPolygon poly = load_polygon(polygon_path);
    const FanDecomposition fan = build_fan(poly);

    Vec2 lo, hi;
    poly.bounding_box(lo, hi);
    auto grid_point = [&](int i, int j) -> Point2 {
        return {lo.x + (hi.x - lo.x) * static_cast<double>(i) / (grid_n - 1),
                lo.y + (hi.y - lo.y) * static_cast<double>(j) / (grid_n - 1)};
    };

    if (format == "csv") {
        std::string csv = "x,y,fx,fy\n";
        for (int j = 0; j < grid_n; ++j) {
            for (int i = 0; i < grid_n; ++i) {
                const Point2 p = grid_point(i, j);
                if (!poly.contains_interior(p)) continue;
                const Point2 img = fan.forward(p);
                csv += fmt17(p.x) + "," + fmt17(p.y) + "," + fmt17(img.x) + "," + fmt17(img.y) +
                       "\n";
            }
        }
        write_output(out_path, csv);
        return 0;
    }
    if (format == "svg") {
        SvgCanvas canvas(lo, hi);
        canvas.add_polygon(poly, "black");
        // Images of the horizontal and vertical grid lines, split into runs
        // of consecutive interior points.
        for (int axis = 0; axis < 2; ++axis) {
            for (int j = 0; j < grid_n; ++j) {
                std::vector<Point2> run;
                for (int i = 0; i < grid_n; ++i) {
                    const Point2 p = axis == 0 ? grid_point(i, j) : grid_point(j, i);
                    if (poly.contains_interior(p)) {
                        run.push_back(fan.forward(p));
                    } else if (!run.empty()) {
                        canvas.add_polyline(run, "steelblue");
                        run.clear();
                    }
                }
                canvas.add_polyline(run, "steelblue");
            }
        }
        write_output(out_path, canvas.render());
        return 0;
    }
    throw Error(ErrorKind::BadConfig, "--format must be csv or svg for flatten");
}

int cmd_verify(const std::string& suite, long long samples, std::uint64_t seed, double tolerance,
               const std::string& out_path) {
    if (samples < 1) throw Error(ErrorKind::BadConfig, "--samples must be at least 1");
    if (!(tolerance > 0.0)) throw Error(ErrorKind::BadConfig, "--tolerance must be positive");
    VerifyOptions opts;
    opts.samples = samples;
    opts.seed = seed;
    opts.tolerance = tolerance;
    const SuiteReport report = run_suite(suite, opts);
    write_output(out_path, to_json(report).dump(2) + "\n");
    return report.ok() ? 0 : 2;
}

int cmd_constants(const std::string& polygon_path, const std::string& tq_str,
                  const std::string& out_path) {
    if (polygon_path.empty() == tq_str.empty()) {
        throw Error(ErrorKind::BadConfig, "pass exactly one of --polygon or --tq");
    }

    nlohmann::ordered_json j;
    std::vector<LedgerEntry> entries;
    if (!tq_str.empty()) {
        const std::vector<double> v = parse_tuple(tq_str, 3, "--tq");
        const TQConfig cfg{v[0], v[1], v[2]};
        entries = to_entries(case_constants(cfg));
        j["config"] = {{"tq", {cfg.a, cfg.b, cfg.c}}};
    } else {
        const ConvexPolygon poly = load_polygon(polygon_path);
        const FanDecomposition fan = build_fan(poly);
        entries = to_entries(theorem_constants(fan));
        j["config"] = {{"polygon", polygon_path}};
    }
    j["entries"] = nlohmann::ordered_json::array();
    for (const LedgerEntry& e : entries) {
        j["entries"].push_back(
            {{"name", e.name}, {"value", e.value}, {"provenance", e.provenance}});
    }
    write_output(out_path, j.dump(2) + "\n");
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Hilbert geometry on convex polygons: distances, metric balls, flattening maps, "
                 "constant ledgers, and verification suites"};
    app.require_subcommand(1);

    std::string polygon_path, p_str, q_str, tq_str, out_path;
    std::string suite = "all";
    std::string format = "csv";
    double radius = 0.5;
    int dirs = 64;
    int grid_n = 20;
    long long samples = 20000;
    std::uint64_t seed = 1;
    double tolerance = 1e-9;

    CLI::App* distance = app.add_subcommand("distance", "Hilbert distance between two points");
    distance->add_option("--polygon", polygon_path, "polygon JSON file")->required();
    distance->add_option("--p", p_str, "first point as x,y")->required();
    distance->add_option("--q", q_str, "second point as x,y")->required();

    CLI::App* ball = app.add_subcommand("ball", "metric ball rendered as SVG");
    ball->add_option("--polygon", polygon_path, "polygon JSON file")->required();
    ball->add_option("--p", p_str, "ball center as x,y")->required();
    ball->add_option("--r", radius, "ball radius")->required();
    ball->add_option("--dirs", dirs, "number of boundary directions (>= 8)");
    ball->add_option("--out", out_path, "output file (default stdout)");

    CLI::App* flatten = app.add_subcommand("flatten", "flattening map over an interior grid");
    flatten->add_option("--polygon", polygon_path, "polygon JSON file")->required();
    flatten->add_option("--grid", grid_n, "grid resolution per axis");
    flatten->add_option("--out", out_path, "output file (default stdout)");
    flatten->add_option("--format", format, "csv or svg");

    CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("--suite", suite,
                       "metric, sandwich, zones, comparison, flatten, constants, or all");
    verify->add_option("--samples", samples, "samples per sweep");
    verify->add_option("--seed", seed, "random seed");
    verify->add_option("--tolerance", tolerance, "integration tolerance");
    verify->add_option("--out", out_path, "output file (default stdout)");

    CLI::App* constants = app.add_subcommand("constants", "constant ledger as JSON");
    constants->add_option("--polygon", polygon_path, "polygon JSON file (full chain)");
    constants->add_option("--tq", tq_str, "triangle/quadrilateral parameters a,b,c");
    constants->add_option("--out", out_path, "output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (distance->parsed()) return cmd_distance(polygon_path, p_str, q_str);
        if (ball->parsed()) return cmd_ball(polygon_path, p_str, radius, dirs, out_path);
        if (flatten->parsed()) return cmd_flatten(polygon_path, grid_n, out_path, format);
        if (verify->parsed()) return cmd_verify(suite, samples, seed, tolerance, out_path);
        if (constants->parsed()) return cmd_constants(polygon_path, tq_str, out_path);
    } catch (const Error& e) {
        std::cerr << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 1;
}
