#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>
#include <unistd.h>

#include <catch2/catch_amalgamated.hpp>
#include <nlohmann/json.hpp>

#include "hilbert/error.hpp"
#include "hilbert/flatten.hpp"
#include "hilbert/io.hpp"
#include "hilbert/verify.hpp"

using namespace hilbert;

namespace {

auto kind_is(ErrorKind k) {
    return Catch::Matchers::Predicate<Error>([k](const Error& e) { return e.kind() == k; });
}

VerifyOptions small_opts(long long samples, std::uint64_t seed) {
    VerifyOptions o;
    o.samples = samples;
    o.seed = seed;
    o.tolerance = 1e-9;
    return o;
}

struct RunResult {
    int exit_code = -1;
    std::string output;
};

// Runs the CLI binary named by the HILBERT_CLI environment variable with the
// given arguments, capturing stdout and stderr together.
RunResult run_cli(const std::string& args) {
    const char* exe = std::getenv("HILBERT_CLI");
    REQUIRE(exe != nullptr);
    const std::string cmd = std::string(exe) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    char buf[4096];
    std::size_t n = 0;
    while ((n = fread(buf, 1, sizeof(buf), pipe)) > 0) r.output.append(buf, n);
    const int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

bool cli_available() { return std::getenv("HILBERT_CLI") != nullptr; }

// Scratch directory shared by the CLI test cases.
const std::filesystem::path& scratch_dir() {
    static const std::filesystem::path dir = [] {
        auto d = std::filesystem::temp_directory_path() /
                 ("hilbert_cli_test_" + std::to_string(::getpid()));
        std::filesystem::create_directories(d);
        return d;
    }();
    return dir;
}

std::string square_json_path() {
    const auto path = scratch_dir() / "square.json";
    std::ofstream out(path);
    out << R"({"vertices": [[1, -1], [1, 1], [-1, 1], [-1, -1]]})";
    return path.string();
}

std::string read_file(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace

TEST_CASE("every verification suite passes on a small sample budget") {
    for (const std::string& name : suite_names()) {
        const SuiteReport r = run_suite(name, small_opts(40, 3));
        INFO(name << ": " << (r.failures.empty() ? "" : r.failures[0].check + " | " +
                                                            r.failures[0].detail));
        CHECK(r.ok());
        CHECK(r.suite == name);
        CHECK_FALSE(r.extrema.empty());
    }

    const SuiteReport all = run_suite("all", small_opts(30, 4));
    INFO((all.failures.empty() ? "" : all.failures[0].check + " | " + all.failures[0].detail));
    CHECK(all.ok());
    // Merged report nests one extrema object per suite.
    for (const std::string& name : suite_names()) {
        CHECK(all.extrema.contains(name));
    }

    CHECK_THROWS_MATCHES(run_suite("bogus", small_opts(10, 1)), Error,
                         kind_is(ErrorKind::BadConfig));
}

TEST_CASE("a biased norm is caught by the consistency checks") {
    SuiteReport r;
    r.suite = "canary";
    metric_checks(r, "canary", standard_square(), small_opts(120, 5), 1.01);
    CHECK(r.failure_count > 0);
    bool norm_form_caught = false;
    for (const CheckFailure& f : r.failures) {
        if (f.check.find("norm_form") != std::string::npos) norm_form_caught = true;
    }
    CHECK(norm_form_caught);
}

TEST_CASE("suite reports serialize deterministically") {
    const SuiteReport a = run_suite("zones", small_opts(60, 11));
    const SuiteReport b = run_suite("zones", small_opts(60, 11));
    CHECK(to_json(a).dump(2) == to_json(b).dump(2));

    const auto j = to_json(a);
    for (const char* field : {"suite", "samples", "seed", "tolerance", "failure_count",
                              "failures", "extrema"}) {
        CHECK(j.contains(field));
    }
    CHECK(j["suite"] == "zones");
    CHECK(j["samples"] == 60);
    CHECK(j["seed"] == 11);
    CHECK(j["failures"].is_array());
}

TEST_CASE("command line: distance") {
    if (!cli_available()) {
        WARN("HILBERT_CLI not set; skipping CLI subprocess tests");
        return;
    }
    const std::string sq = square_json_path();

    const RunResult mid = run_cli("distance --polygon " + sq + " --p 0,0 --q 0.5,0");
    CHECK(mid.exit_code == 0);
    const double value = std::stod(mid.output);
    CHECK(std::abs(value - std::atanh(0.5)) <= 1e-15);
    // Output is the full 17-significant-digit rendering plus newline.
    CHECK(mid.output == fmt17(value) + "\n");

    const RunResult same = run_cli("distance --polygon " + sq + " --p 0.25,-0.5 --q 0.25,-0.5");
    CHECK(same.exit_code == 0);
    CHECK(same.output == "0\n");

    const RunResult outside = run_cli("distance --polygon " + sq + " --p 2,0 --q 0,0");
    CHECK(outside.exit_code == 1);
    CHECK(outside.output.find("PointNotInterior") != std::string::npos);

    const RunResult junk = run_cli("distance --polygon " + sq + " --p zero,0 --q 0,0");
    CHECK(junk.exit_code == 1);
    CHECK(junk.output.find("BadConfig") != std::string::npos);
}

TEST_CASE("command line: ball") {
    if (!cli_available()) {
        WARN("HILBERT_CLI not set; skipping CLI subprocess tests");
        return;
    }
    const std::string sq = square_json_path();
    const auto svg_path = scratch_dir() / "ball.svg";

    const RunResult ok = run_cli("ball --polygon " + sq + " --p 0,0 --r 0.549306 --dirs 32 --out " +
                                 svg_path.string());
    CHECK(ok.exit_code == 0);
    const std::string svg = read_file(svg_path);
    CHECK(svg.rfind("<svg xmlns", 0) == 0); // starts with the root element
    CHECK(svg.find("</svg>") != std::string::npos);
    CHECK(svg.find("crimson") != std::string::npos);

    const RunResult bad_dirs = run_cli("ball --polygon " + sq + " --p 0,0 --r 0.5 --dirs 4");
    CHECK(bad_dirs.exit_code == 1);
    CHECK(bad_dirs.output.find("BadConfig") != std::string::npos);
}

TEST_CASE("command line: flatten grid") {
    if (!cli_available()) {
        WARN("HILBERT_CLI not set; skipping CLI subprocess tests");
        return;
    }
    const std::string sq = square_json_path();

    const RunResult csv = run_cli("flatten --polygon " + sq + " --grid 9 --format csv");
    REQUIRE(csv.exit_code == 0);
    std::istringstream lines(csv.output);
    std::string line;
    REQUIRE(std::getline(lines, line));
    CHECK(line == "x,y,fx,fy");

    // Every row inverts back to its grid point through the library.
    const FanDecomposition fan = build_fan(standard_square());
    bool saw_origin_row = false;
    int rows = 0;
    while (std::getline(lines, line)) {
        if (line.empty()) continue;
        ++rows;
        if (line == "0,0,0,0") saw_origin_row = true;
        std::istringstream cells(line);
        double v[4];
        char comma;
        cells >> v[0] >> comma >> v[1] >> comma >> v[2] >> comma >> v[3];
        REQUIRE(cells);
        const Point2 back = fan.inverse({v[2], v[3]});
        CHECK(l1_norm(back - Point2{v[0], v[1]}) <= 1e-9);
    }
    CHECK(rows > 0);
    CHECK(rows <= 9 * 9);
    CHECK(saw_origin_row);

    const RunResult svg = run_cli("flatten --polygon " + sq + " --grid 9 --format svg");
    CHECK(svg.exit_code == 0);
    CHECK(svg.output.rfind("<svg xmlns", 0) == 0);

    const RunResult bad = run_cli("flatten --polygon " + sq + " --grid 1");
    CHECK(bad.exit_code == 1);
}

TEST_CASE("command line: verify") {
    if (!cli_available()) {
        WARN("HILBERT_CLI not set; skipping CLI subprocess tests");
        return;
    }

    const RunResult zones = run_cli("verify --suite zones --samples 50 --seed 9");
    REQUIRE(zones.exit_code == 0);
    const auto j = nlohmann::json::parse(zones.output);
    CHECK(j["suite"] == "zones");
    CHECK(j["samples"] == 50);
    CHECK(j["seed"] == 9);
    CHECK(j["failure_count"] == 0);
    CHECK(j["extrema"].is_object());

    // An impossible integration tolerance is an honest verification failure:
    // exit code 2 and named failures, not a silent pass.
    const RunResult strict = run_cli("verify --suite metric --samples 60 --tolerance 1e-18");
    CHECK(strict.exit_code == 2);
    const auto sj = nlohmann::json::parse(strict.output);
    CHECK(sj["failure_count"].get<long long>() > 0);
    CHECK(sj.dump().find("segment_vs_distance") != std::string::npos);

    // Same seed, same bytes.
    const auto out1 = scratch_dir() / "verify1.json";
    const auto out2 = scratch_dir() / "verify2.json";
    const RunResult r1 =
        run_cli("verify --suite sandwich --samples 80 --seed 4 --out " + out1.string());
    const RunResult r2 =
        run_cli("verify --suite sandwich --samples 80 --seed 4 --out " + out2.string());
    CHECK(r1.exit_code == 0);
    CHECK(r2.exit_code == 0);
    const std::string blob1 = read_file(out1);
    CHECK_FALSE(blob1.empty());
    CHECK(blob1 == read_file(out2));

    const RunResult unknown = run_cli("verify --suite bogus --samples 10");
    CHECK(unknown.exit_code == 1);
    CHECK(unknown.output.find("BadConfig") != std::string::npos);
}

TEST_CASE("command line: constants") {
    if (!cli_available()) {
        WARN("HILBERT_CLI not set; skipping CLI subprocess tests");
        return;
    }
    const std::string sq = square_json_path();

    const RunResult tq = run_cli("constants --tq 0.5,1,2");
    REQUIRE(tq.exit_code == 0);
    const auto j = nlohmann::json::parse(tq.output);
    REQUIRE(j["entries"].is_array());
    CHECK(j["entries"].size() == 15);
    bool saw_k2 = false;
    for (const auto& e : j["entries"]) {
        if (e["name"] == "K2") {
            saw_k2 = true;
            CHECK(std::abs(e["value"].get<double>() - 2.0 / 9.0) <= 1e-15);
        }
    }
    CHECK(saw_k2);

    const RunResult full = run_cli("constants --polygon " + sq);
    REQUIRE(full.exit_code == 0);
    const auto fj = nlohmann::json::parse(full.output);
    CHECK(fj["entries"].size() == 10 * 4 + 2);
    CHECK(fj["entries"].back()["name"] == "C");

    CHECK(run_cli("constants").exit_code == 1);
    CHECK(run_cli("constants --polygon " + sq + " --tq 0.5,1,2").exit_code == 1);
    CHECK(run_cli("constants --tq 0.5,1").exit_code == 1);
}

TEST_CASE("command line: help and dispatch") {
    if (!cli_available()) {
        WARN("HILBERT_CLI not set; skipping CLI subprocess tests");
        return;
    }
    CHECK(run_cli("--help").exit_code == 0);
    CHECK(run_cli("distance --help").exit_code == 0);
    CHECK(run_cli("").exit_code == 1);          // a subcommand is required
    CHECK(run_cli("frobnicate").exit_code == 1);
}
