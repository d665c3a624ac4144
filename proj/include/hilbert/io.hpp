#pragma once

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "hilbert/error.hpp"
#include "hilbert/geometry.hpp"
#include "hilbert/polygon.hpp"

namespace hilbert {

// Shortest round-trip-safe decimal rendering of a double. %.17g is exact for
// binary64, so text produced with this helper reloads bit-identically.
inline std::string fmt17(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

// Polygon files are JSON objects {"vertices": [[x, y], ...]}; validation
// (orientation, convexity, degeneracy) happens in validate_polygon.
inline ConvexPolygon polygon_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("vertices") || !j["vertices"].is_array()) {
        throw Error(ErrorKind::BadConfig, "expected an object with a \"vertices\" array");
    }
    std::vector<Vec2> vertices;
    vertices.reserve(j["vertices"].size());
    for (const auto& row : j["vertices"]) {
        if (!row.is_array() || row.size() != 2 || !row[0].is_number() || !row[1].is_number()) {
            throw Error(ErrorKind::BadConfig, "each vertex must be a [x, y] number pair");
        }
        vertices.push_back({row[0].get<double>(), row[1].get<double>()});
    }
    return validate_polygon(std::move(vertices));
}

inline ConvexPolygon load_polygon(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::BadConfig, "cannot open polygon file: " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorKind::BadConfig, "invalid JSON in " + path + ": " + e.what());
    }
    return polygon_from_json(j);
}

inline nlohmann::ordered_json polygon_to_json(const ConvexPolygon& poly) {
    nlohmann::ordered_json j;
    j["vertices"] = nlohmann::ordered_json::array();
    for (const Vec2& v : poly.vertices()) j["vertices"].push_back({v.x, v.y});
    return j;
}

} // namespace hilbert
