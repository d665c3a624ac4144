#pragma once

#include <sstream>
#include <string>
#include <vector>

#include "hilbert/geometry.hpp"
#include "hilbert/io.hpp"
#include "hilbert/polygon.hpp"

namespace hilbert {

// Minimal SVG rendering: the domain polygon plus any number of closed
// polylines (metric balls, images of curves). Geometry is emitted with full
// precision; the y axis is flipped so the picture matches the usual
// mathematical orientation.
class SvgCanvas {
public:
    SvgCanvas(Vec2 lo, Vec2 hi) : lo_(lo), hi_(hi) {}

    void add_polygon(const ConvexPolygon& poly, const std::string& stroke,
                     const std::string& fill = "none") {
        std::vector<Point2> pts(poly.vertices().begin(), poly.vertices().end());
        add_closed_polyline(pts, stroke, fill);
    }

    void add_closed_polyline(const std::vector<Point2>& pts, const std::string& stroke,
                             const std::string& fill = "none") {
        add_polyline(pts, stroke, fill, true);
    }

    void add_polyline(const std::vector<Point2>& pts, const std::string& stroke,
                      const std::string& fill = "none", bool closed = false) {
        if (pts.empty()) return;
        std::ostringstream path;
        for (std::size_t i = 0; i < pts.size(); ++i) {
            path << (i == 0 ? "M " : "L ") << fmt17(pts[i].x) << ' ' << fmt17(-pts[i].y) << ' ';
        }
        if (closed) {
            path << 'Z';
        }
        paths_.push_back({path.str(), stroke, fill});
        for (const Point2& p : pts) {
            lo_.x = std::min(lo_.x, p.x);
            lo_.y = std::min(lo_.y, p.y);
            hi_.x = std::max(hi_.x, p.x);
            hi_.y = std::max(hi_.y, p.y);
        }
    }

    std::string render() const {
        const double w = hi_.x - lo_.x;
        const double h = hi_.y - lo_.y;
        const double pad = 0.05 * std::max(w, h);
        std::ostringstream svg;
        svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << fmt17(lo_.x - pad) << ' '
            << fmt17(-hi_.y - pad) << ' ' << fmt17(w + 2.0 * pad) << ' ' << fmt17(h + 2.0 * pad)
            << "\">\n";
        const double stroke_width = 0.004 * std::max(w, h);
        for (const Path& p : paths_) {
            svg << "  <path d=\"" << p.d << "\" stroke=\"" << p.stroke << "\" fill=\"" << p.fill
                << "\" stroke-width=\"" << fmt17(stroke_width) << "\"/>\n";
        }
        svg << "</svg>\n";
        return svg.str();
    }

private:
    struct Path {
        std::string d, stroke, fill;
    };

    Vec2 lo_, hi_;
    std::vector<Path> paths_;
};

} // namespace hilbert
