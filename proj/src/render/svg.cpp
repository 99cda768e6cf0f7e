#include "visgame/render/svg.h"

#include "visgame/geom/scalar.h"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <limits>
#include <sstream>

namespace visgame::render {

namespace {

using splinegon::Vec2;

Vec2 to_vec(const geom::Point& p) { return {geom::to_double(p.x), geom::to_double(p.y)}; }

std::vector<Vec2> to_vecs(const std::vector<geom::Point>& pts) {
    std::vector<Vec2> out;
    out.reserve(pts.size());
    for (const geom::Point& p : pts) out.push_back(to_vec(p));
    return out;
}

std::string num(double v) {
    std::ostringstream s;
    s << std::setprecision(6) << (std::abs(v) < 1e-12 ? 0.0 : v);
    return s.str();
}

/// Accumulates elements in math coordinates (y up) and writes a document
/// whose view box fits everything drawn.
class Canvas {
public:
    explicit Canvas(const std::vector<Vec2>& extent_points) {
        for (Vec2 p : extent_points) {
            lo_ = {std::min(lo_.x, p.x), std::min(lo_.y, p.y)};
            hi_ = {std::max(hi_.x, p.x), std::max(hi_.y, p.y)};
        }
        if (extent_points.empty()) lo_ = hi_ = {0, 0};
        const double diag = std::max(splinegon::dist(lo_, hi_), 1e-6);
        stroke_ = 0.004 * diag;
        margin_ = 0.05 * diag;
    }

    [[nodiscard]] double stroke() const { return stroke_; }

    void path(const std::string& d, const std::string& fill, const std::string& stroke, double width_factor = 1,
              const std::string& extra = "") {
        body_ << "<path d=\"" << d << "\" fill=\"" << fill << "\" stroke=\"" << stroke << "\" stroke-width=\""
              << num(stroke_ * width_factor) << "\"" << extra << "/>\n";
    }

    void line(Vec2 a, Vec2 b, const std::string& stroke, double width_factor = 1, bool dashed = false) {
        body_ << "<line x1=\"" << num(a.x) << "\" y1=\"" << num(a.y) << "\" x2=\"" << num(b.x) << "\" y2=\""
              << num(b.y) << "\" stroke=\"" << stroke << "\" stroke-width=\"" << num(stroke_ * width_factor) << "\"";
        if (dashed) body_ << " stroke-dasharray=\"" << num(4 * stroke_) << "," << num(3 * stroke_) << "\"";
        body_ << "/>\n";
    }

    void dot(Vec2 p, const std::string& fill, double radius_factor = 2.5) {
        body_ << "<circle cx=\"" << num(p.x) << "\" cy=\"" << num(p.y) << "\" r=\"" << num(stroke_ * radius_factor)
              << "\" fill=\"" << fill << "\"/>\n";
    }

    /// Text is flipped back upright around its anchor.
    void label(Vec2 p, const std::string& text, const std::string& fill = "#333") {
        body_ << "<text x=\"" << num(p.x) << "\" y=\"" << num(-p.y) << "\" transform=\"scale(1,-1)\" font-size=\""
              << num(6 * stroke_) << "\" fill=\"" << fill << "\">" << text << "</text>\n";
    }

    [[nodiscard]] std::string str() const {
        const double w = hi_.x - lo_.x + 2 * margin_, h = hi_.y - lo_.y + 2 * margin_;
        std::ostringstream out;
        out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << num(lo_.x - margin_) << " "
            << num(-hi_.y - margin_) << " " << num(w) << " " << num(h) << "\" width=\"800\" height=\""
            << num(800 * h / w) << "\">\n<g transform=\"scale(1,-1)\">\n"
            << body_.str() << "</g>\n</svg>\n";
        return out.str();
    }

private:
    Vec2 lo_{std::numeric_limits<double>::infinity(), std::numeric_limits<double>::infinity()};
    Vec2 hi_{-std::numeric_limits<double>::infinity(), -std::numeric_limits<double>::infinity()};
    double stroke_ = 0.01;
    double margin_ = 0.1;
    std::ostringstream body_;
};

std::string polyline_d(const std::vector<Vec2>& pts, bool closed) {
    std::ostringstream d;
    for (std::size_t i = 0; i < pts.size(); ++i) d << (i == 0 ? "M" : " L") << num(pts[i].x) << " " << num(pts[i].y);
    if (closed) d << " Z";
    return d.str();
}

std::string splinegon_d(const splinegon::Splinegon& region) {
    std::ostringstream d;
    for (std::size_t i = 0; i < region.size(); ++i) {
        const splinegon::ArcEdge& e = region.edge(i);
        if (i == 0) d << "M" << num(e.from.x) << " " << num(e.from.y);
        if (e.is_arc())
            d << " A" << num(e.radius()) << " " << num(e.radius()) << " 0 0 " << (e.ccw ? 1 : 0) << " " << num(e.to.x)
              << " " << num(e.to.y);
        else
            d << " L" << num(e.to.x) << " " << num(e.to.y);
    }
    d << " Z";
    return d.str();
}

std::vector<Vec2> splinegon_extent(const splinegon::Splinegon& region) {
    std::vector<Vec2> pts;
    for (const splinegon::ArcEdge& e : region.edges())
        for (double s = 0; s <= 1.0; s += 0.125) pts.push_back(e.point_at(s));
    return pts;
}

const char* shade(std::size_t k) {
    static const char* palette[] = {"#4e79a7", "#f28e2b", "#59a14f", "#e15759", "#76b7b2", "#edc948", "#b07aa1"};
    return palette[k % 7];
}

}  // namespace

std::string polygon_svg(const geom::Polygon& poly) {
    const std::vector<Vec2> pts = to_vecs(poly.vertices());
    Canvas c(pts);
    c.path(polyline_d(pts, true), "#f4f4f4", "#222");
    for (std::size_t i = 0; i < pts.size(); ++i) {
        c.dot(pts[i], "#222", 1.5);
        c.label(pts[i], std::to_string(i));
    }
    return c.str();
}

std::string pockets_svg(const geom::Polygon& poly, const std::vector<pockets::Pocket>& pockets) {
    const std::vector<Vec2> pts = to_vecs(poly.vertices());
    Canvas c(pts);
    c.path(polyline_d(pts, true), "#f4f4f4", "#222");
    for (std::size_t k = 0; k < pockets.size(); ++k) {
        const pockets::Pocket& p = pockets[k];
        c.path(polyline_d(to_vecs(p.region.vertices()), true), shade(k), "none", 0, " fill-opacity=\"0.35\"");
        c.line(to_vec(poly[p.v]), to_vec(p.t), shade(k), 1.2, true);
        c.line(to_vec(poly[p.u]), to_vec(poly[p.v]), shade(k), 2);
    }
    for (std::size_t i = 0; i < pts.size(); ++i) c.label(pts[i], std::to_string(i));
    return c.str();
}

std::string polygon_trace_svg(const pursuit::GameTrace& trace) {
    const std::vector<Vec2> pts = to_vecs(trace.polygon.vertices());
    Canvas c(pts);
    c.path(polyline_d(pts, true), "#f4f4f4", "#222");
    std::size_t k = 0;
    for (const pursuit::RoundRecord& r : trace.rounds)
        if (r.active) {
            c.path(polyline_d(to_vecs(r.active->region.vertices()), true), shade(k++), "none", 0,
                   " fill-opacity=\"0.15\"");
            c.line(to_vec(r.active->cut_start), to_vec(r.active->cut_end), "#555", 1, true);
        }
    std::vector<Vec2> cop{to_vec(trace.cop_start)}, robber{to_vec(trace.robber_start)};
    for (const pursuit::RoundRecord& r : trace.rounds) {
        cop.push_back(to_vec(r.cop));
        if (r.robber) robber.push_back(to_vec(*r.robber));
    }
    c.path(polyline_d(cop, false), "none", "#1f4e9c", 1.5);
    c.path(polyline_d(robber, false), "none", "#b22222", 1.5);
    for (Vec2 p : cop) c.dot(p, "#1f4e9c");
    for (Vec2 p : robber) c.dot(p, "#b22222");
    return c.str();
}

std::string splinegon_svg(const splinegon::Splinegon& region) {
    Canvas c(splinegon_extent(region));
    c.path(splinegon_d(region), "#f4f4f4", "#222");
    for (std::size_t i = 0; i < region.size(); ++i) {
        c.dot(region.vertex(i), "#222", 1.5);
        c.label(region.vertex(i), std::to_string(i));
    }
    return c.str();
}

std::string splinegon_trace_svg(const splinegon::SplineTrace& trace) {
    Canvas c(splinegon_extent(trace.region));
    c.path(splinegon_d(trace.region), "#f4f4f4", "#222");
    std::size_t k = 0;
    for (const splinegon::SplineRound& r : trace.rounds) {
        if (r.active) {
            c.path(splinegon_d(r.active->region), shade(k++), "none", 0, " fill-opacity=\"0.15\"");
            c.line(r.active->cut_start, r.active->cut_end, "#555", 1, true);
        }
        c.line(r.move.from, r.move.to, "#1f4e9c", 1.5);
        c.dot(r.move.to, "#1f4e9c");
    }
    c.dot(trace.cop_start, "#1f4e9c", 3);
    std::vector<Vec2> robber{trace.robber_start};
    for (const splinegon::SplineRound& r : trace.rounds)
        if (r.robber) robber.push_back(*r.robber);
    c.path(polyline_d(robber, false), "none", "#b22222", 1.5);
    for (Vec2 p : robber) c.dot(p, "#b22222");
    return c.str();
}

}  // namespace visgame::render
