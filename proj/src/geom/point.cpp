#include "visgame/geom/point.h"

#include <algorithm>
#include <vector>

namespace visgame::geom {

std::string to_string(const Point& p) {
    return "(" + format_scalar(p.x) + ", " + format_scalar(p.y) + ")";
}

std::ostream& operator<<(std::ostream& os, const Point& p) { return os << to_string(p); }

Orientation orient(const Point& p, const Point& q, const Point& r) {
    Scalar det = (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x);
    return static_cast<Orientation>(sgn(det));
}

bool on_segment(const Point& p, const Point& a, const Point& b) {
    if (orient(a, b, p) != Orientation::Collinear) return false;
    return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
           std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
}

bool segments_intersect(const Point& a, const Point& b, const Point& c, const Point& d) {
    int o1 = static_cast<int>(orient(a, b, c));
    int o2 = static_cast<int>(orient(a, b, d));
    int o3 = static_cast<int>(orient(c, d, a));
    int o4 = static_cast<int>(orient(c, d, b));
    if (o1 * o2 < 0 && o3 * o4 < 0) return true;
    return on_segment(c, a, b) || on_segment(d, a, b) || on_segment(a, c, d) ||
           on_segment(b, c, d);
}

void line_segment_params(const Point& a, const Point& b, const Point& c, const Point& d,
                         bool bounded, std::vector<Scalar>& out) {
    Point dir = b - a;
    Point edge = d - c;
    Scalar denom = cross(dir, edge);
    auto accept = [&](const Scalar& t) { return t >= 0 && (!bounded || t <= 1); };
    if (denom != 0) {
        Point ac = c - a;
        Scalar t = cross(ac, edge) / denom;
        Scalar u = cross(ac, dir) / denom;
        if (u >= 0 && u <= 1 && accept(t)) out.push_back(std::move(t));
        return;
    }
    if (orient(a, b, c) != Orientation::Collinear) return;
    Scalar len2 = dot(dir, dir);
    Scalar tc = dot(c - a, dir) / len2;
    Scalar td = dot(d - a, dir) / len2;
    if (accept(tc)) out.push_back(tc);
    if (accept(td)) out.push_back(td);
    // The overlap may also contain the origin or the far end.
    Scalar lo = std::min(tc, td), hi = std::max(tc, td);
    if (lo <= 0 && 0 <= hi) out.emplace_back(0);
    if (bounded && lo <= 1 && 1 <= hi) out.emplace_back(1);
}

}  // namespace visgame::geom
