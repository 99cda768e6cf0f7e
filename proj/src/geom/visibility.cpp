#include "visgame/geom/visibility.h"

#include <algorithm>
#include <optional>

namespace visgame::geom {

namespace {

int half_plane(const Point& d) { return (d.y > 0 || (d.y == 0 && d.x > 0)) ? 0 : 1; }

bool same_direction(const Point& a, const Point& b) { return cross(a, b) == 0 && dot(a, b) > 0; }

Location raw_location(const Point& p, const std::vector<Point>& ring) {
    int winding = 0;
    for (std::size_t i = 0; i < ring.size(); ++i) {
        const Point& a = ring[i];
        const Point& b = ring[(i + 1) % ring.size()];
        if (on_segment(p, a, b)) return Location::Boundary;
        if (a.y <= p.y) {
            if (b.y > p.y && orient(a, b, p) == Orientation::Left) ++winding;
        } else if (b.y <= p.y && orient(a, b, p) == Orientation::Right) {
            --winding;
        }
    }
    return winding != 0 ? Location::Interior : Location::Exterior;
}

// Where the ray x + t d meets the supporting line of edge ab.
Scalar ray_line_param(const Point& x, const Point& d, const Point& a, const Point& b) {
    Point e = b - a;
    return cross(a - x, e) / cross(d, e);
}

struct Wedge {
    bool empty = true;
    Scalar start;  // parameter along the wedge's first ray
    Scalar end;    // parameter along the wedge's second ray
};

}  // namespace

bool angular_less(const Point& a, const Point& b) {
    int ha = half_plane(a), hb = half_plane(b);
    if (ha != hb) return ha < hb;
    return cross(a, b) > 0;
}

bool VisRegion::contains(const Point& p) const {
    for (const auto& s : spurs)
        if (on_segment(p, s.a, s.b)) return true;
    if (boundary.size() < 3) {
        for (std::size_t i = 0; i + 1 < boundary.size(); ++i)
            if (on_segment(p, boundary[i], boundary[i + 1])) return true;
        return !boundary.empty() && boundary.front() == p;
    }
    return raw_location(p, boundary) != Location::Exterior;
}

bool VisRegion::meets_segment(const Point& a, const Point& b) const {
    if (contains(a) || contains(b)) return true;
    for (const auto& s : spurs)
        if (segments_intersect(a, b, s.a, s.b)) return true;
    for (std::size_t i = 0; i < boundary.size(); ++i)
        if (segments_intersect(a, b, boundary[i], boundary[(i + 1) % boundary.size()])) return true;
    return false;
}

VisRegion visibility_polygon(const Point& x, const Polygon& poly) {
    if (point_location(x, poly) == Location::Exterior)
        throw PreconditionViolation("visibility_polygon: viewpoint outside polygon " + to_string(x));

    std::vector<Point> dirs;
    for (const Point& v : poly.vertices())
        if (v != x) dirs.push_back(v - x);
    std::sort(dirs.begin(), dirs.end(), angular_less);
    dirs.erase(std::unique(dirs.begin(), dirs.end(), same_direction), dirs.end());
    if (dirs.size() < 2) throw PreconditionViolation("visibility_polygon: degenerate polygon");

    const std::size_t k = dirs.size();
    std::vector<Scalar> depth(k);
    for (std::size_t i = 0; i < k; ++i) depth[i] = ray_extent(x, dirs[i], poly);

    std::vector<Wedge> wedges(k);
    for (std::size_t i = 0; i < k; ++i) {
        const Point& d0 = dirs[i];
        const Point& d1 = dirs[(i + 1) % k];
        Point probe = cross(d0, d1) > 0 ? d0 + d1 : Point(-d0.y, d0.x);
        Scalar reach = ray_extent(x, probe, poly);
        if (reach == 0) continue;
        Point hit = x + reach * probe;
        std::optional<std::size_t> edge;
        for (std::size_t e = 0; e < poly.size() && !edge; ++e)
            if (on_segment(hit, poly[e], poly[poly.next(e)])) edge = e;
        if (!edge) throw std::logic_error("visibility_polygon: wedge hit off boundary");
        const Point& a = poly[*edge];
        const Point& b = poly[poly.next(*edge)];
        wedges[i].empty = false;
        wedges[i].start = ray_line_param(x, d0, a, b);
        wedges[i].end = ray_line_param(x, d1, a, b);
    }

    VisRegion region;
    region.viewpoint = x;
    auto emit = [&](const Point& p) {
        if (region.boundary.empty() || region.boundary.back() != p) region.boundary.push_back(p);
    };
    for (std::size_t i = 0; i < k; ++i) {
        const Wedge& before = wedges[(i + k - 1) % k];
        const Wedge& after = wedges[i];
        Scalar in = before.empty ? Scalar(0) : before.end;
        Scalar out = after.empty ? Scalar(0) : after.start;
        emit(x + in * dirs[i]);
        emit(x + out * dirs[i]);
        Scalar deepest = std::max(in, out);
        if (depth[i] > deepest)
            region.spurs.push_back({x + deepest * dirs[i], x + depth[i] * dirs[i]});
    }
    if (region.boundary.size() > 1 && region.boundary.front() == region.boundary.back())
        region.boundary.pop_back();
    return region;
}

VisGraph visibility_graph(const Polygon& poly) {
    VisGraph g;
    g.n = poly.size();
    g.adjacent.assign(g.n, std::vector<bool>(g.n, false));
    for (std::size_t i = 0; i < g.n; ++i) {
        for (std::size_t j = i + 1; j < g.n; ++j) {
            bool boundary_edge = j == i + 1 || (i == 0 && j == g.n - 1);
            if (boundary_edge || segment_inside(poly[i], poly[j], poly)) {
                g.adjacent[i][j] = g.adjacent[j][i] = true;
                g.edges.emplace_back(i, j);
            }
        }
    }
    return g;
}

}  // namespace visgame::geom
