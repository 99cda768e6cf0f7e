#include "visgame/pursuit/game.h"

#include <algorithm>
#include <stdexcept>

namespace visgame::pursuit {

using geom::Location;
using geom::Orientation;

std::size_t corner_count(const Polygon& poly) {
    std::size_t count = 0;
    for (std::size_t i = 0; i < poly.size(); ++i)
        if (geom::orient(poly[poly.prev(i)], poly[i], poly[poly.next(i)]) != Orientation::Collinear) ++count;
    return count;
}

namespace {

/// Does the boundary at q (a point on the ray origin + t dir) have an edge
/// going to `side` of the ray?
bool edge_goes_to(const Polygon& poly, const Point& q, const Point& dir, Orientation side) {
    const Point ahead = q + dir;
    for (std::size_t i = 0; i < poly.size(); ++i) {
        const Point& a = poly[i];
        const Point& b = poly[poly.next(i)];
        if (!geom::on_segment(q, a, b)) continue;
        if (q == a || q == b) {
            const Point& other = q == a ? b : a;
            if (geom::orient(q, ahead, other) == side) return true;
        } else if (geom::orient(q, ahead, a) == side || geom::orient(q, ahead, b) == side) {
            return true;
        }
    }
    return false;
}

/// Does an edge through q run along the ray's line?
bool edge_along(const Polygon& poly, const Point& q, const Point& dir) {
    const Point ahead = q + dir;
    for (std::size_t i = 0; i < poly.size(); ++i) {
        const Point& a = poly[i];
        const Point& b = poly[poly.next(i)];
        if (!geom::on_segment(q, a, b)) continue;
        if (geom::orient(q, ahead, a) == Orientation::Collinear && geom::orient(q, ahead, b) == Orientation::Collinear)
            return true;
    }
    return false;
}

/// Inserts p into the boundary if it is not already a vertex; returns its index.
std::size_t insert_boundary_point(std::vector<Point>& pts, const Point& p) {
    for (std::size_t i = 0; i < pts.size(); ++i)
        if (pts[i] == p) return i;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        const Point& a = pts[i];
        const Point& b = pts[(i + 1) % pts.size()];
        if (geom::on_segment(p, a, b)) {
            pts.insert(pts.begin() + static_cast<std::ptrdiff_t>(i + 1), p);
            return i + 1;
        }
    }
    throw std::logic_error("active_region: chord endpoint not on the boundary " + geom::to_string(p));
}

/// Splits along the chord pq (interior except for its endpoints) and keeps
/// the side containing `keep`.
std::vector<Point> split_keep(std::vector<Point> pts, const Point& p, const Point& q, const Point& keep) {
    std::size_t ip = insert_boundary_point(pts, p);
    std::size_t iq = insert_boundary_point(pts, q);
    ip = static_cast<std::size_t>(std::find(pts.begin(), pts.end(), p) - pts.begin());
    auto chain = [&](std::size_t from, std::size_t to) {
        std::vector<Point> out;
        for (std::size_t k = from;; k = (k + 1) % pts.size()) {
            out.push_back(pts[k]);
            if (k == to) break;
        }
        return out;
    };
    std::vector<Point> first = chain(ip, iq);
    if (geom::point_location(keep, Polygon::unchecked(first)) != Location::Exterior) return first;
    return chain(iq, ip);
}

}  // namespace

ActiveRegion active_region(const PathIndex& index, const Point& prev_cop, const Point& new_cop, const Point& robber) {
    const Polygon& poly = index.polygon();
    PathResult path = shortest_path(prev_cop, robber, index);
    if (path.waypoints.size() < 3 || path.waypoints[1] != new_cop)
        throw geom::PreconditionViolation("active_region: the path to the robber does not bend at the new cop position");

    ActiveRegion out;
    out.cut_start = new_cop;
    out.turn = geom::orient(prev_cop, new_cop, path.waypoints[2]);
    // The robber lies on the turn side of the directed line c_{i-1} c_i, i.e.
    // opposite the turn as seen along the ray c_i -> c_{i-1}; the cut stops
    // where an edge goes to the other side, which in the ray's frame is the
    // turn side itself.
    const Orientation stop_side = out.turn;

    // Walk the ray from c_i through c_{i-1}.
    const Point dir = prev_cop - new_cop;
    const Scalar extent = geom::ray_extent(new_cop, dir, poly);
    Scalar stop = extent;
    for (const Scalar& t : geom::boundary_params(new_cop, dir, poly, false)) {
        if (t <= 0) continue;
        if (t >= extent) break;
        if (edge_goes_to(poly, new_cop + t * dir, dir, stop_side)) {
            stop = t;
            out.collinear_stop = edge_along(poly, new_cop + t * dir, dir);
            break;
        }
    }
    out.cut_end = new_cop + stop * dir;

    // Cut along every stretch of the segment that runs through the interior.
    std::vector<Point> pts = poly.vertices();
    const Point span = out.cut_end - new_cop;
    std::vector<Scalar> params = geom::boundary_params(new_cop, span, poly, true);
    for (std::size_t k = 0; k + 1 < params.size(); ++k) {
        Point p = new_cop + params[k] * span;
        Point q = new_cop + params[k + 1] * span;
        Point mid = geom::midpoint(p, q);
        if (geom::point_location(mid, poly) != Location::Interior) continue;
        if (geom::point_location(mid, Polygon::unchecked(pts)) != Location::Interior) continue;
        pts = split_keep(std::move(pts), p, q, robber);
    }
    out.region = Polygon::unchecked(std::move(pts));
    out.vertex_count = corner_count(out.region);
    return out;
}

}  // namespace visgame::pursuit
