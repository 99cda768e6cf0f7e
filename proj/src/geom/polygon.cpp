#include "visgame/geom/polygon.h"

#include <algorithm>

namespace visgame::geom {

std::string to_string(Location loc) {
    switch (loc) {
        case Location::Interior: return "Interior";
        case Location::Boundary: return "Boundary";
        case Location::Exterior: return "Exterior";
    }
    return "?";
}

Scalar doubled_signed_area(const std::vector<Point>& v) {
    Scalar a = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        const Point& p = v[i];
        const Point& q = v[(i + 1) % v.size()];
        a += p.x * q.y - p.y * q.x;
    }
    return a;
}

void validate_simple_ccw(const std::vector<Point>& v) {
    const std::size_t n = v.size();
    if (n < 3) throw InvalidPolygon("polygon needs at least 3 vertices");
    std::vector<Point> sorted = v;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw InvalidPolygon("repeated vertex");
    for (std::size_t i = 0; i < n; ++i) {
        const Point& a = v[i];
        const Point& b = v[(i + 1) % n];
        const Point& c = v[(i + 2) % n];
        if (orient(a, b, c) == Orientation::Collinear && dot(a - b, c - b) > 0)
            throw InvalidPolygon("edges fold back at vertex " + std::to_string((i + 1) % n));
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 2; j < n; ++j) {
            if (i == 0 && j == n - 1) continue;
            if (segments_intersect(v[i], v[(i + 1) % n], v[j], v[(j + 1) % n]))
                throw InvalidPolygon("edges " + std::to_string(i) + " and " + std::to_string(j) +
                                     " intersect");
        }
    }
    Scalar area = doubled_signed_area(v);
    if (area == 0) throw InvalidPolygon("zero area");
    if (area < 0) throw InvalidPolygon("vertices are clockwise");
}

Polygon::Polygon(std::vector<Point> ccw_vertices) : vertices_(std::move(ccw_vertices)) {
    validate_simple_ccw(vertices_);
}

Polygon Polygon::from_any_orientation(std::vector<Point> vertices) {
    if (vertices.size() >= 3 && doubled_signed_area(vertices) < 0)
        std::reverse(vertices.begin(), vertices.end());
    return Polygon(std::move(vertices));
}

Polygon Polygon::unchecked(std::vector<Point> vertices) { return Polygon(std::move(vertices), NoCheck{}); }

bool Polygon::is_reflex(std::size_t i) const {
    return orient(vertices_[prev(i)], vertices_[i], vertices_[next(i)]) == Orientation::Right;
}

bool Polygon::is_convex() const {
    for (std::size_t i = 0; i < size(); ++i)
        if (is_reflex(i)) return false;
    return true;
}

Scalar Polygon::doubled_area() const { return doubled_signed_area(vertices_); }

std::size_t Polygon::find_vertex(const Point& p) const {
    for (std::size_t i = 0; i < size(); ++i)
        if (vertices_[i] == p) return i;
    return size();
}

Location point_location(const Point& p, const Polygon& poly) {
    const std::size_t n = poly.size();
    int winding = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const Point& a = poly[i];
        const Point& b = poly[poly.next(i)];
        if (on_segment(p, a, b)) return Location::Boundary;
        if (a.y <= p.y) {
            if (b.y > p.y && orient(a, b, p) == Orientation::Left) ++winding;
        } else if (b.y <= p.y && orient(a, b, p) == Orientation::Right) {
            --winding;
        }
    }
    return winding != 0 ? Location::Interior : Location::Exterior;
}

std::vector<Scalar> boundary_params(const Point& origin, const Point& dir, const Polygon& poly,
                                    bool bounded) {
    std::vector<Scalar> params;
    Point far = origin + dir;
    for (std::size_t i = 0; i < poly.size(); ++i)
        line_segment_params(origin, far, poly[i], poly[poly.next(i)], bounded, params);
    std::sort(params.begin(), params.end());
    params.erase(std::unique(params.begin(), params.end()), params.end());
    return params;
}

bool segment_inside(const Point& a, const Point& b, const Polygon& poly) {
    if (a == b) return point_location(a, poly) != Location::Exterior;
    std::vector<Scalar> params = boundary_params(a, b - a, poly, true);
    if (params.empty() || params.front() != 0) params.insert(params.begin(), Scalar(0));
    if (params.back() != 1) params.emplace_back(1);
    if (point_location(a, poly) == Location::Exterior || point_location(b, poly) == Location::Exterior)
        return false;
    for (std::size_t k = 0; k + 1 < params.size(); ++k) {
        Scalar mid = (params[k] + params[k + 1]) / 2;
        if (point_location(lerp(a, b, mid), poly) == Location::Exterior) return false;
    }
    return true;
}

bool sees(const Point& a, const Point& b, const Polygon& poly) {
    if (point_location(a, poly) == Location::Exterior || point_location(b, poly) == Location::Exterior)
        throw PreconditionViolation("sees: endpoint outside polygon: " + to_string(a) + " / " + to_string(b));
    return segment_inside(a, b, poly);
}

Scalar ray_extent(const Point& origin, const Point& dir, const Polygon& poly) {
    if (dir == Point(0, 0)) throw PreconditionViolation("ray_extent: zero direction from " + to_string(origin));
    std::vector<Scalar> params = boundary_params(origin, dir, poly, false);
    Scalar reached = 0;
    for (const Scalar& t : params) {
        if (t == 0) continue;
        Scalar mid = (reached + t) / 2;
        if (point_location(origin + mid * dir, poly) == Location::Exterior) return reached;
        reached = t;
    }
    return reached;
}

}  // namespace visgame::geom
