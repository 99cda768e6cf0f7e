#pragma once

#include "visgame/geom/polygon.h"

#include <random>
#include <vector>

namespace visgame::testing {

using geom::Point;
using geom::Polygon;
using geom::Scalar;

inline Point pt(const char* x, const char* y) { return {geom::parse_scalar(x), geom::parse_scalar(y)}; }

inline Polygon unit_square() { return Polygon({{0, 0}, {1, 0}, {1, 1}, {0, 1}}); }

/// v0..v5 = (0,0),(2,0),(2,1),(1,1),(1,2),(0,2); v3 is the only reflex vertex.
inline Polygon l_hexagon() { return Polygon({{0, 0}, {2, 0}, {2, 1}, {1, 1}, {1, 2}, {0, 2}}); }

/// Two opposing spikes whose tips (2,1) and (3,1) line up with (0,1), so the
/// visibility region of (0,1) carries a spur along y = 1.
inline Polygon pinhole_room() {
    return Polygon({pt("0", "0"), pt("3/2", "0"), pt("2", "1"), pt("5/2", "0"), pt("6", "0"),
                    pt("6", "2"), pt("7/2", "2"), pt("3", "1"), pt("5/2", "2"), pt("0", "2")});
}

/// Grid of points with the given denominator inside the bounding box.
inline std::vector<Point> grid_points(const Polygon& poly, long denominator) {
    Scalar minx = poly[0].x, maxx = poly[0].x, miny = poly[0].y, maxy = poly[0].y;
    for (const Point& p : poly.vertices()) {
        minx = std::min(minx, p.x); maxx = std::max(maxx, p.x);
        miny = std::min(miny, p.y); maxy = std::max(maxy, p.y);
    }
    std::vector<Point> out;
    Scalar step(1, denominator);
    for (Scalar x = minx; x <= maxx; x += step)
        for (Scalar y = miny; y <= maxy; y += step) out.push_back({x, y});
    return out;
}

/// Even-odd crossing count along a ray of irrational-free but generic slope
/// (direction (7919, 1)); boundary contact is detected separately. Written
/// independently of the library's winding-number implementation.
inline geom::Location oracle_location(const Point& p, const Polygon& poly) {
    using geom::Location;
    const Point dir(7919, 1);
    int crossings = 0;
    for (std::size_t i = 0; i < poly.size(); ++i) {
        const Point& a = poly[i];
        const Point& b = poly[poly.next(i)];
        Point ab = b - a;
        Scalar area = geom::cross(ab, p - a);
        if (area == 0 && std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
            std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y))
            return Location::Boundary;
        Scalar denom = geom::cross(dir, ab);
        if (denom == 0) continue;
        Scalar t = geom::cross(a - p, ab) / denom;   // along the ray
        Scalar u = geom::cross(a - p, dir) / denom;  // along the edge
        if (t > 0 && u >= 0 && u < 1) {
            if (u == 0) {
                // Ray through vertex a: count once using the sides of the
                // neighbouring endpoints relative to the ray line.
                const Point& before = poly[poly.prev(i)];
                int s0 = geom::sign(geom::cross(dir, before - p));
                int s1 = geom::sign(geom::cross(dir, b - p));
                if (s0 * s1 < 0) ++crossings;
                continue;
            }
            ++crossings;
        }
    }
    return crossings % 2 ? Location::Interior : Location::Exterior;
}

/// Visibility by dense exact sampling of the segment: every sample must be in
/// the polygon. Independent of the breakpoint method used by the library.
inline bool oracle_sees(const Point& a, const Point& b, const Polygon& poly, int samples = 240) {
    for (int k = 0; k <= samples; ++k) {
        Point q = geom::lerp(a, b, geom::ratio(k, samples));
        if (oracle_location(q, poly) == geom::Location::Exterior) return false;
    }
    return true;
}

}  // namespace visgame::testing
