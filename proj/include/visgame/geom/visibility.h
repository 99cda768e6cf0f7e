#pragma once

#include "visgame/geom/polygon.h"

#include <utility>
#include <vector>

namespace visgame::geom {

struct Segment {
    Point a;
    Point b;
};

/// V(x): the points of the host polygon visible from a viewpoint. The main
/// boundary may be weakly simple (it can pass through the viewpoint); spurs
/// are one-dimensional pieces hanging off it where the viewpoint is
/// collinear with a pair of vertices.
struct VisRegion {
    Point viewpoint;
    std::vector<Point> boundary;
    std::vector<Segment> spurs;

    [[nodiscard]] bool contains(const Point& p) const;
    /// True iff the closed segment ab meets the region.
    [[nodiscard]] bool meets_segment(const Point& a, const Point& b) const;
};

VisRegion visibility_polygon(const Point& x, const Polygon& poly);

/// Visibility graph on polygon vertex indices. Edges are (i, j) with i < j,
/// sorted.
struct VisGraph {
    std::size_t n = 0;
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    std::vector<std::vector<bool>> adjacent;

    [[nodiscard]] bool has_edge(std::size_t i, std::size_t j) const { return adjacent[i][j]; }
};

VisGraph visibility_graph(const Polygon& poly);

/// Counterclockwise angular order of direction vectors, starting at +x.
bool angular_less(const Point& a, const Point& b);

}  // namespace visgame::geom
