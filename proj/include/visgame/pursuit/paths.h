#pragma once

#include "visgame/geom/polygon.h"
#include "visgame/geom/visibility.h"

#include <boost/multiprecision/mpfr.hpp>

#include <optional>
#include <vector>

namespace visgame::pursuit {

using geom::Point;
using geom::Polygon;
using geom::Scalar;
using Real = boost::multiprecision::mpfr_float_50;

/// Euclidean length to 50 significant digits.
Real length(const Point& a, const Point& b);

struct PathResult {
    std::vector<Point> waypoints;
    Real length = 0;
};

/// Reflex vertices and their mutual visibility, reused across queries on the
/// same polygon.
class PathIndex {
public:
    explicit PathIndex(Polygon poly);

    [[nodiscard]] const Polygon& polygon() const { return poly_; }
    [[nodiscard]] const std::vector<std::size_t>& reflex() const { return reflex_; }
    [[nodiscard]] bool reflex_sees(std::size_t i, std::size_t j) const { return sees_[i][j]; }

private:
    Polygon poly_;
    std::vector<std::size_t> reflex_;
    std::vector<std::vector<bool>> sees_;
};

/// Shortest paths from a fixed source to the reflex vertices. Ties within a
/// relative 1e-40 are broken by fewer waypoints, then by the lexicographic
/// order of the predecessor.
class ShortestPathTree {
public:
    /// Throws geom::PreconditionViolation for an exterior source.
    ShortestPathTree(Point source, const PathIndex& index);

    [[nodiscard]] const Point& source() const { return source_; }
    [[nodiscard]] const PathIndex& index() const { return *index_; }
    /// Path from the source to t; the prefixes of any two paths agree.
    [[nodiscard]] PathResult path_to(const Point& t) const;

private:
    static constexpr std::size_t none = static_cast<std::size_t>(-1);

    const PathIndex* index_;
    Point source_;
    std::vector<std::optional<Real>> dist_;
    std::vector<int> hops_;
    std::vector<std::size_t> pred_;
};

/// Shortest Euclidean path from s to t inside the polygon. Interior
/// waypoints are reflex vertices, and none is a straight pass-through.
/// Near-equal lengths (relative 1e-40) are tied and broken by fewer
/// waypoints, then by lexicographic waypoint order.
/// Throws geom::PreconditionViolation for exterior endpoints.
PathResult shortest_path(const Point& s, const Point& t, const PathIndex& index);
PathResult shortest_path(const Point& s, const Point& t, const Polygon& poly);

/// Minimum number of segments of a polygonal path from s to t (0 if s = t).
/// Greedy windows: each stage extends the funnel edge at the apex of the
/// geodesics from t to the current window's endpoints.
int link_distance(const Point& s, const Point& t, const PathIndex& index);
int link_distance(const Point& s, const Point& t, const Polygon& poly);
/// Same, reusing visibility_polygon(t) and the shortest-path tree rooted at t.
int link_distance(const Point& s, const geom::VisRegion& from_t, const ShortestPathTree& tree);

}  // namespace visgame::pursuit
