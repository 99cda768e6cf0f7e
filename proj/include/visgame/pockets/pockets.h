#pragma once

#include "visgame/geom/polygon.h"
#include "visgame/geom/visibility.h"
#include "visgame/graphgame/graph.h"

#include <optional>
#include <stdexcept>
#include <vector>

namespace visgame::pockets {

using geom::Point;
using geom::Polygon;

/// A claimed structural fact about the polygon failed to hold. Distinct from
/// input errors so that callers can surface it as a diagnostic.
class TheoremViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Pocket(u, v): cut off by extending edge uv beyond the reflex vertex v to
/// the boundary point t. The region is the boundary chain from v to t that
/// avoids u, closed by the mouth tv. It is counterclockwise and may be
/// weakly simple when the mouth grazes a vertex.
struct Pocket {
    std::size_t u = 0;
    std::size_t v = 0;
    Point t;
    Polygon region = Polygon::unchecked({});
};

/// Throws std::invalid_argument if uv is not a polygon edge; empty if v is
/// not reflex.
std::optional<Pocket> pocket(const Polygon& poly, std::size_t u, std::size_t v);

/// Every pocket of the polygon, two candidate directions per edge.
std::vector<Pocket> all_pockets(const Polygon& poly);

/// Exact containment of closed regions: every edge of `inner` lies in `outer`.
bool region_contains(const Polygon& outer, const Polygon& inner);

/// Pockets not properly contained in another pocket.
std::vector<Pocket> maximal_pockets(const Polygon& poly);

/// Two pockets from the list whose u-vertices do not see each other.
std::optional<std::pair<std::size_t, std::size_t>> invisible_u_pair(const Polygon& poly,
                                                                   const std::vector<Pocket>& pockets);

struct Edge {
    std::size_t u = 0;
    std::size_t v = 0;
    bool operator==(const Edge&) const = default;
};

/// All edges of a convex polygon, otherwise the uv edges of maximal pockets.
std::vector<Edge> visibility_increasing_edges(const Polygon& poly);

/// Points used to compare visibility regions: vertices, edge midpoints and
/// midpoints of vertex-vertex visibility segments.
std::vector<Point> nesting_test_points(const Polygon& poly);

/// Checks V(p_i) ⊆ V(p_j) on the test points for parameters 0 = s_0 < ... <
/// s_{k+1} = 1 along uv (k interior samples, evenly spaced).
bool check_visibility_nesting(const Polygon& poly, const Edge& e, int interior_samples = 11);

struct DismantlingStep {
    std::size_t removed = 0;    ///< original index of the ear tip u
    std::size_t dominator = 0;  ///< original index of v
};

struct GeometricDismantling {
    std::vector<DismantlingStep> ear_steps;
    /// Ear removals followed by the vertices of the final convex polygon.
    graphgame::DismantleCertificate certificate;
};

/// Removes ears at the tips of maximal pockets until the polygon is convex.
/// Each step re-verifies that v dominates u; for polygons with at most
/// `exact_recheck_limit` vertices the smaller polygon's visibility graph is
/// also compared with the induced subgraph. Throws TheoremViolation when
/// either check fails.
GeometricDismantling geometric_dismantling(const Polygon& poly, std::size_t exact_recheck_limit = 14);

graphgame::Graph to_graph(const geom::VisGraph& vg);

}  // namespace visgame::pockets
