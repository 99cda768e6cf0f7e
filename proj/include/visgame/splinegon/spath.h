#pragma once

#include "visgame/splinegon/splinegon.h"

#include <cstddef>
#include <optional>
#include <vector>

namespace visgame::splinegon {

/// Straight piece, or a stretch along a concave boundary arc.
struct PathPiece {
    Vec2 from;
    Vec2 to;
    std::optional<std::size_t> arc;  ///< boundary edge followed, if any
};

struct SplinePath {
    std::vector<PathPiece> pieces;
    double length = 0;

    /// Start of each piece followed by the end of the last.
    [[nodiscard]] std::vector<Vec2> points() const;
};

/// Shortest paths by search over the tangent graph: vertices, tangent points
/// of vertices and bitangent points of concave arcs (static), plus the
/// query points and their tangent points. Straight edges join mutually
/// visible nodes along tangent lines; arc edges join consecutive nodes on a
/// concave arc.
class TangentGraph {
public:
    explicit TangentGraph(const Splinegon& region);

    [[nodiscard]] const Splinegon& region() const { return *region_; }
    [[nodiscard]] std::size_t static_node_count() const { return nodes_.size(); }

    /// Locally shortest path with collinear straight pieces merged and empty
    /// pieces dropped. Equal-length routes are resolved by node order.
    /// Throws StrategyViolation if s or t is outside or no path exists.
    [[nodiscard]] SplinePath shortest_path(Vec2 s, Vec2 t) const;

private:
    struct Member {
        std::size_t arc;
        double s;
    };
    struct Node {
        Vec2 p;
        std::vector<Member> on;
    };
    struct Link {
        std::size_t a;
        std::size_t b;
    };

    std::size_t add_node(std::vector<Node>& nodes, Vec2 p) const;
    void add_tangent_links(std::vector<Node>& nodes, std::vector<Link>& links, std::size_t from) const;

    const Splinegon* region_;
    std::vector<std::size_t> concave_;
    std::vector<Node> nodes_;
    std::vector<Link> links_;
};

/// Convenience: builds the graph and answers one query.
SplinePath splinegon_shortest_path(Vec2 s, Vec2 t, const Splinegon& region);

}  // namespace visgame::splinegon
