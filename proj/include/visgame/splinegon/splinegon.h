#pragma once

#include "visgame/splinegon/arc.h"

#include <json.hpp>

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace visgame::splinegon {

class InvalidSplinegon : public std::invalid_argument {
public:
    enum class Reason { Malformed, NotSimple, Clockwise, InfiniteLinkDiameter, LinkDiameterExceeded };

    InvalidSplinegon(Reason reason, const std::string& what) : std::invalid_argument(what), reason_(reason) {}
    [[nodiscard]] Reason reason() const { return reason_; }

private:
    Reason reason_;
};

/// Raised when a run contradicts a claim the strategy relies on.
class StrategyViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Bit flags for the sides of a directed line.
enum SideMask : int { NoSide = 0, LeftSide = 1, RightSide = 2 };

/// Simply connected region bounded by a counterclockwise chain of segments
/// and circular arcs. Vertex i is the start of edge i.
class Splinegon {
public:
    /// Validates the chain (closure, arc radii and extents, simplicity,
    /// orientation, no cusps) and checks that the sampled link diameter does
    /// not exceed d. Throws InvalidSplinegon.
    Splinegon(std::vector<ArcEdge> edges, int d);

    /// Skips validation; for pieces cut from a validated region.
    static Splinegon unchecked(std::vector<ArcEdge> edges, int d = 0);

    [[nodiscard]] const std::vector<ArcEdge>& edges() const { return edges_; }
    [[nodiscard]] const ArcEdge& edge(std::size_t i) const { return edges_[i]; }
    [[nodiscard]] std::size_t size() const { return edges_.size(); }
    [[nodiscard]] int link_diameter_bound() const { return d_; }
    [[nodiscard]] Vec2 vertex(std::size_t i) const { return edges_[i].from; }
    [[nodiscard]] std::vector<Vec2> vertices() const;
    [[nodiscard]] std::size_t next(std::size_t i) const { return i + 1 == size() ? 0 : i + 1; }
    [[nodiscard]] std::size_t prev(std::size_t i) const { return i == 0 ? size() - 1 : i - 1; }

    [[nodiscard]] double area() const;
    /// Diagonal of the bounding box of the vertices and arc extremes.
    [[nodiscard]] double scale() const;
    /// Index of a vertex within tol of p.
    [[nodiscard]] std::optional<std::size_t> vertex_at(Vec2 p, double tol = 10 * eps) const;
    /// The boundary turns right at vertex i (interior angle above 180 degrees).
    [[nodiscard]] bool reflex_vertex(std::size_t i) const;

    [[nodiscard]] double boundary_distance(Vec2 p) const;
    [[nodiscard]] bool on_boundary(Vec2 p, double tol = 10 * eps) const;
    /// Closed containment: boundary points within the tolerance count.
    [[nodiscard]] bool contains(Vec2 p) const;
    /// Segment pq lies in the closed region (touching the boundary allowed).
    [[nodiscard]] bool sees(Vec2 p, Vec2 q) const;
    /// Parameters t where the line p + t*dir meets the boundary, sorted, with
    /// meetings closer than the tolerance merged.
    [[nodiscard]] std::vector<double> line_contacts(Vec2 p, Vec2 dir) const;
    /// Distance from p along the unit direction dir before the ray leaves the
    /// closed region (0 if it leaves at once).
    [[nodiscard]] double ray_extent(Vec2 p, Vec2 unit_dir) const;
    /// Sides of the directed line through x along dir on which the boundary
    /// has points arbitrarily close to x (a SideMask).
    [[nodiscard]] int local_sides(Vec2 x, Vec2 dir) const;

    /// Edge and parameter of the boundary point nearest to p.
    [[nodiscard]] std::pair<std::size_t, double> locate(Vec2 p) const;

private:
    struct NoCheck {};
    Splinegon(std::vector<ArcEdge> edges, int d, NoCheck) : edges_(std::move(edges)), d_(d) {}
    void validate() const;

    std::vector<ArcEdge> edges_;
    int d_ = 0;
};

/// Boundary samples (vertices and points along each edge) plus interior grid
/// points, used to estimate link distances.
std::vector<Vec2> link_samples(const Splinegon& region);

/// Largest BFS distance in the visibility graph of the link samples, or -1
/// if the graph is disconnected.
int sampled_link_diameter(const Splinegon& region);

/// Fewest-links path from a to b through the link samples (a and b
/// included).
std::vector<Vec2> sampled_link_path(const Splinegon& region, Vec2 a, Vec2 b);

nlohmann::json vec_to_json(Vec2 p);
Vec2 vec_from_json(const nlohmann::json& j);
nlohmann::json edge_to_json(const ArcEdge& e);
ArcEdge edge_from_json(const nlohmann::json& j);

/// { "edges": [{"kind": "arc"|"seg", "from", "to", "center", "ccw"}], "d" }.
nlohmann::json splinegon_to_json(const Splinegon& region);
/// Throws InvalidSplinegon on malformed or invalid input.
Splinegon splinegon_from_json(const nlohmann::json& j);

}  // namespace visgame::splinegon
