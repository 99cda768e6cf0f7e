#pragma once

#include "visgame/splinegon/splinegon.h"

#include <optional>
#include <string>
#include <vector>

namespace visgame::splinegon {

enum class StopLineKind { CommonTangent, EndpointTangent, RobberExitLine };

std::string to_string(StopLineKind kind);

/// A line segment at which the cop may stop.
struct StopLine {
    StopLineKind kind = StopLineKind::CommonTangent;
    Vec2 a;
    Vec2 b;
    std::vector<Vec2> tangent_points;
};

/// Points of a circle where the tangent passes through p: none when p is
/// inside, p itself when p is on the circle, two points otherwise. Each
/// point gets one Newton step on the tangency condition.
std::vector<Vec2> circle_tangent_points(Vec2 p, Vec2 center, double radius);

/// Tangent point pairs (on the first circle, on the second) of the lines
/// tangent to both circles: up to two outer and two inner ones.
std::vector<std::pair<Vec2, Vec2>> circle_bitangents(Vec2 c1, double r1, Vec2 c2, double r2);

/// Segments from p tangent to edge e, ending at the tangent point and lying
/// in the region. For a segment edge the candidates are its endpoints. When
/// p lies on an arc the tangent line at p is returned, extended both ways to
/// the region's boundary.
std::vector<StopLine> tangents_from_point(Vec2 p, const ArcEdge& e, const Splinegon& region);

/// The line through p along dir stays in the region near x: the boundary
/// around x lies on at most one side of it.
bool locally_tangent(const Splinegon& region, Vec2 x, Vec2 dir);

/// Endpoint tangents of every edge plus the lines tangent to the region at
/// two points (concave arcs and vertices), each extended both ways until it
/// leaves the region. Duplicates are removed.
std::vector<StopLine> common_tangents(const Splinegon& region);

/// Robber exit line with the bay behind its tangent point.
struct ExitLine {
    StopLine line;      ///< from the robber to the tangent point
    double ray_t = 0;   ///< where it crosses the ray, as a distance along it
    Vec2 bay_end;       ///< where the extension past the tangent point leaves the region
    /// A region vertex on the bay's boundary chain.
    std::optional<std::size_t> bay_vertex;
};

/// Tangent segments from r that cross the ray origin + t*unit_dir (t > 0)
/// and whose boundary contact at the tangent point lies on the side of the
/// segment the ray is heading into.
std::vector<ExitLine> robber_exit_lines(Vec2 r, Vec2 origin, Vec2 unit_dir, const Splinegon& region);

nlohmann::json stop_line_to_json(const StopLine& line);

}  // namespace visgame::splinegon
