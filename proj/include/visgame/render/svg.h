#pragma once

#include "visgame/pockets/pockets.h"
#include "visgame/pursuit/game.h"
#include "visgame/splinegon/game.h"

#include <string>
#include <vector>

namespace visgame::render {

/// Polygon outline with vertex indices.
std::string polygon_svg(const geom::Polygon& poly);

/// Polygon with each pocket shaded and its mouth drawn.
std::string pockets_svg(const geom::Polygon& poly, const std::vector<pockets::Pocket>& pockets);

/// Polygon game: shaded active regions, cut segments, cop and robber paths.
std::string polygon_trace_svg(const pursuit::GameTrace& trace);

/// Splinegon outline; arcs are drawn as SVG arcs.
std::string splinegon_svg(const splinegon::Splinegon& region);

/// Splinegon game: shaded active regions, the cop's rays and the cuts.
std::string splinegon_trace_svg(const splinegon::SplineTrace& trace);

}  // namespace visgame::render
