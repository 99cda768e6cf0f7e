#pragma once

#include "visgame/geom/polygon.h"

#include <json.hpp>

namespace visgame::geom {

/// A coordinate may be a "p/q" string, a decimal string, or a JSON number.
Scalar scalar_from_json(const nlohmann::json& j);
nlohmann::json scalar_to_json(const Scalar& s);

Point point_from_json(const nlohmann::json& j);
nlohmann::json point_to_json(const Point& p);

/// { "vertices": [[x, y], ...] }. Either orientation is accepted; the result
/// is counterclockwise. Throws InvalidPolygon on malformed or non-simple input.
Polygon polygon_from_json(const nlohmann::json& j);
nlohmann::json polygon_to_json(const Polygon& poly);

}  // namespace visgame::geom
