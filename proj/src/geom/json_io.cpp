#include "visgame/geom/json_io.h"

namespace visgame::geom {

Scalar scalar_from_json(const nlohmann::json& j) {
    if (j.is_string()) return parse_scalar(j.get<std::string>());
    if (j.is_number_integer()) return Scalar(std::to_string(j.get<long long>()));
    if (j.is_number()) return parse_scalar(j.dump());
    throw InvalidPolygon("coordinate must be a string or number");
}

nlohmann::json scalar_to_json(const Scalar& s) { return format_scalar(s); }

Point point_from_json(const nlohmann::json& j) {
    if (!j.is_array() || j.size() != 2) throw InvalidPolygon("point must be [x, y]");
    return {scalar_from_json(j[0]), scalar_from_json(j[1])};
}

nlohmann::json point_to_json(const Point& p) {
    return nlohmann::json::array({scalar_to_json(p.x), scalar_to_json(p.y)});
}

Polygon polygon_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("vertices") || !j["vertices"].is_array())
        throw InvalidPolygon("polygon JSON needs a \"vertices\" array");
    std::vector<Point> pts;
    try {
        for (const auto& v : j["vertices"]) pts.push_back(point_from_json(v));
    } catch (const std::invalid_argument& e) {
        throw InvalidPolygon(e.what());
    }
    return Polygon::from_any_orientation(std::move(pts));
}

nlohmann::json polygon_to_json(const Polygon& poly) {
    nlohmann::json verts = nlohmann::json::array();
    for (const Point& p : poly.vertices()) verts.push_back(point_to_json(p));
    return {{"vertices", verts}};
}

}  // namespace visgame::geom
