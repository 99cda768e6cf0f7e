#include "visgame/splinegon/splinegon.h"

#include <algorithm>
#include <deque>
#include <limits>

namespace visgame::splinegon {

namespace {

/// Tolerance for chaining endpoints and matching radii of input data.
constexpr double chain_tol = 1e-7;

double orient(Vec2 a, Vec2 b, Vec2 c) { return cross(b - a, c - a); }

bool segments_meet(Vec2 a0, Vec2 a1, Vec2 b0, Vec2 b1) {
    const double o1 = orient(a0, a1, b0), o2 = orient(a0, a1, b1);
    const double o3 = orient(b0, b1, a0), o4 = orient(b0, b1, a1);
    if (o1 * o2 > 0 || o3 * o4 > 0) return false;
    if (o1 == 0 && o2 == 0) {
        // Collinear: compare extents along the line.
        const Vec2 d = a1 - a0;
        const double s0 = dot(b0 - a0, d), s1 = dot(b1 - a0, d);
        return std::max(s0, s1) >= 0 && std::min(s0, s1) <= dot(d, d);
    }
    return true;
}

/// Signed curvature of an edge leaving x in direction u, positive when it
/// bends to the left of u.
double leaving_curvature(const ArcEdge& e, Vec2 x, Vec2 u) {
    if (!e.is_arc()) return 0;
    return side(x, u, e.center, 0) / e.radius();
}

std::vector<std::vector<std::size_t>> visibility_lists(const Splinegon& region, const std::vector<Vec2>& pts) {
    std::vector<std::vector<std::size_t>> adj(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j)
            if (region.sees(pts[i], pts[j])) {
                adj[i].push_back(j);
                adj[j].push_back(i);
            }
    return adj;
}

std::vector<int> bfs(const std::vector<std::vector<std::size_t>>& adj, std::size_t from, std::vector<std::size_t>* parent) {
    std::vector<int> dist(adj.size(), -1);
    if (parent) parent->assign(adj.size(), adj.size());
    std::deque<std::size_t> queue{from};
    dist[from] = 0;
    while (!queue.empty()) {
        const std::size_t u = queue.front();
        queue.pop_front();
        for (std::size_t v : adj[u])
            if (dist[v] < 0) {
                dist[v] = dist[u] + 1;
                if (parent) (*parent)[v] = u;
                queue.push_back(v);
            }
    }
    return dist;
}

}  // namespace

Splinegon::Splinegon(std::vector<ArcEdge> edges, int d) : edges_(std::move(edges)), d_(d) {
    validate();
    const int sampled = sampled_link_diameter(*this);
    if (sampled < 0)
        throw InvalidSplinegon(InvalidSplinegon::Reason::InfiniteLinkDiameter,
                               "infinite link diameter: link samples are not connected");
    if (sampled > d_)
        throw InvalidSplinegon(InvalidSplinegon::Reason::LinkDiameterExceeded,
                               "sampled link diameter " + std::to_string(sampled) + " exceeds d = " + std::to_string(d_));
}

Splinegon Splinegon::unchecked(std::vector<ArcEdge> edges, int d) { return Splinegon(std::move(edges), d, NoCheck{}); }

void Splinegon::validate() const {
    using Reason = InvalidSplinegon::Reason;
    const std::size_t n = edges_.size();
    if (n < 2) throw InvalidSplinegon(Reason::Malformed, "a splinegon needs at least two edges");
    if (d_ < 1) throw InvalidSplinegon(Reason::Malformed, "link diameter bound must be positive");
    const double tol = chain_tol * std::max(1.0, scale());
    for (std::size_t i = 0; i < n; ++i) {
        const ArcEdge& e = edges_[i];
        const std::string where = "edge " + std::to_string(i);
        for (Vec2 p : {e.from, e.to, e.center})
            if (!std::isfinite(p.x) || !std::isfinite(p.y))
                throw InvalidSplinegon(Reason::Malformed, where + ": non-finite coordinate");
        if (!near(e.to, edges_[next(i)].from, tol))
            throw InvalidSplinegon(Reason::Malformed, where + " does not end where edge " + std::to_string(next(i)) +
                                                          " starts");
        if (dist(e.from, e.to) <= 10 * eps) throw InvalidSplinegon(Reason::Malformed, where + " has zero length");
        if (e.is_arc()) {
            if (std::abs(dist(e.to, e.center) - e.radius()) > tol)
                throw InvalidSplinegon(Reason::Malformed, where + ": endpoints are not equidistant from the center");
            if (std::abs(e.sweep()) >= pi - 1e-9)
                throw InvalidSplinegon(Reason::Malformed, where + ": arc extent must be below 180 degrees");
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        const ArcEdge& in = edges_[prev(i)];
        const ArcEdge& out = edges_[i];
        const Vec2 t_in = in.tangent_at(1), t_out = out.tangent_at(0);
        if (dot(t_in, t_out) >= 0 || std::abs(cross(t_in, t_out)) > 1e-9) continue;
        const Vec2 v = out.from;
        const double k_in = leaving_curvature(in, v, t_out), k_out = leaving_curvature(out, v, t_out);
        const std::string where = "cusp at vertex " + std::to_string(i) + " " + to_string(v);
        if (k_in > k_out + 1e-12)
            throw InvalidSplinegon(Reason::InfiniteLinkDiameter, "infinite link diameter: " + where);
        throw InvalidSplinegon(Reason::NotSimple, "boundary folds back at the " + where);
    }
    std::vector<Vec2> poly;
    for (const ArcEdge& e : edges_) {
        const int pieces = e.is_arc() ? 24 : 1;
        for (int k = 0; k < pieces; ++k) poly.push_back(e.point_at(static_cast<double>(k) / pieces));
    }
    const std::size_t m = poly.size();
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = a + 2; b < m; ++b) {
            if (a == 0 && b == m - 1) continue;
            if (segments_meet(poly[a], poly[(a + 1) % m], poly[b], poly[(b + 1) % m]))
                throw InvalidSplinegon(Reason::NotSimple, "boundary is not simple near " + to_string(poly[a]));
        }
    if (area() <= 0) throw InvalidSplinegon(Reason::Clockwise, "boundary must be counterclockwise");
}

std::vector<Vec2> Splinegon::vertices() const {
    std::vector<Vec2> out;
    for (const ArcEdge& e : edges_) out.push_back(e.from);
    return out;
}

double Splinegon::area() const {
    double a = 0;
    for (const ArcEdge& e : edges_) a += e.doubled_area_term();
    return a / 2;
}

double Splinegon::scale() const {
    double lo_x = std::numeric_limits<double>::infinity(), lo_y = lo_x, hi_x = -lo_x, hi_y = -lo_x;
    for (const ArcEdge& e : edges_)
        for (double s : {0.0, 0.25, 0.5, 0.75}) {
            const Vec2 p = e.point_at(s);
            lo_x = std::min(lo_x, p.x), lo_y = std::min(lo_y, p.y);
            hi_x = std::max(hi_x, p.x), hi_y = std::max(hi_y, p.y);
        }
    return std::hypot(hi_x - lo_x, hi_y - lo_y);
}

std::optional<std::size_t> Splinegon::vertex_at(Vec2 p, double tol) const {
    for (std::size_t i = 0; i < size(); ++i)
        if (near(p, vertex(i), tol)) return i;
    return std::nullopt;
}

bool Splinegon::reflex_vertex(std::size_t i) const {
    return cross(edges_[prev(i)].tangent_at(1), edges_[i].tangent_at(0)) < -1e-9;
}

double Splinegon::boundary_distance(Vec2 p) const {
    double best = std::numeric_limits<double>::infinity();
    for (const ArcEdge& e : edges_) best = std::min(best, e.project(p).second);
    return best;
}

bool Splinegon::on_boundary(Vec2 p, double tol) const { return boundary_distance(p) <= tol; }

std::pair<std::size_t, double> Splinegon::locate(Vec2 p) const {
    std::size_t best = 0;
    double best_d = std::numeric_limits<double>::infinity(), best_s = 0;
    for (std::size_t i = 0; i < size(); ++i) {
        const auto [s, d] = edges_[i].project(p);
        if (d < best_d) best = i, best_d = d, best_s = s;
    }
    return {best, best_s};
}

bool Splinegon::contains(Vec2 p) const {
    if (on_boundary(p)) return true;
    // Angle swept by the arc of e between a and b as seen from p: the chord's
    // angle, plus a full turn when p lies between chord and arc.
    auto arc_angle = [&](const ArcEdge& e, Vec2 a, Vec2 b) {
        const Vec2 u = a - p, v = b - p;
        double angle = std::atan2(cross(u, v), dot(u, v));
        const Vec2 chord = b - a;
        const bool arc_side = cross(chord, p - a) * cross(chord, e.center - a) < 0;
        if (arc_side && dist(p, e.center) < e.radius()) angle += e.ccw ? 2 * pi : -2 * pi;
        return angle;
    };
    double winding = 0;
    for (const ArcEdge& e : edges_) {
        const Vec2 a = e.from - p, b = e.to - p;
        const double chord_angle = std::atan2(cross(a, b), dot(a, b));
        if (!e.is_arc()) {
            winding += chord_angle;
        } else if (std::abs(chord_angle) < pi - 1e-6) {
            winding += arc_angle(e, e.from, e.to);
        } else {
            // p is on the chord, where its angle is ambiguous; split the arc.
            const Vec2 mid = e.point_at(0.5);
            winding += arc_angle(e, e.from, mid) + arc_angle(e, mid, e.to);
        }
    }
    return std::lround(winding / (2 * pi)) != 0;
}

std::vector<double> Splinegon::line_contacts(Vec2 p, Vec2 dir) const {
    std::vector<std::pair<double, double>> hits;
    for (const ArcEdge& e : edges_) e.line_hits(p, dir, hits);
    std::vector<double> ts;
    for (const auto& h : hits) ts.push_back(h.first);
    std::sort(ts.begin(), ts.end());
    std::vector<double> out;
    const double merge = 10 * eps / norm(dir);
    for (double t : ts)
        if (out.empty() || t - out.back() > merge) out.push_back(t);
    return out;
}

bool Splinegon::sees(Vec2 p, Vec2 q) const {
    if (!contains(p) || !contains(q)) return false;
    if (near(p, q)) return true;
    const Vec2 d = q - p;
    const double tol = 10 * eps / norm(d);
    std::vector<double> params{0};
    for (double t : line_contacts(p, d))
        if (t > tol && t < 1 - tol) params.push_back(t);
    params.push_back(1);
    for (std::size_t k = 0; k + 1 < params.size(); ++k)
        if (!contains(p + 0.5 * (params[k] + params[k + 1]) * d)) return false;
    return true;
}

double Splinegon::ray_extent(Vec2 p, Vec2 unit_dir) const {
    double prev_t = 0;
    for (double t : line_contacts(p, unit_dir)) {
        if (t <= prev_t + 10 * eps) continue;
        if (!contains(p + 0.5 * (prev_t + t) * unit_dir)) return prev_t;
        prev_t = t;
    }
    return prev_t;
}

int Splinegon::local_sides(Vec2 x, Vec2 dir) const {
    const Vec2 u = unit(dir);
    int sides = NoSide;
    auto add = [&](const ArcEdge& e, Vec2 leaving) {
        const double c = cross(u, leaving);
        if (c > 1e-9) sides |= LeftSide;
        else if (c < -1e-9) sides |= RightSide;
        else if (e.is_arc()) sides |= side(x, u, e.center, 0) > 0 ? LeftSide : RightSide;
    };
    for (const ArcEdge& e : edges_) {
        const auto [s, d] = e.project(x);
        if (d > 10 * eps) continue;
        const double len = e.length();
        if ((1 - s) * len > 10 * eps) add(e, e.tangent_at(s));
        if (s * len > 10 * eps) add(e, -e.tangent_at(s));
    }
    return sides;
}

std::vector<Vec2> link_samples(const Splinegon& region) {
    std::vector<Vec2> pts = region.vertices();
    for (const ArcEdge& e : region.edges())
        for (double s : {0.25, 0.5, 0.75}) pts.push_back(e.point_at(s));
    double lo_x = std::numeric_limits<double>::infinity(), lo_y = lo_x, hi_x = -lo_x, hi_y = -lo_x;
    for (Vec2 p : pts) {
        lo_x = std::min(lo_x, p.x), lo_y = std::min(lo_y, p.y);
        hi_x = std::max(hi_x, p.x), hi_y = std::max(hi_y, p.y);
    }
    constexpr int grid = 8;
    for (int i = 0; i < grid; ++i)
        for (int j = 0; j < grid; ++j) {
            const Vec2 p{lo_x + (i + 0.5) * (hi_x - lo_x) / grid, lo_y + (j + 0.5) * (hi_y - lo_y) / grid};
            if (region.contains(p) && !region.on_boundary(p, 1e-6)) pts.push_back(p);
        }
    return pts;
}

int sampled_link_diameter(const Splinegon& region) {
    const std::vector<Vec2> pts = link_samples(region);
    const auto adj = visibility_lists(region, pts);
    int diameter = 0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        for (int d : bfs(adj, i, nullptr)) {
            if (d < 0) return -1;
            diameter = std::max(diameter, d);
        }
    }
    return diameter;
}

std::vector<Vec2> sampled_link_path(const Splinegon& region, Vec2 a, Vec2 b) {
    if (region.sees(a, b)) return {a, b};
    std::vector<Vec2> pts{a, b};
    for (Vec2 p : link_samples(region)) pts.push_back(p);
    const auto adj = visibility_lists(region, pts);
    std::vector<std::size_t> parent;
    const std::vector<int> d = bfs(adj, 0, &parent);
    if (d[1] < 0) throw StrategyViolation("no sampled link path from " + to_string(a) + " to " + to_string(b));
    std::vector<Vec2> path;
    for (std::size_t v = 1; v != 0; v = parent[v]) path.push_back(pts[v]);
    path.push_back(a);
    std::reverse(path.begin(), path.end());
    return path;
}

nlohmann::json vec_to_json(Vec2 p) { return nlohmann::json::array({p.x, p.y}); }

Vec2 vec_from_json(const nlohmann::json& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
        throw InvalidSplinegon(InvalidSplinegon::Reason::Malformed, "a point must be [x, y]");
    return {j[0].get<double>(), j[1].get<double>()};
}

nlohmann::json edge_to_json(const ArcEdge& e) {
    nlohmann::json j{{"kind", e.is_arc() ? "arc" : "seg"}, {"from", vec_to_json(e.from)}, {"to", vec_to_json(e.to)}};
    if (e.is_arc()) {
        j["center"] = vec_to_json(e.center);
        j["ccw"] = e.ccw;
    }
    return j;
}

ArcEdge edge_from_json(const nlohmann::json& j) {
    using Reason = InvalidSplinegon::Reason;
    if (!j.is_object() || !j.contains("kind") || !j.contains("from") || !j.contains("to"))
        throw InvalidSplinegon(Reason::Malformed, "an edge needs kind, from and to");
    const nlohmann::json& kind = j["kind"];
    if (kind == "seg") return ArcEdge::segment(vec_from_json(j["from"]), vec_from_json(j["to"]));
    if (kind != "arc") throw InvalidSplinegon(Reason::Malformed, "edge kind must be \"arc\" or \"seg\"");
    if (!j.contains("center") || !j.contains("ccw") || !j["ccw"].is_boolean())
        throw InvalidSplinegon(Reason::Malformed, "an arc needs center and ccw");
    return ArcEdge::arc(vec_from_json(j["from"]), vec_from_json(j["to"]), vec_from_json(j["center"]), j["ccw"].get<bool>());
}

nlohmann::json splinegon_to_json(const Splinegon& region) {
    nlohmann::json edges = nlohmann::json::array();
    for (const ArcEdge& e : region.edges()) edges.push_back(edge_to_json(e));
    return {{"edges", edges}, {"d", region.link_diameter_bound()}};
}

Splinegon splinegon_from_json(const nlohmann::json& j) {
    using Reason = InvalidSplinegon::Reason;
    if (!j.is_object() || !j.contains("edges") || !j["edges"].is_array())
        throw InvalidSplinegon(Reason::Malformed, "expected {\"edges\": [...], \"d\": int}");
    if (!j.contains("d") || !j["d"].is_number_integer())
        throw InvalidSplinegon(Reason::Malformed, "missing integer link diameter bound \"d\"");
    std::vector<ArcEdge> edges;
    for (const nlohmann::json& e : j["edges"]) edges.push_back(edge_from_json(e));
    return Splinegon(std::move(edges), j["d"].get<int>());
}

}  // namespace visgame::splinegon
