#include "visgame/splinegon/tangents.h"

namespace visgame::splinegon {

namespace {

constexpr double same_line_tol = 1e-7;

/// Segment through p and q (p != q) extended both ways to the boundary.
StopLine extended(StopLineKind kind, Vec2 p, Vec2 q, const Splinegon& region, std::vector<Vec2> tangent_points) {
    const Vec2 u = unit(q - p);
    return {kind, p - region.ray_extent(p, -u) * u, q + region.ray_extent(q, u) * u, std::move(tangent_points)};
}

void add_unique(std::vector<StopLine>& lines, StopLine line) {
    for (const StopLine& l : lines) {
        const bool same = (near(l.a, line.a, same_line_tol) && near(l.b, line.b, same_line_tol)) ||
                          (near(l.a, line.b, same_line_tol) && near(l.b, line.a, same_line_tol));
        if (same) return;
    }
    lines.push_back(std::move(line));
}

std::vector<std::size_t> concave_arcs(const Splinegon& region) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < region.size(); ++i)
        if (region.edge(i).concave()) out.push_back(i);
    return out;
}

bool on_circle(Vec2 p, const ArcEdge& e) { return std::abs(dist(p, e.center) - e.radius()) <= 10 * eps; }

}  // namespace

std::string to_string(StopLineKind kind) {
    switch (kind) {
    case StopLineKind::CommonTangent: return "common_tangent";
    case StopLineKind::EndpointTangent: return "endpoint_tangent";
    case StopLineKind::RobberExitLine: return "robber_exit_line";
    }
    return "?";
}

std::vector<Vec2> circle_tangent_points(Vec2 p, Vec2 center, double radius) {
    const double d = dist(p, center);
    if (std::abs(d - radius) <= 10 * eps) return {p};
    if (d < radius) return {};
    const Vec2 w = p - center;
    const double phi = std::atan2(w.y, w.x), alpha = std::acos(radius / d);
    std::vector<Vec2> out;
    for (double sign : {1.0, -1.0}) {
        double theta = phi + sign * alpha;
        // Tangency: the radius to T is perpendicular to T - p.
        const double f = radius - dot({std::cos(theta), std::sin(theta)}, w);
        const double df = -dot({-std::sin(theta), std::cos(theta)}, w);
        if (df != 0) theta -= f / df;
        out.push_back(center + radius * Vec2{std::cos(theta), std::sin(theta)});
    }
    return out;
}

std::vector<std::pair<Vec2, Vec2>> circle_bitangents(Vec2 c1, double r1, Vec2 c2, double r2) {
    std::vector<std::pair<Vec2, Vec2>> out;
    const Vec2 dc = c2 - c1;
    const double d2 = dot(dc, dc);
    if (d2 == 0) return out;
    for (double s2 : {r2, -r2}) {
        const double z = s2 - r1;
        const double h2 = d2 - z * z;
        if (h2 < 0) continue;
        const double h = std::sqrt(h2);
        for (double sign : {1.0, -1.0}) {
            // Unit normal of a line whose signed distances from c1 and c2 are r1 and s2.
            const Vec2 nrm{(dc.x * z - sign * dc.y * h) / d2, (dc.y * z + sign * dc.x * h) / d2};
            out.emplace_back(c1 - r1 * nrm, c2 - s2 * nrm);
        }
    }
    return out;
}

std::vector<StopLine> tangents_from_point(Vec2 p, const ArcEdge& e, const Splinegon& region) {
    std::vector<StopLine> out;
    if (!e.is_arc()) {
        for (Vec2 t : {e.from, e.to})
            if (!near(p, t) && region.sees(p, t)) out.push_back({StopLineKind::RobberExitLine, p, t, {t}});
        return out;
    }
    for (Vec2 t : circle_tangent_points(p, e.center, e.radius())) {
        double s = 0;
        if (!e.angle_in_sweep(t, &s)) continue;
        if (near(t, p)) {
            const Vec2 dir = e.tangent_at(s);
            out.push_back({StopLineKind::EndpointTangent, p - region.ray_extent(p, -dir) * dir,
                           p + region.ray_extent(p, dir) * dir, {p}});
        } else if (region.sees(p, t)) {
            out.push_back({StopLineKind::RobberExitLine, p, t, {t}});
        }
    }
    return out;
}

bool locally_tangent(const Splinegon& region, Vec2 x, Vec2 dir) {
    return region.local_sides(x, dir) != (LeftSide | RightSide);
}

std::vector<StopLine> common_tangents(const Splinegon& region) {
    std::vector<StopLine> lines;
    const std::size_t n = region.size();
    for (std::size_t v = 0; v < n; ++v) {
        const Vec2 p = region.vertex(v);
        const Vec2 t_in = region.edge(region.prev(v)).tangent_at(1), t_out = region.edge(v).tangent_at(0);
        std::vector<Vec2> dirs{t_out};
        if (std::abs(cross(t_in, t_out)) > 1e-9) dirs.push_back(t_in);
        // One endpoint tangent per curve end; a smooth vertex has one line.
        for (Vec2 u : dirs)
            lines.push_back(
                {StopLineKind::EndpointTangent, p - region.ray_extent(p, -u) * u, p + region.ray_extent(p, u) * u, {p}});
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const Vec2 p = region.vertex(i), q = region.vertex(j);
            if (region.sees(p, q) && locally_tangent(region, p, q - p) && locally_tangent(region, q, q - p))
                add_unique(lines, extended(StopLineKind::CommonTangent, p, q, region, {p, q}));
        }
    const std::vector<std::size_t> arcs = concave_arcs(region);
    for (std::size_t a : arcs) {
        const ArcEdge& e = region.edge(a);
        for (std::size_t v = 0; v < n; ++v) {
            const Vec2 p = region.vertex(v);
            if (on_circle(p, e)) continue;
            for (Vec2 t : circle_tangent_points(p, e.center, e.radius()))
                if (e.angle_in_sweep(t) && region.sees(p, t) && locally_tangent(region, p, t - p))
                    add_unique(lines, extended(StopLineKind::CommonTangent, p, t, region, {p, t}));
        }
    }
    for (std::size_t x = 0; x < arcs.size(); ++x)
        for (std::size_t y = x + 1; y < arcs.size(); ++y) {
            const ArcEdge& e1 = region.edge(arcs[x]);
            const ArcEdge& e2 = region.edge(arcs[y]);
            for (const auto& [t1, t2] : circle_bitangents(e1.center, e1.radius(), e2.center, e2.radius()))
                if (!near(t1, t2) && e1.angle_in_sweep(t1) && e2.angle_in_sweep(t2) && region.sees(t1, t2))
                    add_unique(lines, extended(StopLineKind::CommonTangent, t1, t2, region, {t1, t2}));
        }
    return lines;
}

std::vector<ExitLine> robber_exit_lines(Vec2 r, Vec2 origin, Vec2 unit_dir, const Splinegon& region) {
    struct Candidate {
        Vec2 t;
        int obstacle;
    };
    std::vector<Candidate> candidates;
    for (std::size_t a : concave_arcs(region)) {
        const ArcEdge& e = region.edge(a);
        const std::vector<Vec2> pts = circle_tangent_points(r, e.center, e.radius());
        if (pts.size() != 2) continue;
        for (Vec2 t : pts)
            if (e.angle_in_sweep(t) && region.sees(r, t))
                candidates.push_back({t, side(r, t - r, e.center, 0) > 0 ? LeftSide : RightSide});
    }
    for (std::size_t v = 0; v < region.size(); ++v) {
        const Vec2 p = region.vertex(v);
        if (near(p, r) || !region.sees(r, p)) continue;
        const int sides = region.local_sides(p, p - r);
        if (sides == LeftSide || sides == RightSide) candidates.push_back({p, sides});
    }
    std::vector<ExitLine> out;
    for (const Candidate& c : candidates) {
        const Vec2 d = c.t - r;
        const double denom = cross(unit_dir, d);
        if (std::abs(denom) <= 1e-12 * norm(d)) continue;
        const double t = cross(r - origin, d) / denom;
        const double lambda = cross(r - origin, unit_dir) / denom;
        if (t <= 10 * eps || lambda <= 1e-12 || lambda > 1 + 1e-12) continue;
        // The ray crosses into the left of r->T when d turns clockwise to u.
        const int heading = denom < 0 ? LeftSide : RightSide;
        if (c.obstacle != heading) continue;
        ExitLine line;
        line.line = {StopLineKind::RobberExitLine, r, c.t, {c.t}};
        line.ray_t = t;
        const Vec2 u = unit(d);
        line.bay_end = c.t + region.ray_extent(c.t, u) * u;
        if (auto v = region.vertex_at(c.t)) {
            line.bay_vertex = *v;
        } else {
            const auto [et, st] = region.locate(c.t);
            const auto [ex, sx] = region.locate(line.bay_end);
            const bool forward = dot(region.edge(et).tangent_at(st), d) > 0;
            constexpr double tiny = 1e-9;
            if (forward) {
                if (ex != et || sx < st - tiny || sx >= 1 - tiny) line.bay_vertex = region.next(et);
            } else {
                if (ex != et || sx > st + tiny || sx <= tiny) line.bay_vertex = et;
            }
        }
        out.push_back(std::move(line));
    }
    return out;
}

nlohmann::json stop_line_to_json(const StopLine& line) {
    nlohmann::json pts = nlohmann::json::array();
    for (Vec2 p : line.tangent_points) pts.push_back(vec_to_json(p));
    return {{"kind", to_string(line.kind)},
            {"segment", nlohmann::json::array({vec_to_json(line.a), vec_to_json(line.b)})},
            {"tangent_points", pts}};
}

}  // namespace visgame::splinegon
