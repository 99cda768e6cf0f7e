#include "visgame/harness/scenes.h"
#include "visgame/splinegon/game.h"
#include "visgame/splinegon/spath.h"
#include "visgame/splinegon/tangents.h"

#include <doctest.h>

#include <cmath>
#include <functional>
#include <limits>
#include <queue>
#include <random>

using namespace visgame::splinegon;
using visgame::harness::bay_scene;
using visgame::harness::bulge;
using visgame::harness::crescent;
using visgame::harness::curved_square;
using visgame::harness::curved_triangle;
using visgame::harness::splinegon_corpus;
using visgame::harness::stadium;

namespace {

/// Doubled area of a dense polyline through the boundary.
double polyline_area(const Splinegon& region, int pieces_per_edge) {
    double twice = 0;
    for (const ArcEdge& e : region.edges())
        for (int k = 0; k < pieces_per_edge; ++k) {
            const Vec2 a = e.point_at(static_cast<double>(k) / pieces_per_edge);
            const Vec2 b = e.point_at(static_cast<double>(k + 1) / pieces_per_edge);
            twice += cross(a, b);
        }
    return twice / 2;
}

InvalidSplinegon::Reason reason_of(const std::function<void()>& build) {
    try {
        build();
    } catch (const InvalidSplinegon& e) {
        return e.reason();
    }
    FAIL("expected InvalidSplinegon");
    return InvalidSplinegon::Reason::Malformed;
}

/// Room [0,10]x[0,4] whose floor carries a concave bulge from (7,0) to (3,0).
struct BulgeRoom {
    Splinegon region = Splinegon({ArcEdge::segment({0, 0}, {3, 0}), bulge({3, 0}, {7, 0}, 1.8, false),
                                  ArcEdge::segment({7, 0}, {10, 0}), ArcEdge::segment({10, 0}, {10, 4}),
                                  ArcEdge::segment({10, 4}, {0, 4}), ArcEdge::segment({0, 4}, {0, 0})},
                                 3);
};

/// Shortest path length in the bulge room by Dijkstra over dense samples of
/// the bulge circle. Visibility: the room is convex and the only obstacle is
/// the part of the disk above the floor, so a segment in the room is clear
/// iff it stays out of the open disk.
double dense_oracle_length(Vec2 s, Vec2 t, Vec2 center, double radius, double a0, double a1, int samples) {
    const auto clear = [&](Vec2 p, Vec2 q) {
        const Vec2 e = q - p;
        const double u = std::clamp(dot(center - p, e) / dot(e, e), 0.0, 1.0);
        return dist(center, p + u * e) >= radius * (1 - 1e-12);
    };
    if (clear(s, t)) return dist(s, t);
    std::vector<Vec2> nodes{s, t};
    for (int k = 0; k <= samples; ++k) {
        const double a = a0 + (a1 - a0) * k / samples;
        nodes.push_back(center + radius * Vec2{std::cos(a), std::sin(a)});
    }
    const std::size_t n = nodes.size();
    std::vector<double> d(n, std::numeric_limits<double>::infinity());
    using Entry = std::pair<double, std::size_t>;
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> queue;
    d[0] = 0;
    queue.push({0, 0});
    while (!queue.empty()) {
        const auto [du, u] = queue.top();
        queue.pop();
        if (du > d[u]) continue;
        std::vector<std::size_t> next;
        if (u < 2) {
            for (std::size_t v = 0; v < n; ++v)
                if (v != u && clear(nodes[u], nodes[v])) next.push_back(v);
        } else {
            if (u > 2) next.push_back(u - 1);
            if (u + 1 < n) next.push_back(u + 1);
            if (clear(nodes[u], t)) next.push_back(1);
        }
        for (std::size_t v : next)
            if (du + dist(nodes[u], nodes[v]) < d[v]) {
                d[v] = du + dist(nodes[u], nodes[v]);
                queue.push({d[v], v});
            }
    }
    return d[1];
}

}  // namespace

TEST_CASE("arc primitives: length, midpoint, tangent and area term") {
    const ArcEdge quarter = ArcEdge::arc({2, 0}, {0, 2}, {0, 0}, true);
    CHECK(quarter.length() == doctest::Approx(pi));
    const Vec2 mid = quarter.point_at(0.5);
    CHECK(mid.x == doctest::Approx(std::sqrt(2.0)));
    CHECK(mid.y == doctest::Approx(std::sqrt(2.0)));
    CHECK(dot(quarter.tangent_at(0.5), mid) == doctest::Approx(0).epsilon(1e-12));
    CHECK(cross(mid, quarter.tangent_at(0.5)) > 0);
    const ArcEdge back = quarter.reversed();
    CHECK(back.from == quarter.to);
    CHECK(back.sweep() == doctest::Approx(-quarter.sweep()));
    const auto [first, second] = quarter.split(0.5);
    CHECK(first.length() + second.length() == doctest::Approx(quarter.length()));
    CHECK(ArcEdge::segment({0, 0}, {3, 4}).length() == doctest::Approx(5));
}

TEST_CASE("area matches closed forms and a dense polyline") {
    CHECK(stadium().build().area() == doctest::Approx(8 + pi).epsilon(1e-12));
    const double theta = 2 * std::asin(2.0 / 6.0);
    const double segment = 18 * (theta - std::sin(theta));
    CHECK(curved_triangle().build().area() == doctest::Approx(4 * std::sqrt(3.0) - 3 * segment).epsilon(1e-12));
    for (const auto& scene : splinegon_corpus(12))
        CHECK(scene.build().area() == doctest::Approx(polyline_area(scene.build(), 4000)).epsilon(1e-6));
}

TEST_CASE("containment and visibility") {
    const Splinegon s = stadium().build();
    CHECK(s.contains({0, 0}));
    CHECK(s.contains({2.9, 0}));
    CHECK_FALSE(s.contains({2.9, 0.9}));
    CHECK(s.contains({-2, 1}));
    CHECK(s.sees({-2.9, 0}, {2.9, 0}));

    const Splinegon t = curved_triangle().build();
    CHECK(t.contains({2, 2 / std::sqrt(3.0)}));
    CHECK_FALSE(t.contains({2, 0.1}));  // under the bottom side's bulge
    for (std::size_t i = 0; i < 3; ++i) CHECK_FALSE(t.sees(t.vertex(i), t.vertex(t.next(i))));

    const Splinegon bays = bay_scene().build();
    CHECK(bays.sees({6, 0.5}, {6, 3.9}));
    CHECK_FALSE(bays.sees({1, 3.9}, {11, 3.9}));
    CHECK_FALSE(bays.sees({6, 3.9}, {11, 3.9}));
}

TEST_CASE("validation rejects malformed, crossing, clockwise and cusped chains") {
    using R = InvalidSplinegon::Reason;
    CHECK(reason_of([] { Splinegon({ArcEdge::segment({0, 0}, {1, 0}), ArcEdge::segment({1, 0}, {1, 1})}, 1); }) ==
          R::Malformed);
    CHECK(reason_of([] {
              Splinegon({ArcEdge::segment({0, 0}, {2, 2}), ArcEdge::segment({2, 2}, {2, 0}),
                         ArcEdge::segment({2, 0}, {0, 2}), ArcEdge::segment({0, 2}, {0, 0})},
                        2);
          }) == R::NotSimple);
    CHECK(reason_of([] {
              Splinegon({ArcEdge::segment({0, 0}, {0, 1}), ArcEdge::segment({0, 1}, {1, 1}),
                         ArcEdge::segment({1, 1}, {0, 0})},
                        1);
          }) == R::Clockwise);
    CHECK(reason_of([] { Splinegon(bay_scene().edges, 1); }) ==
          R::LinkDiameterExceeded);
    try {
        (void)crescent().build();
        FAIL("crescent accepted");
    } catch (const InvalidSplinegon& e) {
        CHECK(e.reason() == R::InfiniteLinkDiameter);
        CHECK(std::string(e.what()).find("infinite link diameter") != std::string::npos);
    }
}

TEST_CASE("circle tangents satisfy the tangency condition") {
    const Vec2 c{1, -2};
    const double radius = 1.5;
    const Vec2 p = c + Vec2{2 * radius, 0};
    const std::vector<Vec2> pts = circle_tangent_points(p, c, radius);
    REQUIRE(pts.size() == 2);
    for (Vec2 t : pts) {
        CHECK(std::abs(dist(t, c) - radius) < 1e-9);
        CHECK(std::abs(dot(t - c, t - p)) < 1e-9);
        CHECK(dist(t, p) == doctest::Approx(std::sqrt(3.0) * radius));
    }
    CHECK(circle_tangent_points(c + Vec2{0.5, 0}, c, radius).empty());
    CHECK(circle_tangent_points(c + Vec2{0, radius}, c, radius).size() == 1);

    const Vec2 c2{6, 1};
    const double r2 = 0.7;
    const auto pairs = circle_bitangents(c, radius, c2, r2);
    CHECK(pairs.size() == 4);
    for (const auto& [t1, t2] : pairs) {
        const Vec2 u = unit(t2 - t1);
        CHECK(std::abs(std::abs(cross(u, c - t1)) - radius) < 1e-9);
        CHECK(std::abs(std::abs(cross(u, c2 - t1)) - r2) < 1e-9);
        CHECK(std::abs(dist(t1, c) - radius) < 1e-9);
        CHECK(std::abs(dist(t2, c2) - r2) < 1e-9);
    }
}

TEST_CASE("common tangents of the fixtures") {
    const Splinegon s = stadium().build();
    const std::vector<StopLine> lines = common_tangents(s);
    CHECK(lines.size() == 6);
    for (const StopLine& l : lines) {
        CHECK(l.kind == StopLineKind::EndpointTangent);
        CHECK(s.on_boundary(0.5 * (l.a + l.b)));
    }
    const Splinegon t = curved_triangle().build();
    int endpoint = 0;
    for (const StopLine& l : common_tangents(t)) endpoint += l.kind == StopLineKind::EndpointTangent;
    CHECK(endpoint == 6);

    const Splinegon bays = bay_scene().build();
    bool bitangent = false;
    for (const StopLine& l : common_tangents(bays))
        bitangent = bitangent || (l.kind == StopLineKind::CommonTangent && std::abs(l.a.y - 2.7) < 1e-9 &&
                                  std::abs(l.b.y - 2.7) < 1e-9);
    CHECK(bitangent);

    for (const auto& scene : splinegon_corpus()) {
        const Splinegon region = scene.build();
        const std::size_t n = region.size();
        const std::vector<StopLine> all = common_tangents(region);
        CHECK(all.size() <= 2 * n * n);
        for (const StopLine& l : all) {
            CHECK(region.contains(l.a));
            CHECK(region.contains(l.b));
            CHECK(region.sees(l.a, l.b));
        }
    }
}

TEST_CASE("robber exit lines") {
    const Splinegon s = stadium().build();
    for (Vec2 r : {Vec2{0, 0.5}, Vec2{2.5, -0.3}})
        CHECK(robber_exit_lines(r, {-2.5, 0}, {1, 0}, s).empty());

    // Cop heading right under the ceiling bulges, robber on the floor of the
    // middle bay. Of the tangents from the robber, only the one grazing the
    // left bulge's outer flank has the bulge on the side the cop moves into.
    const Splinegon bays = bay_scene().build();
    const Vec2 r{6, 0.5};
    const std::vector<ExitLine> exits = robber_exit_lines(r, {0.5, 2}, {1, 0}, bays);
    REQUIRE(exits.size() == 1);
    const ExitLine& e = exits.front();
    const ArcEdge& left_bulge = bays.edge(5);
    const Vec2 t = e.line.b;
    CHECK(std::abs(dist(t, left_bulge.center) - left_bulge.radius()) < 1e-9);
    CHECK(std::abs(dot(t - left_bulge.center, t - r)) < 1e-9);
    CHECK(t.x < left_bulge.center.x);
    CHECK(cross(t - r, left_bulge.center - r) < 0);  // bulge right of r->T
    CHECK(cross(t - r, Vec2{1, 0}) < 0);             // cop heads to its right
    REQUIRE(e.bay_vertex);
    CHECK(bays.vertex(*e.bay_vertex) == Vec2{2, 4});
    const double crossing_x = r.x + (2 - r.y) * (t.x - r.x) / (t.y - r.y);
    CHECK(e.ray_t == doctest::Approx(crossing_x - 0.5));

    for (const auto& scene : splinegon_corpus(20)) {
        const Splinegon region = scene.build();
        const std::vector<Vec2> samples = link_samples(region);
        for (std::size_t k = 0; k + 7 < samples.size(); k += 7) {
            const Vec2 origin = samples[k], rob = samples[k + 7];
            for (const ExitLine& x : robber_exit_lines(rob, origin, {std::cos(0.3 * k), std::sin(0.3 * k)}, region))
                CHECK(x.bay_vertex.has_value());
        }
    }
}

TEST_CASE("shortest paths match a dense discretization") {
    const BulgeRoom room;
    const ArcEdge& arc = room.region.edge(1);
    const double a0 = std::atan2(arc.from.y - arc.center.y, arc.from.x - arc.center.x);
    const double a1 = std::atan2(arc.to.y - arc.center.y, arc.to.x - arc.center.x);
    const TangentGraph graph(room.region);
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> ux(0.1, 9.9), uy(0.1, 3.9);
    int checked = 0, curved = 0;
    while (checked < 40) {
        const Vec2 s{ux(rng), uy(rng)}, t{ux(rng), uy(rng)};
        if (!room.region.contains(s) || !room.region.contains(t) || room.region.boundary_distance(s) < 1e-3 ||
            room.region.boundary_distance(t) < 1e-3)
            continue;
        const SplinePath path = graph.shortest_path(s, t);
        const double want = dense_oracle_length(s, t, arc.center, arc.radius(), a0, a1, 4000);
        CHECK(path.length == doctest::Approx(want).epsilon(1e-6));
        double pieces = 0;
        for (const PathPiece& p : path.pieces) {
            if (p.arc) {
                ++curved;
                const ArcEdge& e = room.region.edge(*p.arc);
                pieces += e.length() * std::abs(e.project(p.to).first - e.project(p.from).first);
            } else {
                pieces += dist(p.from, p.to);
                CHECK(room.region.sees(p.from, p.to));
            }
        }
        CHECK(pieces == doctest::Approx(path.length).epsilon(1e-9));
        ++checked;
    }
    CHECK(curved > 0);

    const SplinePath sym = graph.shortest_path({1, 0.5}, {9, 0.5});
    REQUIRE(sym.pieces.size() == 3);
    CHECK(sym.pieces[1].arc == std::optional<std::size_t>{1});
    CHECK(sym.pieces[0].to.x + sym.pieces[1].to.x == doctest::Approx(10));
}

TEST_CASE("json round trip") {
    for (const auto& scene : splinegon_corpus(8)) {
        const Splinegon region = scene.build();
        const Splinegon back = splinegon_from_json(splinegon_to_json(region));
        REQUIRE(back.size() == region.size());
        CHECK(back.link_diameter_bound() == region.link_diameter_bound());
        for (std::size_t i = 0; i < region.size(); ++i) {
            CHECK(back.edge(i).from == region.edge(i).from);
            CHECK(back.edge(i).to == region.edge(i).to);
            CHECK(back.edge(i).is_arc() == region.edge(i).is_arc());
        }
    }
    CHECK(reason_of([] { splinegon_from_json(nlohmann::json{{"edges", 3}}); }) ==
          InvalidSplinegon::Reason::Malformed);
}
