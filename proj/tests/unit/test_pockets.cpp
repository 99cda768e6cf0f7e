#include "support/fixtures.h"
#include "visgame/harness/generators.h"
#include "visgame/pockets/pockets.h"

#include <doctest.h>

using namespace visgame::pockets;
using visgame::geom::Location;
using visgame::geom::Scalar;
using visgame::testing::l_hexagon;
using visgame::testing::pt;

namespace {

/// Independent ray shoot: smallest parameter s > 0 where the ray from v along
/// dir crosses into the exterior, found by checking every edge crossing.
Point oracle_ray_hit(const Polygon& poly, const Point& v, const Point& dir) {
    std::vector<Scalar> hits;
    for (std::size_t i = 0; i < poly.size(); ++i) {
        Point a = poly[i], b = poly[poly.next(i)];
        Scalar den = visgame::geom::cross(dir, b - a);
        if (den == 0) continue;
        Scalar s = visgame::geom::cross(a - v, b - a) / den;
        Scalar w = visgame::geom::cross(a - v, dir) / den;
        if (s > 0 && w >= 0 && w <= 1) hits.push_back(s);
    }
    std::sort(hits.begin(), hits.end());
    for (const Scalar& s : hits) {
        Point beyond = v + (s + Scalar(1, 1000000)) * dir;
        if (visgame::geom::point_location(beyond, poly) == Location::Exterior) return v + s * dir;
    }
    throw std::logic_error("ray never leaves the polygon");
}

bool same_cycle(const std::vector<Point>& a, const std::vector<Point>& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t shift = 0; shift < a.size(); ++shift) {
        bool ok = true;
        for (std::size_t i = 0; i < a.size() && ok; ++i) ok = a[(i + shift) % a.size()] == b[i];
        if (ok) return true;
    }
    return false;
}

/// Interior points of a 12 x 12 lattice spanning the region's bounding box.
std::vector<Point> grid_inside(const Polygon& region) {
    Scalar x0 = region[0].x, x1 = x0, y0 = region[0].y, y1 = y0;
    for (const Point& p : region.vertices()) {
        x0 = std::min(x0, p.x);
        x1 = std::max(x1, p.x);
        y0 = std::min(y0, p.y);
        y1 = std::max(y1, p.y);
    }
    std::vector<Point> out;
    for (int i = 1; i < 12; ++i)
        for (int j = 1; j < 12; ++j) {
            Point p(x0 + (x1 - x0) * visgame::geom::ratio(i, 12), y0 + (y1 - y0) * visgame::geom::ratio(j, 12));
            if (visgame::geom::point_location(p, region) == Location::Interior) out.push_back(p);
        }
    return out;
}

}  // namespace

TEST_CASE("pocket examples in the L-hexagon") {
    Polygon l = l_hexagon();
    auto a = pocket(l, 2, 3);
    REQUIRE(a);
    CHECK(a->t == Point(0, 1));
    CHECK(a->t == oracle_ray_hit(l, l[3], l[3] - l[2]));
    CHECK(same_cycle(a->region.vertices(), {{1, 1}, {1, 2}, {0, 2}, {0, 1}}));

    auto b = pocket(l, 4, 3);
    REQUIRE(b);
    CHECK(b->t == Point(1, 0));
    CHECK(same_cycle(b->region.vertices(), {{1, 1}, {1, 0}, {2, 0}, {2, 1}}));
    CHECK(b->region.doubled_area() > 0);

    CHECK_FALSE(pocket(l, 1, 2));
    CHECK_THROWS_AS(pocket(l, 0, 3), std::invalid_argument);
}

TEST_CASE("convex polygons have no pockets") {
    Polygon sq = visgame::testing::unit_square();
    CHECK(all_pockets(sq).empty());
    CHECK(maximal_pockets(sq).empty());
    CHECK(visibility_increasing_edges(sq).size() == 4);
    auto d = geometric_dismantling(sq);
    CHECK(d.ear_steps.empty());
    CHECK(d.certificate.order.size() == 4);
}

TEST_CASE("maximal pockets of the L-hexagon") {
    Polygon l = l_hexagon();
    auto m = maximal_pockets(l);
    REQUIRE(m.size() == 2);
    CHECK(!visgame::geom::sees(l[2], l[4], l));
    auto pair = invisible_u_pair(l, m);
    CHECK(pair);
    auto edges = visibility_increasing_edges(l);
    REQUIRE(edges.size() == 2);
    for (const auto& e : edges) {
        CHECK(e.v == 3);
        CHECK((e.u == 2 || e.u == 4));
        CHECK(check_visibility_nesting(l, e));
    }
    // Reversed direction is not visibility-increasing: v sees more than u.
    CHECK_FALSE(check_visibility_nesting(l, Edge{3, 2}));
}

TEST_CASE("geometric dismantling of the L-hexagon") {
    Polygon l = l_hexagon();
    auto d = geometric_dismantling(l);
    REQUIRE(!d.ear_steps.empty());
    CHECK((d.ear_steps[0].removed == 2 || d.ear_steps[0].removed == 4));
    CHECK(d.ear_steps[0].dominator == 3);
    auto g = to_graph(visgame::geom::visibility_graph(l));
    CHECK(visgame::graphgame::check_dismantle(g, d.certificate));
}

TEST_CASE("pocket properties on generated polygons") {
    std::vector<Polygon> corpus;
    for (int k = 2; k <= 4; ++k) corpus.push_back(visgame::harness::zigzag(k).polygon);
    for (int k = 3; k <= 6; ++k) corpus.push_back(visgame::harness::corridor(k).polygon);
    for (std::uint64_t seed = 1; seed <= 12; ++seed) corpus.push_back(visgame::harness::random_simple(6 + seed % 8, seed).polygon);

    for (const Polygon& poly : corpus) {
        auto pockets = all_pockets(poly);
        for (const Pocket& p : pockets) {
            CHECK(p.t == oracle_ray_hit(poly, poly[p.v], poly[p.v] - poly[p.u]));
            CHECK(p.region.doubled_area() > 0);
            // u sees no interior pocket point off the mouth line.
            for (const Point& q : grid_inside(p.region)) {
                if (visgame::geom::orient(poly[p.v], p.t, q) == visgame::geom::Orientation::Collinear) continue;
                CHECK_FALSE(visgame::geom::sees(poly[p.u], q, poly));
            }
        }
        if (poly.is_convex()) continue;
        auto maximal = maximal_pockets(poly);
        CHECK(maximal.size() >= 2);
        CHECK(invisible_u_pair(poly, maximal));
        for (const auto& e : visibility_increasing_edges(poly)) CHECK(check_visibility_nesting(poly, e, 5));

        auto d = geometric_dismantling(poly);
        auto g = to_graph(visgame::geom::visibility_graph(poly));
        CHECK(visgame::graphgame::check_dismantle(g, d.certificate));
    }
}
