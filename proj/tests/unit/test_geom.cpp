#include "support/fixtures.h"
#include "visgame/geom/json_io.h"
#include "visgame/geom/visibility.h"

#include <doctest.h>

using namespace visgame::geom;
using namespace visgame::testing;

TEST_CASE("scalar parsing is exact") {
    CHECK(parse_scalar("1/3") == Scalar(1, 3));
    CHECK(parse_scalar("-0.125") == Scalar(-1, 8));
    CHECK(parse_scalar("2.5e1") == Scalar(25));
    CHECK(parse_scalar("4/8") == Scalar(1, 2));
    CHECK(format_scalar(parse_scalar("6/4")) == "3/2");
    CHECK_THROWS(parse_scalar("1/0"));
    CHECK_THROWS(parse_scalar("abc"));
    CHECK_THROWS(parse_scalar(""));
}

TEST_CASE("orient") {
    CHECK(orient({0, 0}, {1, 0}, {0, 1}) == Orientation::Left);
    CHECK(orient({0, 0}, {1, 1}, {2, 2}) == Orientation::Collinear);
    CHECK(orient({0, 0}, {0, 1}, {1, 0}) == Orientation::Right);

    std::mt19937 rng(11);
    std::uniform_int_distribution<long> coord(-50, 50);
    for (int i = 0; i < 500; ++i) {
        Point p(coord(rng), coord(rng)), q(coord(rng), coord(rng)), r(coord(rng), coord(rng));
        CHECK(static_cast<int>(orient(p, q, r)) == -static_cast<int>(orient(p, r, q)));
    }
}

TEST_CASE("polygon validation") {
    CHECK_NOTHROW(l_hexagon());
    CHECK_THROWS_AS(Polygon({{0, 0}, {1, 0}}), InvalidPolygon);
    CHECK_THROWS_AS(Polygon({{0, 0}, {2, 2}, {2, 0}, {0, 2}}), InvalidPolygon);  // bowtie
    CHECK_THROWS_AS(Polygon({{0, 0}, {0, 1}, {1, 1}, {1, 0}}), InvalidPolygon);  // clockwise
    CHECK_THROWS_AS(Polygon({{0, 0}, {1, 0}, {1, 0}, {0, 1}}), InvalidPolygon);  // repeated
    CHECK_THROWS_AS(Polygon({{0, 0}, {2, 0}, {1, 0}, {1, 1}}), InvalidPolygon);  // folds back
    // Collinear consecutive vertices are fine.
    CHECK_NOTHROW(Polygon({{0, 0}, {1, 0}, {2, 0}, {2, 2}, {0, 2}}));
    Polygon flipped = Polygon::from_any_orientation({{0, 0}, {0, 1}, {1, 1}, {1, 0}});
    CHECK(flipped.doubled_area() > 0);
}

TEST_CASE("point_location examples") {
    CHECK(point_location(pt("1/2", "1/2"), unit_square()) == Location::Interior);
    CHECK(point_location({1, 1}, l_hexagon()) == Location::Boundary);
    CHECK(point_location(pt("3/2", "3/2"), l_hexagon()) == Location::Exterior);
    CHECK(oracle_location(pt("3/2", "3/2"), l_hexagon()) == Location::Exterior);
    CHECK(point_location(pt("1/2", "0"), l_hexagon()) == Location::Boundary);
}

TEST_CASE("point_location agrees with the crossing oracle") {
    for (const Polygon& poly : {l_hexagon(), pinhole_room()})
        for (const Point& p : grid_points(poly, 8)) CHECK(point_location(p, poly) == oracle_location(p, poly));
}

TEST_CASE("sees examples") {
    Polygon sq = unit_square();
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) CHECK(sees(sq[i], sq[j], sq));
    Polygon l = l_hexagon();
    CHECK(sees({2, 0}, {0, 2}, l));
    CHECK(oracle_sees({2, 0}, {0, 2}, l));
    CHECK_FALSE(sees({2, 1}, {1, 2}, l));
    CHECK_FALSE(oracle_sees({2, 1}, {1, 2}, l));
    CHECK_THROWS_AS(sees(pt("3/2", "3/2"), {0, 0}, l), PreconditionViolation);
}

TEST_CASE("sees is symmetric and matches the sampling oracle") {
    for (const Polygon& poly : {l_hexagon(), pinhole_room()}) {
        std::vector<Point> pts;
        for (const Point& p : grid_points(poly, 2))
            if (point_location(p, poly) != Location::Exterior) pts.push_back(p);
        for (std::size_t i = 0; i < pts.size(); ++i)
            for (std::size_t j = i; j < pts.size(); ++j) {
                bool s = sees(pts[i], pts[j], poly);
                CHECK(s == sees(pts[j], pts[i], poly));
                CHECK(s == oracle_sees(pts[i], pts[j], poly));
            }
    }
}

namespace {

void check_region_matches_sees(const Point& x, const Polygon& poly, long den) {
    VisRegion v = visibility_polygon(x, poly);
    for (const Point& p : grid_points(poly, den)) {
        if (point_location(p, poly) == Location::Exterior) continue;
        INFO("x=" << x << " p=" << p);
        CHECK(v.contains(p) == sees(x, p, poly));
    }
}

}  // namespace

TEST_CASE("visibility_polygon of a convex polygon is the polygon") {
    Polygon sq = unit_square();
    for (const Point& x : {pt("1/2", "1/2"), pt("0", "0"), pt("1", "1/3")}) {
        VisRegion v = visibility_polygon(x, sq);
        CHECK(v.spurs.empty());
        for (const Point& p : grid_points(sq, 6)) CHECK(v.contains(p));
    }
}

TEST_CASE("visibility_polygon in the L-hexagon") {
    Polygon l = l_hexagon();
    VisRegion v = visibility_polygon(pt("2", "1/2"), l);
    CHECK(v.contains({1, 1}));
    CHECK(v.contains(pt("1/2", "5/4")));   // on the grazing line through (1,1)
    CHECK_FALSE(v.contains(pt("1/2", "3/2")));
    CHECK(v.contains(pt("1/2", "6/5")));   // below it
    CHECK_FALSE(v.contains(pt("1/2", "8/5")));
    CHECK_FALSE(v.contains(pt("9/10", "19/10")));
    check_region_matches_sees(pt("2", "1/2"), l, 10);

    VisRegion from_reflex = visibility_polygon({1, 1}, l);
    for (const Point& p : grid_points(l, 8))
        if (point_location(p, l) != Location::Exterior) CHECK(from_reflex.contains(p));
}

TEST_CASE("visibility_polygon keeps one-dimensional spurs") {
    Polygon room = pinhole_room();
    VisRegion v = visibility_polygon({0, 1}, room);
    REQUIRE(v.spurs.size() == 1);
    CHECK(v.spurs[0].a == Point(3, 1));
    CHECK(v.spurs[0].b == Point(6, 1));
    CHECK(v.contains({5, 1}));
    CHECK_FALSE(v.contains(pt("5", "101/100")));
    CHECK_FALSE(v.contains(pt("5", "99/100")));
    check_region_matches_sees({0, 1}, room, 8);
}

TEST_CASE("visibility_polygon membership equals sees for many viewpoints") {
    for (const Polygon& poly : {l_hexagon(), pinhole_room()})
        for (const Point& x : grid_points(poly, 2))
            if (point_location(x, poly) != Location::Exterior) check_region_matches_sees(x, poly, 4);
}

TEST_CASE("visibility_graph") {
    VisGraph sq = visibility_graph(unit_square());
    CHECK(sq.edges.size() == 6);

    VisGraph g = visibility_graph(l_hexagon());
    std::vector<std::pair<std::size_t, std::size_t>> expected = {
        {0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}, {1, 2}, {1, 3}, {1, 5}, {2, 3}, {3, 4}, {3, 5}, {4, 5}};
    CHECK(g.edges == expected);

    Polygon room = pinhole_room();
    VisGraph rg = visibility_graph(room);
    for (std::size_t i = 0; i < room.size(); ++i) CHECK(rg.has_edge(i, room.next(i)));
    for (std::size_t i = 0; i < room.size(); ++i)
        for (std::size_t j = 0; j < room.size(); ++j)
            if (i != j) CHECK(rg.has_edge(i, j) == oracle_sees(room[i], room[j], room));
}

TEST_CASE("polygon JSON round trip keeps exact coordinates") {
    auto j = nlohmann::json::parse(R"({"vertices": [["0","0"],["2","0"],["2","1/3"],["0.5","1"]]})");
    Polygon p = polygon_from_json(j);
    CHECK(p[2] == Point(Scalar(2), Scalar(1, 3)));
    CHECK(p[3].x == Scalar(1, 2));
    Polygon back = polygon_from_json(polygon_to_json(p));
    CHECK(back.vertices() == p.vertices());
    CHECK_THROWS_AS(polygon_from_json(nlohmann::json::parse(R"({"vertices": [["0","0"],["1","1"],["1","0"],["0","1"]]})")),
                    InvalidPolygon);
}
