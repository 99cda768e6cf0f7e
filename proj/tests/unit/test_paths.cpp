#include "support/fixtures.h"
#include "visgame/geom/visibility.h"
#include "visgame/harness/generators.h"
#include "visgame/pursuit/paths.h"

#include <doctest.h>

#include <cmath>
#include <deque>
#include <map>

using namespace visgame::pursuit;
using visgame::geom::Location;
using visgame::testing::l_hexagon;
using visgame::testing::pt;

namespace {

double dlen(const Point& a, const Point& b) {
    double dx = visgame::geom::to_double(a.x - b.x), dy = visgame::geom::to_double(a.y - b.y);
    return std::hypot(dx, dy);
}

/// Floyd-Warshall over all vertices plus s and t in doubles.
double oracle_shortest(const Point& s, const Point& t, const Polygon& poly) {
    std::vector<Point> nodes{s, t};
    for (const Point& v : poly.vertices()) nodes.push_back(v);
    const std::size_t m = nodes.size();
    std::vector<std::vector<double>> d(m, std::vector<double>(m, INFINITY));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            if (i == j) d[i][j] = 0;
            else if (visgame::geom::sees(nodes[i], nodes[j], poly)) d[i][j] = dlen(nodes[i], nodes[j]);
    for (std::size_t k = 0; k < m; ++k)
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
    return d[0][1];
}

/// BFS link distances where bends are restricted to the sample points; an
/// upper bound on the true values.
struct SampledLinks {
    std::vector<Point> nodes;
    std::vector<std::vector<std::size_t>> adj;

    SampledLinks(const Polygon& poly, std::vector<Point> samples) : nodes(std::move(samples)), adj(nodes.size()) {
        for (std::size_t i = 0; i < nodes.size(); ++i)
            for (std::size_t j = i + 1; j < nodes.size(); ++j)
                if (visgame::geom::sees(nodes[i], nodes[j], poly)) {
                    adj[i].push_back(j);
                    adj[j].push_back(i);
                }
    }

    std::vector<int> from(std::size_t s) const {
        std::vector<int> dist(nodes.size(), -1);
        dist[s] = 0;
        std::deque<std::size_t> q{s};
        while (!q.empty()) {
            std::size_t u = q.front();
            q.pop_front();
            for (std::size_t v : adj[u])
                if (dist[v] < 0) {
                    dist[v] = dist[u] + 1;
                    q.push_back(v);
                }
        }
        return dist;
    }
};

std::vector<Point> inside_points(const Polygon& poly, long den) {
    std::vector<Point> out;
    for (const Point& p : visgame::testing::grid_points(poly, den))
        if (visgame::geom::point_location(p, poly) != Location::Exterior) out.push_back(p);
    return out;
}

}  // namespace

TEST_CASE("shortest_path examples") {
    Polygon l = l_hexagon();
    auto direct = shortest_path(pt("1/2", "1/2"), pt("3/2", "1/2"), l);
    CHECK(direct.waypoints.size() == 2);
    auto same = shortest_path(pt("1/2", "1/2"), pt("1/2", "1/2"), l);
    CHECK(same.waypoints.size() == 1);
    CHECK(same.length == 0);

    auto bent = shortest_path(pt("2", "1/2"), pt("1/2", "2"), l);
    REQUIRE(bent.waypoints.size() == 3);
    CHECK(bent.waypoints[1] == Point(1, 1));
    CHECK(std::abs(bent.length.convert_to<double>() - oracle_shortest(pt("2", "1/2"), pt("1/2", "2"), l)) < 1e-12);

    // Passing exactly through the reflex vertex is a straight segment.
    auto through = shortest_path(pt("3/2", "1/2"), pt("1/2", "3/2"), l);
    CHECK(through.waypoints.size() == 2);

    CHECK_THROWS_AS(shortest_path(pt("3/2", "3/2"), pt("0", "0"), l), visgame::geom::PreconditionViolation);
}

TEST_CASE("shortest_path matches the all-vertex oracle") {
    std::vector<Polygon> polys{l_hexagon(), visgame::testing::pinhole_room(), visgame::harness::zigzag(3).polygon};
    for (std::uint64_t seed = 1; seed <= 4; ++seed) polys.push_back(visgame::harness::random_simple(12, seed).polygon);
    for (const Polygon& poly : polys) {
        PathIndex index(poly);
        std::vector<Point> pts = poly.vertices();
        for (std::size_t i = 0; i < pts.size(); ++i)
            for (std::size_t j = i + 1; j < pts.size(); j += 2) {
                auto p = shortest_path(pts[i], pts[j], index);
                double expect = oracle_shortest(pts[i], pts[j], poly);
                CHECK(std::abs(p.length.convert_to<double>() - expect) <= 1e-9 * (1 + expect));
                CHECK(p.waypoints.front() == pts[i]);
                CHECK(p.waypoints.back() == pts[j]);
                for (std::size_t k = 0; k + 1 < p.waypoints.size(); ++k)
                    CHECK(visgame::geom::sees(p.waypoints[k], p.waypoints[k + 1], poly));
                for (std::size_t k = 1; k + 1 < p.waypoints.size(); ++k) {
                    std::size_t v = poly.find_vertex(p.waypoints[k]);
                    REQUIRE(v < poly.size());
                    CHECK(poly.is_reflex(v));
                }
            }
    }
}

TEST_CASE("link_distance examples") {
    Polygon l = l_hexagon();
    CHECK(link_distance(pt("1/2", "1/2"), pt("1/2", "1/2"), l) == 0);
    CHECK(link_distance(pt("2", "0"), pt("0", "2"), l) == 1);
    // The segment between these two passes through the reflex vertex (1,1).
    CHECK(link_distance(pt("3/2", "1/2"), pt("1/2", "3/2"), l) == 1);
    CHECK(link_distance(pt("7/4", "1/2"), pt("1/2", "7/4"), l) == 2);
    CHECK(link_distance(pt("2", "1"), pt("1", "2"), l) == 2);
}

TEST_CASE("link_distance agrees with sampled BFS") {
    std::vector<Polygon> polys{l_hexagon(), visgame::testing::pinhole_room(), visgame::harness::zigzag(2).polygon};
    for (const Polygon& poly : polys) {
        PathIndex index(poly);
        SampledLinks sampled(poly, inside_points(poly, 4));
        std::vector<std::size_t> queries;
        for (std::size_t i = 0; i < sampled.nodes.size(); ++i)
            if (sampled.nodes[i].x.get_den() == 1 && sampled.nodes[i].y.get_den() == 1) queries.push_back(i);
        for (std::size_t qi = 0; qi < queries.size(); ++qi) {
            std::vector<int> dist = sampled.from(queries[qi]);
            for (std::size_t qj = qi + 1; qj < queries.size(); ++qj) {
                const Point& s = sampled.nodes[queries[qi]];
                const Point& t = sampled.nodes[queries[qj]];
                int exact = link_distance(s, t, index);
                INFO(s << " -> " << t);
                CHECK(exact <= dist[queries[qj]]);
                CHECK(exact >= dist[queries[qj]] - 1);
                CHECK((exact == 1) == visgame::geom::sees(s, t, poly));
                CHECK(exact == link_distance(t, s, index));
            }
        }
    }
}

TEST_CASE("link_distance on a zigzag counts the legs") {
    auto z = visgame::harness::zigzag(3);
    PathIndex index(z.polygon);
    for (std::size_t i = 0; i < z.anchors.size(); ++i)
        for (std::size_t j = i + 1; j < z.anchors.size(); ++j) {
            int d = link_distance(z.anchors[i], z.anchors[j], index);
            CHECK(d <= static_cast<int>(j - i));
            CHECK(d >= 1);
        }
}
