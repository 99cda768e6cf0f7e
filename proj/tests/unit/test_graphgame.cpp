#include "support/fixtures.h"
#include "support/graph_oracles.h"
#include "visgame/geom/visibility.h"
#include "visgame/graphgame/solver.h"

#include <doctest.h>

#include <random>

using namespace visgame::graphgame;
using visgame::testing::graph_from_mask;
using visgame::testing::naive_solve;

namespace {

Graph l_hexagon_graph() {
    auto vg = visgame::geom::visibility_graph(visgame::testing::l_hexagon());
    return Graph(vg.n, vg.edges);
}

Graph random_connected(std::size_t n, double p, std::mt19937& rng) {
    std::bernoulli_distribution coin(p);
    for (;;) {
        std::vector<Edge> e;
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = a + 1; b < n; ++b)
                if (coin(rng)) e.emplace_back(a, b);
        Graph g(n, e);
        if (g.connected()) return g;
    }
}

}  // namespace

TEST_CASE("graph construction") {
    Graph g(4, {{2, 0}, {0, 2}, {1, 3}});
    CHECK(g.neighbors(0) == std::vector<std::size_t>{2});
    CHECK(g.edges().size() == 2);
    CHECK(g.closed_neighborhood(1).test(1));
    CHECK_THROWS_AS(Graph(3, {{1, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(3, {{0, 3}}), std::invalid_argument);
    CHECK_FALSE(g.connected());
    Graph back = graph_from_json(graph_to_json(g));
    CHECK(back.edges() == g.edges());
}

TEST_CASE("dominates") {
    Graph k4 = complete_graph(4);
    for (std::size_t a = 0; a < 4; ++a)
        for (std::size_t b = 0; b < 4; ++b) CHECK(dominates(k4, a, b));
    Graph c4 = cycle_graph(4);
    CHECK_FALSE(dominates(c4, 0, 2));
    CHECK_FALSE(dominates(c4, 0, 1));
    CHECK_THROWS_AS(dominates(c4, 0, 7), std::out_of_range);

    Graph l = l_hexagon_graph();
    for (std::size_t v = 0; v < 6; ++v) CHECK(dominates(l, 3, v));
}

TEST_CASE("dismantle") {
    for (std::size_t n = 1; n <= 6; ++n) {
        auto cert = dismantle(complete_graph(n));
        REQUIRE(cert);
        CHECK(check_dismantle(complete_graph(n), *cert));
    }
    CHECK_FALSE(dismantle(cycle_graph(4)));
    Graph l = l_hexagon_graph();
    auto cert = dismantle(l);
    REQUIRE(cert);
    CHECK(check_dismantle(l, *cert));
    CHECK(cert->order.back() == 3);

    // The checker rejects tampered certificates.
    DismantleCertificate bad = *cert;
    std::swap(bad.order.front(), bad.order.back());
    CHECK_FALSE(check_dismantle(l, bad));
}

TEST_CASE("two_dismantle") {
    auto k7 = two_dismantle(complete_graph(7));
    REQUIRE(k7);
    CHECK(k7->pairs.size() == 1);
    CHECK(check_two_dismantle(complete_graph(7), *k7));
    CHECK_FALSE(two_dismantle(cycle_graph(4)));
    CHECK_FALSE(two_dismantle(cycle_graph(9)));
    auto small = two_dismantle(l_hexagon_graph());
    REQUIRE(small);
    CHECK(small->pairs.empty());

    // A path is dismantlable but a long path is not 2-dismantlable
    // only if pairs run out; leaves give pairs, so it succeeds.
    std::vector<Edge> path;
    for (std::size_t i = 0; i + 1 < 10; ++i) path.emplace_back(i, i + 1);
    Graph p10(10, path);
    auto pc = two_dismantle(p10);
    REQUIRE(pc);
    CHECK(check_two_dismantle(p10, *pc));

    TwoDismantleCertificate bad = *pc;
    bad.dominators[0].first = bad.pairs[0].second;
    CHECK_FALSE(check_two_dismantle(p10, bad));
}

TEST_CASE("solve_game examples") {
    for (std::size_t n = 2; n <= 6; ++n) {
        auto s = solve_game(complete_graph(n));
        CHECK(s.cop_wins);
        CHECK(s.capture_time == 1);
    }
    CHECK(solve_game(complete_graph(1)).capture_time == 0);
    CHECK_FALSE(solve_game(cycle_graph(4)).cop_wins);
    CHECK_FALSE(solve_game(cycle_graph(4)).capture_time);

    auto l = solve_game(l_hexagon_graph());
    CHECK(l.cop_wins);
    REQUIRE(l.capture_time);
    CHECK(*l.capture_time <= 3);
    CHECK(l.start_value(3) == 1);

    CHECK_THROWS_AS(solve_game(Graph(3, {{0, 1}})), std::invalid_argument);
}

TEST_CASE("solve_game matches the value-iteration oracle") {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 150; ++trial) {
        std::size_t n = 2 + trial % 9;
        Graph g = random_connected(n, 0.25 + 0.05 * (trial % 7), rng);
        auto s = solve_game(g);
        auto o = naive_solve(g);
        for (std::size_t c = 0; c < n; ++c)
            for (std::size_t r = 0; r < n; ++r) {
                if (c == r) continue;
                int expect = o.at(c, r) == INT_MAX ? -1 : o.at(c, r);
                CHECK(s.cop_value(c, r) == expect);
            }
    }
}

TEST_CASE("dismantlable iff cop-win, exhaustive for n <= 6") {
    for (std::size_t n = 1; n <= 6; ++n) {
        std::uint64_t pairs = n * (n - 1) / 2;
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
            Graph g = graph_from_mask(n, mask);
            if (!g.connected()) continue;
            auto cert = dismantle(g);
            auto s = solve_game(g);
            CHECK(cert.has_value() == s.cop_wins);
            if (cert) CHECK(check_dismantle(g, *cert));
            if (s.cop_wins) CHECK(*s.capture_time <= static_cast<int>(n));
        }
    }
}

TEST_CASE("capture time bound for 2-dismantlable graphs") {
    std::mt19937 rng(17);
    int tested = 0;
    for (int trial = 0; trial < 300; ++trial) {
        std::size_t n = 7 + trial % 8;
        Graph g = random_connected(n, 0.5 + 0.05 * (trial % 8), rng);
        auto cert = two_dismantle(g);
        if (!cert) continue;
        ++tested;
        CHECK(check_two_dismantle(g, *cert));
        auto s = solve_game(g);
        REQUIRE(s.cop_wins);
        CHECK(*s.capture_time <= static_cast<int>((n + 1) / 2));
    }
    CHECK(tested > 50);
}

TEST_CASE("optimal moves realise the solved value") {
    Graph g = l_hexagon_graph();
    auto s = solve_game(g);
    std::size_t c = *s.cop_start;
    for (std::size_t r0 = 0; r0 < g.size(); ++r0) {
        if (r0 == c) continue;
        std::size_t cc = c, r = r0;
        int moves = 0;
        while (true) {
            cc = best_cop_move(g, s, cc, r);
            ++moves;
            if (cc == r) break;
            r = best_robber_move(g, s, cc, r);
        }
        CHECK(moves == s.cop_value(c, r0));
    }
}
