#include "visgame/harness/experiments.h"

#include "visgame/geom/json_io.h"
#include "visgame/geom/visibility.h"
#include "visgame/graphgame/solver.h"
#include "visgame/pockets/pockets.h"
#include "visgame/pursuit/game.h"
#include "visgame/splinegon/game.h"

#include <algorithm>
#include <chrono>
#include <memory>
#include <sstream>

namespace visgame::harness {

namespace {

std::unique_ptr<splinegon::SplineRobber> spline_robber(int which, std::uint64_t seed) {
    if (which == 0) return std::make_unique<splinegon::BoundaryCyclingRobber>();
    if (which == 1) return std::make_unique<splinegon::BayHoppingRobber>();
    return std::make_unique<splinegon::RandomVisibleRobber>(seed);
}

class Stopwatch {
public:
    [[nodiscard]] double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

void finish(CheckResult& r, const Stopwatch& clock) {
    r.pass = r.violations == 0;
    r.seconds = clock.seconds();
}

graphgame::Graph visibility_graph_of(const Polygon& poly) { return pockets::to_graph(geom::visibility_graph(poly)); }

std::vector<Point> corridor_anchors(const GeneratedPolygon& g) {
    return g.anchors.empty() ? g.polygon.vertices() : g.anchors;
}

}  // namespace

CheckResult check_visibility_dismantlability(const std::vector<GeneratedPolygon>& corpus) {
    Stopwatch clock;
    CheckResult r;
    r.name = "visibility graphs are 2-dismantlable";
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        const Polygon& poly = corpus[i].polygon;
        graphgame::Graph g = visibility_graph_of(poly);
        auto cert = graphgame::two_dismantle(g);
        const bool ok = cert && graphgame::check_two_dismantle(g, *cert);
        ++r.cases;
        if (!ok) ++r.violations;
        r.rows.push_back({{"index", i}, {"n", poly.size()}, {"edges", g.edges().size()}, {"ok", ok}});
    }
    std::ostringstream out;
    out << r.cases - r.violations << "/" << r.cases << " certified";
    r.detail = out.str();
    finish(r, clock);
    return r;
}

CheckResult check_capture_time_bound(const std::vector<GeneratedPolygon>& corpus) {
    Stopwatch clock;
    CheckResult r;
    r.name = "graph capture time <= ceil(n/2)";
    int worst_slack = 1 << 30;
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        const Polygon& poly = corpus[i].polygon;
        graphgame::GameSolution s = graphgame::solve_game(visibility_graph_of(poly));
        const int bound = static_cast<int>((poly.size() + 1) / 2);
        const bool ok = s.capture_time && *s.capture_time <= bound;
        ++r.cases;
        if (!ok) ++r.violations;
        if (s.capture_time) worst_slack = std::min(worst_slack, bound - *s.capture_time);
        r.rows.push_back({{"index", i},
                          {"n", poly.size()},
                          {"capture_time", s.capture_time ? nlohmann::json(*s.capture_time) : nlohmann::json(nullptr)},
                          {"bound", bound},
                          {"ok", ok}});
    }
    std::ostringstream out;
    out << r.violations << " violations over " << r.cases << ", min slack " << worst_slack;
    r.detail = out.str();
    finish(r, clock);
    return r;
}

CheckResult check_two_pockets(const std::vector<GeneratedPolygon>& corpus) {
    Stopwatch clock;
    CheckResult r;
    r.name = "two maximal pockets with invisible u-vertices";
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        const Polygon& poly = corpus[i].polygon;
        if (poly.is_convex()) continue;
        auto maximal = pockets::maximal_pockets(poly);
        auto pair = pockets::invisible_u_pair(poly, maximal);
        const bool ok = maximal.size() >= 2 && pair.has_value();
        ++r.cases;
        if (!ok) ++r.violations;
        r.rows.push_back({{"index", i}, {"n", poly.size()}, {"maximal_pockets", maximal.size()}, {"ok", ok}});
    }
    std::ostringstream out;
    out << r.violations << " violations over " << r.cases << " nonconvex polygons";
    r.detail = out.str();
    finish(r, clock);
    return r;
}

CheckResult check_polygon_game(const std::vector<GeneratedPolygon>& corpus, int trials) {
    Stopwatch clock;
    CheckResult r;
    r.name = "shortest-path cop in polygons";
    std::size_t late = 0, growing = 0, case_1b = 0, unconfined = 0;
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        const GeneratedPolygon& g = corpus[i];
        pursuit::PathIndex index(g.polygon);
        const std::size_t n = g.polygon.size();
        for (int which = 0; which < 3; ++which) {
            for (int trial = 0; trial < trials; ++trial) {
                pursuit::ShortestPathCop cop(static_cast<std::size_t>(trial) * n / static_cast<std::size_t>(trials));
                std::unique_ptr<pursuit::RobberStrategy> robber;
                const std::uint64_t seed = 1000 * i + static_cast<std::uint64_t>(trial);
                if (which == 0) robber = std::make_unique<pursuit::CorridorRobber>(corridor_anchors(g));
                else if (which == 1)
                    robber = std::make_unique<pursuit::DiscreteOptimalRobber>(index, pursuit::default_samples(g.polygon));
                else robber = std::make_unique<pursuit::RandomRobber>(seed);
                pursuit::GameTrace t = pursuit::run_polygon_game(index, cop, *robber, 0, seed);
                const bool in_time = t.captured && t.capture_round <= static_cast<int>(n);
                const bool ok = in_time && t.regions_shrink && t.case_1b_count == 0;
                ++r.cases;
                if (!ok) ++r.violations;
                if (!in_time) ++late;
                if (!t.regions_shrink) ++growing;
                if (t.case_1b_count > 0) ++case_1b;
                if (!t.robber_confined) ++unconfined;
                r.rows.push_back({{"index", i},
                                  {"family", g.family},
                                  {"n", n},
                                  {"robber", robber->name()},
                                  {"trial", trial},
                                  {"captured", t.captured},
                                  {"capture_round", t.capture_round},
                                  {"regions_shrink", t.regions_shrink},
                                  {"robber_confined", t.robber_confined},
                                  {"case_1b", t.case_1b_count},
                                  {"ok", ok}});
            }
        }
    }
    std::ostringstream out;
    out << r.cases << " games: " << late << " late, " << growing << " non-shrinking, " << case_1b << " with Case 1(b), "
        << unconfined << " robber outside its region";
    r.detail = out.str();
    finish(r, clock);
    return r;
}

int corridor_robber_survival(const GeneratedPolygon& g) {
    pursuit::PathIndex index(g.polygon);
    pursuit::ShortestPathCop cop;
    pursuit::CorridorRobber robber(corridor_anchors(g));
    pursuit::GameTrace t = pursuit::run_polygon_game(index, cop, robber);
    return t.captured ? t.capture_round - 1 : t.max_rounds;
}

int sampled_link_diameter(const GeneratedPolygon& g) {
    pursuit::PathIndex index(g.polygon);
    std::vector<Point> samples = g.polygon.vertices();
    for (const Point& a : g.anchors)
        if (g.polygon.find_vertex(a) == g.polygon.size()) samples.push_back(a);
    int diameter = 0;
    for (std::size_t j = 1; j < samples.size(); ++j) {
        geom::VisRegion from = geom::visibility_polygon(samples[j], g.polygon);
        pursuit::ShortestPathTree tree(samples[j], index);
        for (std::size_t i = 0; i < j; ++i) diameter = std::max(diameter, pursuit::link_distance(samples[i], from, tree));
    }
    return diameter;
}

CheckResult check_lower_bounds(int zigzag_min, int zigzag_max, int corridor_min, int corridor_max) {
    Stopwatch clock;
    CheckResult r;
    r.name = "lower-bound families";
    std::ostringstream out;
    for (int k = zigzag_min; k <= zigzag_max; ++k) {
        GeneratedPolygon g = zigzag(k);
        const int n = static_cast<int>(g.polygon.size());
        const int survival = corridor_robber_survival(g);
        const bool ok = survival >= n / 4 - 2;
        ++r.cases;
        if (!ok) ++r.violations;
        r.rows.push_back({{"family", g.family}, {"k", k}, {"n", n}, {"survival", survival}, {"required", n / 4 - 2}, {"ok", ok}});
    }
    for (int k = corridor_min; k <= corridor_max; ++k) {
        GeneratedPolygon g = corridor(k);
        const int survival = corridor_robber_survival(g);
        const int diameter = sampled_link_diameter(g);
        // survival >= k/2 - 1, compared without rounding.
        const bool ok = diameter == 3 && 2 * survival >= k - 2;
        ++r.cases;
        if (!ok) ++r.violations;
        r.rows.push_back({{"family", g.family},
                          {"k", k},
                          {"n", g.polygon.size()},
                          {"survival", survival},
                          {"link_diameter", diameter},
                          {"ok", ok}});
    }
    out << r.violations << " violations over " << r.cases << " polygons";
    r.detail = out.str();
    finish(r, clock);
    return r;
}

CheckResult check_dismantle_equivalence(std::size_t max_n) {
    Stopwatch clock;
    CheckResult r;
    r.name = "dismantlable iff cop-win";
    std::size_t cop_win = 0;
    for (std::size_t n = 1; n <= max_n; ++n) {
        std::vector<graphgame::Edge> pairs;
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = a + 1; b < n; ++b) pairs.emplace_back(a, b);
        const std::uint64_t masks = std::uint64_t{1} << pairs.size();
        for (std::uint64_t mask = 0; mask < masks; ++mask) {
            // Every isomorphism class has a labelling with non-increasing
            // degrees; skip the others.
            std::vector<int> degree(n, 0);
            for (std::size_t e = 0; e < pairs.size(); ++e)
                if (mask >> e & 1) ++degree[pairs[e].first], ++degree[pairs[e].second];
            if (!std::is_sorted(degree.rbegin(), degree.rend())) continue;
            std::vector<graphgame::Edge> edges;
            for (std::size_t e = 0; e < pairs.size(); ++e)
                if (mask >> e & 1) edges.push_back(pairs[e]);
            graphgame::Graph g(n, edges);
            if (!g.connected()) continue;
            const bool dismantlable = graphgame::dismantle(g).has_value();
            const bool wins = graphgame::solve_game(g).cop_wins;
            ++r.cases;
            if (wins) ++cop_win;
            if (dismantlable != wins) {
                ++r.violations;
                r.rows.push_back({{"graph", graphgame::graph_to_json(g)}, {"dismantlable", dismantlable}, {"cop_wins", wins}});
            }
        }
    }
    std::ostringstream out;
    out << r.cases << " connected graphs (" << cop_win << " cop-win), " << r.violations << " disagreements";
    r.detail = out.str();
    finish(r, clock);
    return r;
}

CheckResult check_splinegon_strategy(std::size_t count) {
    Stopwatch clock;
    CheckResult r;
    r.name = "splinegon strategy";
    std::size_t rejected = 0, games = 0, middle_rounds = 0, max_rounds = 0;
    try {
        (void)crescent().build();
    } catch (const splinegon::InvalidSplinegon& e) {
        if (e.reason() == splinegon::InvalidSplinegon::Reason::InfiniteLinkDiameter) rejected = 1;
    }
    ++r.cases;
    if (!rejected) ++r.violations;
    r.rows.push_back({{"family", "Crescent"}, {"rejected", rejected == 1}});
    for (const SplinegonScene& scene : splinegon_corpus(count)) {
        const splinegon::SplineArena arena(scene.build());
        const splinegon::Splinegon& region = arena.region();
        const int cap = splinegon::splinegon_round_cap(region);
        for (std::size_t start : {std::size_t{0}, region.size() / 2})
            for (int which = 0; which < 3; ++which) {
                const std::uint64_t seed = 1000 * games + 17;
                auto robber = spline_robber(which, seed);
                nlohmann::json row = {{"family", scene.family}, {"n", region.size()}, {"d", scene.d},
                                      {"robber", robber->name()}, {"cop_start", start}};
                bool ok = false;
                try {
                    const splinegon::SplineTrace t =
                        splinegon::run_splinegon_game(arena, *robber, region.vertex(start), cap, seed, scene.family);
                    ok = t.clean() && t.capture_round <= cap;
                    if (t.capture_round >= 4) middle_rounds += static_cast<std::size_t>(t.capture_round - 3);
                    max_rounds = std::max(max_rounds, static_cast<std::size_t>(t.capture_round));
                    row["capture_round"] = t.capture_round;
                    row["cap"] = cap;
                    row["case_1b"] = t.case_1b_count;
                    row["event_counts"] = t.event_counts;
                    row["diagnostics"] = t.diagnostics;
                } catch (const std::exception& e) {
                    row["error"] = e.what();
                }
                row["ok"] = ok;
                ++games;
                ++r.cases;
                if (!ok) ++r.violations;
                r.rows.push_back(std::move(row));
            }
    }
    std::ostringstream out;
    out << "crescent " << (rejected ? "rejected" : "ACCEPTED") << "; " << games - (r.violations - (rejected ? 0 : 1))
        << "/" << games << " games clean, " << middle_rounds << " middle rounds certified, longest " << max_rounds
        << " rounds";
    r.detail = out.str();
    finish(r, clock);
    return r;
}

CheckResult check_determinism(std::uint64_t seed) {
    Stopwatch clock;
    CheckResult r;
    r.name = "deterministic traces";
    const std::vector<GeneratedPolygon> families = {zigzag(5), corridor(8), random_simple(14, seed)};
    for (const GeneratedPolygon& g : families) {
        pursuit::PathIndex index(g.polygon);
        for (int which = 0; which < 3; ++which) {
            auto run = [&] {
                pursuit::ShortestPathCop cop;
                std::unique_ptr<pursuit::RobberStrategy> robber;
                if (which == 0) robber = std::make_unique<pursuit::CorridorRobber>(corridor_anchors(g));
                else if (which == 1)
                    robber = std::make_unique<pursuit::DiscreteOptimalRobber>(index, pursuit::default_samples(g.polygon));
                else robber = std::make_unique<pursuit::RandomRobber>(seed);
                return pursuit::trace_to_json(pursuit::run_polygon_game(index, cop, *robber, 0, seed)).dump();
            };
            const bool ok = run() == run();
            ++r.cases;
            if (!ok) ++r.violations;
            r.rows.push_back({{"family", g.family}, {"n", g.polygon.size()}, {"robber", which}, {"ok", ok}});
        }
    }
    for (const SplinegonScene& scene : {bay_scene(), curved_square(), random_staircase(2, seed)}) {
        const splinegon::SplineArena arena(scene.build());
        for (int which = 0; which < 3; ++which) {
            auto run = [&] {
                auto robber = spline_robber(which, seed);
                return splinegon::spline_trace_to_json(splinegon::run_splinegon_game(
                                                           arena, *robber, arena.region().vertex(0), 0, seed, scene.family))
                    .dump();
            };
            const bool ok = run() == run();
            ++r.cases;
            if (!ok) ++r.violations;
            r.rows.push_back({{"family", scene.family}, {"n", arena.region().size()}, {"robber", which}, {"ok", ok}});
        }
    }
    std::ostringstream out;
    out << r.cases - r.violations << "/" << r.cases << " identical";
    r.detail = out.str();
    finish(r, clock);
    return r;
}

}  // namespace visgame::harness
