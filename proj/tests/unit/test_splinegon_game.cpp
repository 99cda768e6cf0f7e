#include "visgame/harness/scenes.h"
#include "visgame/splinegon/game.h"

#include <doctest.h>

#include <memory>
#include <stdexcept>

using namespace visgame::splinegon;
using visgame::harness::bay_scene;
using visgame::harness::curved_square;
using visgame::harness::curved_triangle;
using visgame::harness::splinegon_corpus;
using visgame::harness::stadium;

namespace {

/// Robber that jumps to a fixed point regardless of visibility.
class TeleportRobber : public SplineRobber {
public:
    explicit TeleportRobber(Vec2 start, Vec2 target) : start_(start), target_(target) {}
    [[nodiscard]] std::string name() const override { return "teleport"; }
    Vec2 place(const SplineView&) override { return start_; }
    Vec2 move(const SplineView&) override { return target_; }

private:
    Vec2 start_;
    Vec2 target_;
};

std::unique_ptr<SplineRobber> make_robber(int which) {
    if (which == 0) return std::make_unique<BoundaryCyclingRobber>();
    if (which == 1) return std::make_unique<BayHoppingRobber>();
    return std::make_unique<RandomVisibleRobber>(5);
}

bool closed_chain(const Splinegon& g) {
    for (std::size_t i = 0; i < g.size(); ++i)
        if (!near(g.edge(i).to, g.edge(g.next(i)).from, 1e-9)) return false;
    return g.size() >= 2;
}

}  // namespace

TEST_CASE("visible robber is captured at once") {
    const SplineArena arena(stadium().build());
    const CopMove m = cop_move_splinegon(arena, {-2.5, 0}, {2.5, 0.5});
    CHECK(m.stop == StopKind::Capture);
    CHECK(m.to == Vec2{2.5, 0.5});
}

TEST_CASE("cop moves and active regions on the fixtures and random regions") {
    int moves = 0;
    for (const auto& scene : splinegon_corpus(16)) {
        const SplineArena arena(scene.build());
        const Splinegon& region = arena.region();
        const std::vector<Vec2> samples = robber_candidates(region);
        for (std::size_t a = 0; a < samples.size(); a += 5)
            for (std::size_t b = 2; b < samples.size(); b += 9) {
                const Vec2 cop = samples[a], rob = samples[b];
                if (region.sees(cop, rob)) continue;
                const CopMove m = cop_move_splinegon(arena, cop, rob);
                ++moves;
                REQUIRE(m.stop != StopKind::Capture);
                CHECK(region.contains(m.to));
                CHECK(std::abs(norm(m.ell) - 1) < 1e-12);
                CHECK((m.turn == 1 || m.turn == -1));
                // b lies on the ray and the cop never stops short of it.
                CHECK(std::abs(cross(m.ell, m.b - cop)) < 1e-7);
                CHECK(dot(m.to - cop, m.ell) >= dist(cop, m.b) - 1e-7);
                CHECK(std::abs(cross(m.ell, m.to - cop)) < 1e-7);
                if (m.stop == StopKind::Vertex) CHECK(region.vertex_at(m.to).has_value());
                if (m.stop == StopKind::RobberExit) CHECK(m.bay_vertex.has_value());

                const SplineActiveRegion act = active_region_splinegon(arena, m, rob);
                CHECK(closed_chain(act.region));
                CHECK(act.area <= region.area() * (1 + 1e-12));
                CHECK(act.area > 0);
                CHECK(act.region.contains(rob));
                for (const auto& [p, q] : act.stretches) {
                    CHECK(region.sees(p, q));
                    CHECK(std::abs(cross(m.ell, q - p)) < 1e-7);
                }
            }
    }
    CHECK(moves > 100);
}

TEST_CASE("round cap") {
    CHECK(splinegon_round_cap(stadium().build()) == 4 * (2 * 36 + 2 * 6 + 1));
    CHECK(splinegon_round_cap(curved_triangle().build(), 1) == 2 * 9 + 2 * 3 + 2);
}

TEST_CASE("every robber is caught on the fixtures with all checks passing") {
    for (const auto& scene : {stadium(), curved_triangle(), bay_scene(), curved_square()}) {
        const SplineArena arena(scene.build());
        for (int which = 0; which < 3; ++which)
            for (std::size_t start = 0; start < arena.region().size(); ++start) {
                auto robber = make_robber(which);
                const SplineTrace t = run_splinegon_game(arena, *robber, arena.region().vertex(start), 0, 5, scene.family);
                INFO(scene.family << " robber " << robber->name() << " start " << start);
                CHECK(t.captured);
                CHECK(t.capture_round <= splinegon_round_cap(arena.region()));
                CHECK(t.case_1b_count == 0);
                CHECK(t.regions_shrink);
                CHECK(t.robber_confined);
                CHECK(t.rounds_without_event == 0);
                for (std::size_t k = 0; k < event_kind_count; ++k) CHECK(t.event_counts[k] <= t.event_budgets[k]);
                CHECK(t.clean());
            }
    }
}

TEST_CASE("robber on a concave arc behind the cop's ray is cut off") {
    // The robber hides on the bottom arc just past the point where the cop's
    // ray touches it; the cop must stop on the robber's tangent rather than
    // run into the corner.
    const SplineArena arena(curved_triangle().build());
    RandomVisibleRobber robber(11017);
    const SplineTrace t = run_splinegon_game(arena, robber, arena.region().vertex(1), 0, 11017);
    CHECK(t.captured);
    CHECK(t.case_1b_count == 0);
    CHECK(t.clean());
}

TEST_CASE("illegal robber moves are rejected") {
    const SplineArena arena(bay_scene().build());
    TeleportRobber robber({1, 3.9}, {11, 3.9});
    REQUIRE_FALSE(arena.region().sees({11.5, 0.3}, {1, 3.9}));
    CHECK_THROWS_AS(run_splinegon_game(arena, robber, {11.5, 0.3}), std::logic_error);
}

TEST_CASE("traces are deterministic and carry the per-round record") {
    const SplineArena arena(bay_scene().build());
    for (int which = 0; which < 3; ++which) {
        auto run = [&] {
            auto robber = make_robber(which);
            return spline_trace_to_json(run_splinegon_game(arena, *robber, {0.5, 0.5}, 0, 9, "BayScene"));
        };
        const nlohmann::json a = run();
        CHECK(a.dump() == run().dump());
        CHECK(a["captured"].get<bool>());
        REQUIRE(!a["rounds"].empty());
        CHECK(a["rounds"].back()["stop"] == "capture");
        for (const auto& r : a["rounds"])
            if (r["stop"] != "capture") {
                CHECK(r.contains("cut"));
                CHECK(r.contains("active_area"));
                CHECK(r.contains("turn"));
            }
    }
}

TEST_CASE("in the curved triangle the cop stops on endpoint tangents, never on the far boundary") {
    const SplineArena arena(curved_triangle().build());
    const Splinegon& region = arena.region();
    const std::vector<Vec2> samples = robber_candidates(region);
    int from_vertex = 0;
    for (std::size_t v = 0; v < region.size(); ++v)
        for (Vec2 r : samples)
            if (!region.sees(region.vertex(v), r)) {
                CHECK(cop_move_splinegon(arena, region.vertex(v), r).stop == StopKind::EndpointTangent);
                ++from_vertex;
            }
    CHECK(from_vertex > 0);
    for (Vec2 c : samples)
        for (Vec2 r : samples)
            if (!region.sees(c, r)) {
                const StopKind stop = cop_move_splinegon(arena, c, r).stop;
                CHECK(stop != StopKind::BoundaryTouch);
                CHECK(stop != StopKind::BoundaryExit);
            }
}
