#pragma once

#include "visgame/pursuit/paths.h"

#include <json.hpp>

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace visgame::pursuit {

struct GameState {
    const PathIndex* index = nullptr;
    Point cop;
    Point robber;
    int round = 0;
    /// (c_i, r_i) for i = 0..round; the last robber entry is the current one.
    std::vector<std::pair<Point, Point>> history;
    bool captured = false;

    [[nodiscard]] const Polygon& polygon() const { return index->polygon(); }
};

/// Piece of the polygon the robber is confined to after the cop's move from
/// c_{i-1} to the reflex vertex c_i.
struct ActiveRegion {
    Point cut_start;  ///< c_i
    Point cut_end;    ///< where the cut through c_{i-1} stops
    geom::Orientation turn = geom::Orientation::Collinear;  ///< turn of the path at c_i
    Polygon region = Polygon::unchecked({});
    /// Region vertices, not counting vertices with a straight angle.
    std::size_t vertex_count = 0;
    /// The cut stopped at a boundary point that also carries an edge along
    /// the cut's line; the first strict stop-side edge decides there.
    bool collinear_stop = false;
};

/// The cut starts at new_cop, runs through prev_cop and stops at the first
/// boundary point past new_cop where an edge goes to the side of the ray
/// new_cop -> prev_cop that matches the path's turn at new_cop (or where the
/// ray leaves the polygon). The region is the piece
/// that contains the robber. Throws geom::PreconditionViolation if the
/// shortest path from prev_cop to robber does not bend at new_cop.
ActiveRegion active_region(const PathIndex& index, const Point& prev_cop, const Point& new_cop, const Point& robber);

/// Vertices of the polygon whose angle is not straight.
std::size_t corner_count(const Polygon& poly);

class CopStrategy {
public:
    virtual ~CopStrategy() = default;
    [[nodiscard]] virtual std::string name() const = 0;
    virtual Point place(const PathIndex& index) = 0;
    virtual Point move(const GameState& state) = 0;
};

class RobberStrategy {
public:
    virtual ~RobberStrategy() = default;
    [[nodiscard]] virtual std::string name() const = 0;
    /// state.robber is meaningless here; state.cop is the cop's start.
    virtual Point place(const GameState& state) = 0;
    virtual Point move(const GameState& state) = 0;
};

/// Moves onto the robber if visible, else to the second waypoint of the
/// shortest path. Starts at the given vertex (default 0).
class ShortestPathCop : public CopStrategy {
public:
    explicit ShortestPathCop(std::size_t start_vertex = 0) : start_vertex_(start_vertex) {}
    [[nodiscard]] std::string name() const override { return "shortest-path"; }
    Point place(const PathIndex& index) override;
    Point move(const GameState& state) override;

private:
    std::size_t start_vertex_;
};

Point cop_move_shortest_path(const GameState& state);

/// Plays on anchor points x_1..x_k: starts at the anchor nearest x_{floor(k/2)}
/// hidden from the cop, stays while unseen, and when seen steps to a
/// neighbouring anchor that it sees and the cop does not.
class CorridorRobber : public RobberStrategy {
public:
    explicit CorridorRobber(std::vector<Point> anchors);
    [[nodiscard]] std::string name() const override { return "corridor"; }
    Point place(const GameState& state) override;
    Point move(const GameState& state) override;

private:
    std::vector<Point> anchors_;
};

/// Plays optimally in the finite game on the sample points plus the current
/// cop and robber positions, using the exact graph solver.
class DiscreteOptimalRobber : public RobberStrategy {
public:
    DiscreteOptimalRobber(const PathIndex& index, std::vector<Point> samples);
    [[nodiscard]] std::string name() const override { return "discrete-optimal"; }
    Point place(const GameState& state) override;
    Point move(const GameState& state) override;

private:
    Point best_reply(const GameState& state, bool placing);

    const PathIndex& index_;
    std::vector<Point> samples_;
    std::vector<std::vector<bool>> sample_sees_;
};

/// Polygon vertices and edge midpoints.
std::vector<Point> default_samples(const Polygon& poly);

/// Moves to a uniformly chosen visible candidate point. Deterministic per
/// (seed, round).
class RandomRobber : public RobberStrategy {
public:
    explicit RandomRobber(std::uint64_t seed) : seed_(seed) {}
    [[nodiscard]] std::string name() const override { return "random"; }
    Point place(const GameState& state) override;
    Point move(const GameState& state) override;

private:
    std::uint64_t seed_;
};

struct RoundRecord {
    int round = 0;
    Point cop;
    std::optional<Point> robber;  ///< empty in the capture round
    std::optional<ActiveRegion> active;
    bool case_1b = false;
};

struct GameTrace {
    Polygon polygon = Polygon::unchecked({});
    std::string cop_strategy;
    std::string robber_strategy;
    std::uint64_t seed = 0;
    Point cop_start;
    Point robber_start;
    std::vector<RoundRecord> rounds;
    bool captured = false;
    int capture_round = 0;
    int max_rounds = 0;
    int case_1b_count = 0;
    /// Active-region corner counts strictly decrease from round to round.
    bool regions_shrink = true;
    /// Every robber position after round i lies in the active region of round i.
    bool robber_confined = true;
};

/// Cop moves first each round; capture when the cop lands on the robber.
/// Active regions are tracked when the cop moves to a reflex vertex that
/// bends the shortest path. maxRounds <= 0 means 4n. Throws std::logic_error
/// if a strategy makes an illegal move.
GameTrace run_polygon_game(const PathIndex& index, CopStrategy& cop, RobberStrategy& robber, int max_rounds = 0,
                           std::uint64_t seed = 0);

nlohmann::json trace_to_json(const GameTrace& trace);

}  // namespace visgame::pursuit
