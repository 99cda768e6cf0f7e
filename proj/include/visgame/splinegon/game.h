#pragma once

#include "visgame/splinegon/spath.h"
#include "visgame/splinegon/tangents.h"

#include <json.hpp>

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace visgame::splinegon {

/// A validated region with its tangent graph and common tangents.
/// Not copyable: the graph points into the region.
class SplineArena {
public:
    explicit SplineArena(Splinegon region);
    SplineArena(const SplineArena&) = delete;
    SplineArena& operator=(const SplineArena&) = delete;

    [[nodiscard]] const Splinegon& region() const { return region_; }
    [[nodiscard]] const TangentGraph& graph() const { return graph_; }
    [[nodiscard]] const std::vector<StopLine>& common_tangents() const { return tangents_; }

private:
    Splinegon region_;
    TangentGraph graph_;
    std::vector<StopLine> tangents_;
};

/// Why the cop stopped where it did. The order breaks ties between stops
/// at the same point.
enum class StopKind { CommonTangent, EndpointTangent, RobberExit, BoundaryTouch, BoundaryExit, Vertex, Capture };

std::string to_string(StopKind kind);

/// One cop move of the splinegon strategy.
struct CopMove {
    Vec2 from;
    Vec2 to;
    StopKind stop = StopKind::Capture;
    Vec2 ell;                     ///< unit direction of the ray along the path's first straight part
    Vec2 b;                       ///< where the path leaves the ray
    std::size_t gamma = 0;        ///< boundary edge the path wraps around at b
    bool gamma_ambiguous = false; ///< the ray is tangent to both edges at vertex b
    int turn = 0;                 ///< +1 if the path turns left at b, -1 if right
    bool starts_on_curve = false;
    std::optional<StopLine> witness;
    std::optional<std::size_t> bay_vertex;  ///< for a robber exit stop
};

/// Capture if the robber is visible; otherwise move along the ray to the
/// first common tangent, robber exit line or boundary contact past b, or to
/// b itself when b is a vertex other than the cop's position. Throws
/// StrategyViolation when no stopping point exists.
CopMove cop_move_splinegon(const SplineArena& arena, Vec2 cop, Vec2 robber);

/// Region left to the robber after a move: the region is cut along the
/// segment from b backwards through the previous cop position.
struct SplineActiveRegion {
    Vec2 cut_start;  ///< b
    Vec2 cut_end;    ///< first boundary point with boundary on the stop side
    /// Parts of the cut through the interior; the region is split along these.
    std::vector<std::pair<Vec2, Vec2>> stretches;
    Splinegon region = Splinegon::unchecked({});
    double area = 0;
};

/// Keeps the piece containing the robber (or, when the robber lies on the
/// cut, the piece on the side away from the stop side).
SplineActiveRegion active_region_splinegon(const SplineArena& arena, const CopMove& move, Vec2 robber);

enum class CaseTag { None, Case1a, Case1b, Case2a, Case2b };
std::string to_string(CaseTag tag);

enum class EventKind { CVertex, CBTangent, EVertex, ECommonTangentEndpoint, EBend };
inline constexpr std::size_t event_kind_count = 5;
std::string to_string(EventKind kind);

struct ProgressEvent {
    EventKind kind = EventKind::CVertex;
    std::vector<Vec2> witness;
};

/// What a robber strategy sees at its turn.
struct SplineView {
    const SplineArena* arena = nullptr;
    Vec2 cop;
    Vec2 robber;
    int round = 0;
};

class SplineRobber {
public:
    virtual ~SplineRobber() = default;
    [[nodiscard]] virtual std::string name() const = 0;
    /// Initial position; the view's robber field is unset.
    virtual Vec2 place(const SplineView& view);
    /// Next position, visible from the current one.
    virtual Vec2 move(const SplineView& view) = 0;
};

/// Link samples of the region: the robbers' candidate positions.
std::vector<Vec2> robber_candidates(const Splinegon& region);

/// Runs around the boundary: moves to the farthest boundary sample ahead
/// (counterclockwise, else behind) that it sees and the cop does not.
class BoundaryCyclingRobber : public SplineRobber {
public:
    [[nodiscard]] std::string name() const override { return "boundary_cycling"; }
    Vec2 move(const SplineView& view) override;
};

/// Moves to the visible sample hidden from the cop that is farthest from it.
class BayHoppingRobber : public SplineRobber {
public:
    [[nodiscard]] std::string name() const override { return "bay_hopping"; }
    Vec2 move(const SplineView& view) override;
};

/// Moves to a uniformly random visible sample, preferring ones hidden from
/// the cop.
class RandomVisibleRobber : public SplineRobber {
public:
    explicit RandomVisibleRobber(std::uint64_t seed) : seed_(seed) {}
    [[nodiscard]] std::string name() const override { return "random_visible"; }
    Vec2 place(const SplineView& view) override;
    Vec2 move(const SplineView& view) override;

private:
    std::uint64_t seed_;
    std::uint64_t draws_ = 0;
    std::size_t draw(std::size_t count);
};

struct SplineRound {
    int round = 0;
    CopMove move;
    Vec2 robber_before;
    std::optional<Vec2> robber;  ///< empty in the capture round
    std::optional<SplineActiveRegion> active;
    CaseTag case_tag = CaseTag::None;  ///< transition from the previous round
    /// Boundary contact on the far side of the segment from the previous
    /// cop position to b, required in Case 2(a).
    std::optional<Vec2> left_tangency;
    std::vector<ProgressEvent> events;
    bool events_checked = false;
};

struct SplineTrace {
    std::string family;
    Splinegon region = Splinegon::unchecked({});
    std::string robber_strategy;
    std::uint64_t seed = 0;
    Vec2 cop_start;
    Vec2 robber_start;
    std::vector<SplineRound> rounds;
    bool captured = false;
    int capture_round = 0;
    int max_rounds = 0;
    int case_1b_count = 0;
    int case_2a_without_tangency = 0;
    int doubling_back = 0;
    int gamma_ambiguous = 0;
    bool regions_shrink = true;
    bool robber_confined = true;
    bool robber_crossed_cut = false;
    /// Middle rounds (second to second-last with an active region) in which
    /// no progress event could be certified.
    int rounds_without_event = 0;
    std::array<int, event_kind_count> event_counts{};
    std::array<int, event_kind_count> event_budgets{};
    /// Sampled few-link path from the cop's start to the capture point.
    std::vector<Vec2> sigma;
    std::vector<std::string> diagnostics;

    /// Every check above passed.
    [[nodiscard]] bool clean() const;
};

/// Default round cap 4 * (2n^2 + 2n + d).
int splinegon_round_cap(const Splinegon& region, int factor = 4);

/// Plays the splinegon strategy against the robber from cop_start, then
/// classifies cases and certifies progress events. max_rounds <= 0 uses
/// splinegon_round_cap. Throws std::logic_error on an illegal robber move.
SplineTrace run_splinegon_game(const SplineArena& arena, SplineRobber& robber, Vec2 cop_start, int max_rounds = 0,
                               std::uint64_t seed = 0, const std::string& family = "");

/// Fills in case tags, the shrink checks and progress events of a trace
/// whose rounds were played elsewhere (for example one move at a time).
/// Call once per trace: the counters accumulate.
void analyze_splinegon_trace(const SplineArena& arena, SplineTrace& trace);

nlohmann::json spline_trace_to_json(const SplineTrace& trace);

}  // namespace visgame::splinegon
