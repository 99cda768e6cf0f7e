#include "visgame/geom/json_io.h"
#include "visgame/pursuit/game.h"

#include <stdexcept>

namespace visgame::pursuit {

using geom::Location;
using geom::Orientation;

GameTrace run_polygon_game(const PathIndex& index, CopStrategy& cop, RobberStrategy& robber, int max_rounds,
                           std::uint64_t seed) {
    const Polygon& poly = index.polygon();
    GameTrace trace;
    trace.polygon = poly;
    trace.cop_strategy = cop.name();
    trace.robber_strategy = robber.name();
    trace.seed = seed;
    trace.max_rounds = max_rounds > 0 ? max_rounds : 4 * static_cast<int>(poly.size());

    GameState state;
    state.index = &index;
    state.cop = cop.place(index);
    if (geom::point_location(state.cop, poly) == Location::Exterior)
        throw std::logic_error("cop placed outside the polygon");
    state.robber = state.cop;
    state.robber = robber.place(state);
    if (geom::point_location(state.robber, poly) == Location::Exterior)
        throw std::logic_error("robber placed outside the polygon");
    state.history.emplace_back(state.cop, state.robber);
    trace.cop_start = state.cop;
    trace.robber_start = state.robber;

    std::optional<ActiveRegion> last_region;
    // Data for the Case 1(b) test: c_{i-1}, c_i and the turn at c_i.
    std::optional<Point> before_last;
    std::optional<Orientation> last_turn;

    for (int round = 1; round <= trace.max_rounds; ++round) {
        state.round = round;
        const Point prev_cop = state.cop;
        const Point next_cop = cop.move(state);
        if (next_cop != prev_cop && !geom::sees(prev_cop, next_cop, poly))
            throw std::logic_error("cop strategy made an illegal move to " + geom::to_string(next_cop));

        RoundRecord rec;
        rec.round = round;
        rec.cop = next_cop;
        state.cop = next_cop;
        if (next_cop == state.robber) {
            trace.captured = true;
            trace.capture_round = round;
            state.captured = true;
            trace.rounds.push_back(std::move(rec));
            break;
        }

        const std::size_t v = poly.find_vertex(next_cop);
        if (v < poly.size() && poly.is_reflex(v)) {
            ActiveRegion region = active_region(index, prev_cop, next_cop, state.robber);
            if (last_turn && before_last && region.turn == *last_turn &&
                geom::orient(*before_last, prev_cop, next_cop) != *last_turn) {
                rec.case_1b = true;
                ++trace.case_1b_count;
            }
            if (last_region && region.vertex_count >= last_region->vertex_count) trace.regions_shrink = false;
            before_last = prev_cop;
            last_turn = region.turn;
            last_region = region;
            rec.active = std::move(region);
        }

        const Point prev_robber = state.robber;
        const Point next_robber = robber.move(state);
        if (next_robber != prev_robber && !geom::sees(prev_robber, next_robber, poly))
            throw std::logic_error("robber strategy made an illegal move to " + geom::to_string(next_robber));
        state.robber = next_robber;
        state.history.emplace_back(state.cop, state.robber);
        rec.robber = next_robber;
        if (last_region && geom::point_location(next_robber, last_region->region) == Location::Exterior)
            trace.robber_confined = false;
        trace.rounds.push_back(std::move(rec));
    }
    return trace;
}

nlohmann::json trace_to_json(const GameTrace& trace) {
    using geom::point_to_json;
    nlohmann::json rounds = nlohmann::json::array();
    for (const RoundRecord& r : trace.rounds) {
        nlohmann::json jr = {{"round", r.round}, {"cop", point_to_json(r.cop)}};
        jr["robber"] = r.robber ? point_to_json(*r.robber) : nlohmann::json(nullptr);
        if (r.active) {
            jr["active_region"] = {
                {"cut", nlohmann::json::array({point_to_json(r.active->cut_start), point_to_json(r.active->cut_end)})},
                {"turn", r.active->turn == Orientation::Left ? "left" : "right"},
                {"region", geom::polygon_to_json(r.active->region)["vertices"]},
                {"vertex_count", r.active->vertex_count}};
            if (r.active->collinear_stop) jr["active_region"]["collinear_stop"] = true;
        }
        if (r.case_1b) jr["case_1b"] = true;
        rounds.push_back(std::move(jr));
    }
    return {{"polygon", geom::polygon_to_json(trace.polygon)},
            {"cop_strategy", trace.cop_strategy},
            {"robber_strategy", trace.robber_strategy},
            {"seed", trace.seed},
            {"placements", {{"cop", point_to_json(trace.cop_start)}, {"robber", point_to_json(trace.robber_start)}}},
            {"rounds", rounds},
            {"captured", trace.captured},
            {"capture_round", trace.captured ? nlohmann::json(trace.capture_round) : nlohmann::json(nullptr)},
            {"max_rounds", trace.max_rounds},
            {"case_1b_count", trace.case_1b_count},
            {"regions_shrink", trace.regions_shrink},
            {"robber_confined", trace.robber_confined}};
}

}  // namespace visgame::pursuit
