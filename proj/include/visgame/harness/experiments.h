#pragma once

#include "visgame/harness/generators.h"
#include "visgame/harness/scenes.h"

#include <json.hpp>

#include <cstddef>
#include <string>
#include <vector>

namespace visgame::harness {

/// Outcome of one corpus-wide check. `rows` holds one record per case.
struct CheckResult {
    std::string name;
    bool pass = false;
    std::size_t cases = 0;
    std::size_t violations = 0;
    std::string detail;
    double seconds = 0;
    nlohmann::json rows = nlohmann::json::array();
};

/// two_dismantle succeeds on every visibility graph and the checker accepts
/// every certificate.
CheckResult check_visibility_dismantlability(const std::vector<GeneratedPolygon>& corpus);

/// Optimal graph capture time is at most ceil(n/2) on every visibility graph.
CheckResult check_capture_time_bound(const std::vector<GeneratedPolygon>& corpus);

/// Every nonconvex polygon has two maximal pockets whose u-vertices do not
/// see each other.
CheckResult check_two_pockets(const std::vector<GeneratedPolygon>& corpus);

/// Shortest-path cop against the corridor, discrete-optimal and random
/// robbers, `trials` runs each with different cop starts and seeds: capture
/// within n rounds, strictly shrinking active regions, no Case 1(b) turns.
CheckResult check_polygon_game(const std::vector<GeneratedPolygon>& corpus, int trials = 3);

/// Zigzag(k): corridor-robber survival >= floor(n/4) - 2. Corridor(k): link
/// diameter over vertices and anchors is 3 and survival >= k/2 - 1. Survival
/// counts the rounds completed before the capturing move.
CheckResult check_lower_bounds(int zigzag_min = 3, int zigzag_max = 12, int corridor_min = 6, int corridor_max = 18);

/// Over every connected graph on up to max_n vertices (one labelling per
/// degree-sorted representative), dismantle succeeds exactly when the
/// solver says the cop wins.
CheckResult check_dismantle_equivalence(std::size_t max_n = 7);

/// Splinegon strategy on the fixtures and `count` random regions against the
/// boundary-cycling, bay-hopping and random robbers from two cop starts:
/// capture within 4(2n^2 + 2n + d) rounds, strictly shrinking active
/// regions, no Case 1(b) turns, a certified progress event in every middle
/// round and event counts within budget. The crescent must be rejected.
CheckResult check_splinegon_strategy(std::size_t count = 50);

/// Two runs with the same seed give byte-identical trace JSON for every
/// polygon family and splinegon fixture.
CheckResult check_determinism(std::uint64_t seed = 7);

/// Survival of the corridor robber against the shortest-path cop.
int corridor_robber_survival(const GeneratedPolygon& g);

/// Largest link distance among the polygon's vertices and anchors.
int sampled_link_diameter(const GeneratedPolygon& g);

}  // namespace visgame::harness
