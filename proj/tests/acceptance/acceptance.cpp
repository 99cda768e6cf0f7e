#include "visgame/harness/experiments.h"

#include <cstdio>
#include <functional>
#include <vector>

using namespace visgame::harness;

int main() {
    const std::vector<GeneratedPolygon> corpus = random_corpus(200);
    const std::vector<std::function<CheckResult()>> checks = {
        [&] { return check_visibility_dismantlability(corpus); },
        [&] { return check_capture_time_bound(corpus); },
        [&] { return check_two_pockets(corpus); },
        [&] { return check_polygon_game(corpus, 3); },
        [] { return check_lower_bounds(3, 12, 6, 18); },
        [] { return check_dismantle_equivalence(7); },
        [] { return check_splinegon_strategy(50); },
        [] { return check_determinism(7); },
    };
    int failures = 0;
    for (const auto& check : checks) {
        CheckResult r = check();
        if (!r.pass) ++failures;
        std::printf("%s %s: %s (%.1fs)\n", r.pass ? "PASS" : "FAIL", r.name.c_str(), r.detail.c_str(), r.seconds);
        std::fflush(stdout);
    }
    return failures == 0 ? 0 : 1;
}
