#include "visgame/graphgame/solver.h"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace visgame::graphgame {

int GameSolution::start_value(std::size_t c) const {
    if (n == 1) return 0;
    int worst = 0;
    for (std::size_t r = 0; r < n; ++r) {
        if (r == c) continue;
        int v = cop_value(c, r);
        if (v < 0) return -1;
        worst = std::max(worst, v);
    }
    return worst;
}

GameSolution solve_game(const Graph& g) {
    const std::size_t n = g.size();
    if (n == 0) throw std::invalid_argument("empty graph");
    if (n > max_solver_vertices) throw std::invalid_argument("graph too large for the solver");
    if (!g.connected()) throw std::invalid_argument("solver needs a connected graph");

    GameSolution s;
    s.n = n;
    s.cop_turn.assign(n * n, -1);
    s.robber_turn.assign(n * n, -1);

    // Robber-turn state (c, r) is decided once every robber option has a
    // known cop-turn value; remaining[c*n+r] counts the undecided options.
    std::vector<std::int32_t> remaining(n * n, 0);
    for (std::size_t c = 0; c < n; ++c)
        for (std::size_t r = 0; r < n; ++r) {
            if (c == r) continue;
            auto opts = static_cast<std::int32_t>(g.neighbors(r).size()) + 1;
            if (g.adjacent(c, r)) --opts;
            remaining[c * n + r] = opts;
        }

    // Cop-turn states are finalised in nondecreasing value order.
    std::deque<std::size_t> queue;
    for (std::size_t c = 0; c < n; ++c)
        for (std::size_t r = 0; r < n; ++r)
            if (c == r || g.adjacent(c, r)) {
                s.cop_turn[c * n + r] = 1;
                queue.push_back(c * n + r);
            }

    auto relax_robber_pred = [&](std::size_t c, std::size_t r, int value) {
        if (c == r) return;
        std::size_t idx = c * n + r;
        if (--remaining[idx] != 0) return;
        s.robber_turn[idx] = value;
        // Cop-turn predecessors: cops at c or a neighbour of c, robber at r.
        auto visit = [&](std::size_t pc) {
            std::size_t pidx = pc * n + r;
            if (s.cop_turn[pidx] >= 0) return;
            s.cop_turn[pidx] = value + 1;
            queue.push_back(pidx);
        };
        visit(c);
        for (std::size_t pc : g.neighbors(c)) visit(pc);
    };

    while (!queue.empty()) {
        std::size_t idx = queue.front();
        queue.pop_front();
        std::size_t c = idx / n, rp = idx % n;
        int value = s.cop_turn[idx];
        // The robber reached rp from rp itself or a neighbour; c == rp only
        // arises as a capture state, which no robber move leads to.
        if (c == rp) continue;
        relax_robber_pred(c, rp, value);
        for (std::size_t r : g.neighbors(rp)) relax_robber_pred(c, r, value);
    }

    for (std::size_t c = 0; c < n; ++c) {
        int v = s.start_value(c);
        if (v < 0) continue;
        if (!s.capture_time || v < *s.capture_time) {
            s.capture_time = v;
            s.cop_start = c;
        }
    }
    s.cop_wins = s.capture_time.has_value();
    return s;
}

std::size_t best_cop_move(const Graph& g, const GameSolution& s, std::size_t c, std::size_t r) {
    if (c == r || g.adjacent(c, r)) return r;
    std::size_t best = c;
    int best_value = s.robber_value(c, r);
    for (std::size_t nc : g.neighbors(c)) {
        int v = s.robber_value(nc, r);
        if (v >= 0 && (best_value < 0 || v < best_value)) {
            best = nc;
            best_value = v;
        }
    }
    return best;
}

std::size_t best_robber_move(const Graph& g, const GameSolution& s, std::size_t c, std::size_t r) {
    std::size_t best = r;
    int best_value = s.cop_value(c, r);
    for (std::size_t nr : g.neighbors(r)) {
        if (nr == c) continue;
        int v = s.cop_value(c, nr);
        if (best_value >= 0 && (v < 0 || v > best_value)) {
            best = nr;
            best_value = v;
        }
    }
    return best;
}

}  // namespace visgame::graphgame
