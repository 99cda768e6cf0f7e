#pragma once

#include "visgame/graphgame/graph.h"

#include <cstdint>
#include <optional>
#include <vector>

namespace visgame::graphgame {

inline constexpr std::size_t max_solver_vertices = 2000;

/// Exact values of the one-cop game. Values count cop moves until capture;
/// -1 means the robber evades forever.
struct GameSolution {
    std::size_t n = 0;
    bool cop_wins = false;
    std::optional<int> capture_time;
    /// Best cop start (smallest index among optimal ones); set iff cop_wins.
    std::optional<std::size_t> cop_start;
    /// Indexed c * n + r. cop_turn: cop to move. robber_turn: robber to move,
    /// only meaningful for c != r.
    std::vector<std::int32_t> cop_turn;
    std::vector<std::int32_t> robber_turn;

    [[nodiscard]] int cop_value(std::size_t c, std::size_t r) const { return cop_turn[c * n + r]; }
    [[nodiscard]] int robber_value(std::size_t c, std::size_t r) const { return robber_turn[c * n + r]; }
    /// Worst-case capture time for a cop starting at c (-1 if the robber escapes).
    [[nodiscard]] int start_value(std::size_t c) const;
};

/// Retrograde analysis over states (cop, robber, side to move). Both players
/// may stay put. Throws std::invalid_argument for disconnected graphs or
/// graphs above max_solver_vertices.
GameSolution solve_game(const Graph& g);

/// Optimal cop move from c against a robber at r (may be c itself).
std::size_t best_cop_move(const Graph& g, const GameSolution& s, std::size_t c, std::size_t r);
/// Optimal robber move from r with the cop at c (may be r itself).
std::size_t best_robber_move(const Graph& g, const GameSolution& s, std::size_t c, std::size_t r);

}  // namespace visgame::graphgame
