#include "visgame/graphgame/solver.h"
#include "visgame/pursuit/game.h"

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>

namespace visgame::pursuit {

using geom::Location;

Point cop_move_shortest_path(const GameState& state) {
    const Polygon& poly = state.polygon();
    if (state.cop == state.robber || geom::sees(state.cop, state.robber, poly)) return state.robber;
    return shortest_path(state.cop, state.robber, *state.index).waypoints[1];
}

Point ShortestPathCop::place(const PathIndex& index) {
    if (start_vertex_ >= index.polygon().size()) throw std::invalid_argument("cop start vertex out of range");
    return index.polygon()[start_vertex_];
}

Point ShortestPathCop::move(const GameState& state) { return cop_move_shortest_path(state); }

CorridorRobber::CorridorRobber(std::vector<Point> anchors) : anchors_(std::move(anchors)) {
    if (anchors_.empty()) throw std::invalid_argument("corridor robber needs anchors");
}

Point CorridorRobber::place(const GameState& state) {
    const Polygon& poly = state.polygon();
    const auto k = static_cast<long>(anchors_.size());
    const long middle = std::max(0L, k / 2 - 1);  // x_{floor(k/2)} in 1-based numbering
    for (long offset = 0; offset < k; ++offset)
        for (long i : {middle - offset, middle + offset})
            if (i >= 0 && i < k && !geom::sees(state.cop, anchors_[i], poly)) return anchors_[i];
    return anchors_[middle];
}

Point CorridorRobber::move(const GameState& state) {
    const Polygon& poly = state.polygon();
    if (!geom::sees(state.cop, state.robber, poly)) return state.robber;
    auto it = std::find(anchors_.begin(), anchors_.end(), state.robber);
    if (it == anchors_.end()) return state.robber;
    const auto i = static_cast<std::size_t>(it - anchors_.begin());
    std::vector<std::size_t> options;
    if (i + 1 < anchors_.size()) options.push_back(i + 1);
    if (i > 0) options.push_back(i - 1);
    // Prefer the hidden neighbour farther from the cop.
    std::optional<std::size_t> best;
    for (std::size_t j : options) {
        if (geom::sees(state.cop, anchors_[j], poly) || !geom::sees(state.robber, anchors_[j], poly)) continue;
        if (!best || geom::squared_distance(anchors_[j], state.cop) > geom::squared_distance(anchors_[*best], state.cop))
            best = j;
    }
    return best ? anchors_[*best] : state.robber;
}

std::vector<Point> default_samples(const Polygon& poly) {
    std::vector<Point> out = poly.vertices();
    for (std::size_t i = 0; i < poly.size(); ++i) out.push_back(geom::midpoint(poly[i], poly[poly.next(i)]));
    return out;
}

DiscreteOptimalRobber::DiscreteOptimalRobber(const PathIndex& index, std::vector<Point> samples)
    : index_(index), samples_(std::move(samples)) {
    std::sort(samples_.begin(), samples_.end());
    samples_.erase(std::unique(samples_.begin(), samples_.end()), samples_.end());
    const std::size_t m = samples_.size();
    sample_sees_.assign(m, std::vector<bool>(m, true));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j)
            sample_sees_[i][j] = sample_sees_[j][i] = geom::sees(samples_[i], samples_[j], index_.polygon());
}

Point DiscreteOptimalRobber::best_reply(const GameState& state, bool placing) {
    const Polygon& poly = index_.polygon();
    std::vector<Point> nodes = samples_;
    auto node_of = [&](const Point& p) {
        auto it = std::find(nodes.begin(), nodes.end(), p);
        if (it != nodes.end()) return static_cast<std::size_t>(it - nodes.begin());
        nodes.push_back(p);
        return nodes.size() - 1;
    };
    const std::size_t c = node_of(state.cop);
    const std::size_t r = placing ? c : node_of(state.robber);
    std::vector<graphgame::Edge> edges;
    for (std::size_t i = 0; i < nodes.size(); ++i)
        for (std::size_t j = i + 1; j < nodes.size(); ++j) {
            bool vis = i < samples_.size() && j < samples_.size() ? sample_sees_[i][j]
                                                                   : geom::sees(nodes[i], nodes[j], poly);
            if (vis) edges.emplace_back(i, j);
        }
    graphgame::Graph g(nodes.size(), edges);
    graphgame::GameSolution sol = graphgame::solve_game(g);

    // Robber reply: maximise the cop's remaining moves (-1 = never caught).
    auto score = [&](std::size_t x) {
        int v = sol.cop_value(c, x);
        return v < 0 ? 1 << 30 : v;
    };
    std::vector<std::size_t> options;
    if (placing) {
        for (std::size_t x = 0; x < nodes.size(); ++x)
            if (x != c) options.push_back(x);
    } else {
        options.push_back(r);
        for (std::size_t x : g.neighbors(r))
            if (x != c) options.push_back(x);
    }
    if (options.empty()) return state.robber;
    std::size_t best = options.front();
    for (std::size_t x : options) {
        int sx = score(x), sb = score(best);
        if (sx > sb) best = x;
        else if (sx == sb) {
            auto dx = geom::squared_distance(nodes[x], state.cop), db = geom::squared_distance(nodes[best], state.cop);
            if (dx > db || (dx == db && nodes[x] < nodes[best])) best = x;
        }
    }
    return nodes[best];
}

Point DiscreteOptimalRobber::place(const GameState& state) { return best_reply(state, true); }

Point DiscreteOptimalRobber::move(const GameState& state) { return best_reply(state, false); }

namespace {

std::mt19937_64 round_rng(std::uint64_t seed, int round) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(round)};
    return std::mt19937_64(seq);
}

/// Vertices, edge midpoints and random lattice points of the bounding box.
std::vector<Point> random_candidates(const Polygon& poly, std::mt19937_64& rng) {
    std::vector<Point> out = default_samples(poly);
    Scalar x0 = poly[0].x, x1 = x0, y0 = poly[0].y, y1 = y0;
    for (const Point& p : poly.vertices()) {
        x0 = std::min(x0, p.x);
        x1 = std::max(x1, p.x);
        y0 = std::min(y0, p.y);
        y1 = std::max(y1, p.y);
    }
    const long grid = 64;
    for (int k = 0; k < 32; ++k) {
        Point p(x0 + (x1 - x0) * geom::ratio(static_cast<long>(rng() % (grid + 1)), grid),
                y0 + (y1 - y0) * geom::ratio(static_cast<long>(rng() % (grid + 1)), grid));
        if (geom::point_location(p, poly) != Location::Exterior) out.push_back(p);
    }
    return out;
}

}  // namespace

Point RandomRobber::place(const GameState& state) {
    auto rng = round_rng(seed_, 0);
    std::vector<Point> cands = random_candidates(state.polygon(), rng);
    std::vector<Point> hidden;
    for (const Point& p : cands)
        if (!geom::sees(state.cop, p, state.polygon())) hidden.push_back(p);
    const auto& pool = hidden.empty() ? cands : hidden;
    return pool[rng() % pool.size()];
}

Point RandomRobber::move(const GameState& state) {
    auto rng = round_rng(seed_, state.round);
    std::vector<Point> cands = random_candidates(state.polygon(), rng);
    std::vector<Point> visible{state.robber};
    for (const Point& p : cands)
        if (p != state.cop && geom::sees(state.robber, p, state.polygon())) visible.push_back(p);
    return visible[rng() % visible.size()];
}

}  // namespace visgame::pursuit
