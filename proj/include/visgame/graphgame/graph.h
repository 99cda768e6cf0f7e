#pragma once

#include <boost/dynamic_bitset.hpp>
#include <json.hpp>

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

namespace visgame::graphgame {

using Bitset = boost::dynamic_bitset<>;
using Edge = std::pair<std::size_t, std::size_t>;

/// Simple undirected graph with sorted adjacency lists and closed
/// neighbourhood bitsets.
class Graph {
public:
    Graph() = default;
    /// Throws std::invalid_argument on self-loops or out-of-range endpoints.
    /// Duplicate edges are merged.
    Graph(std::size_t n, const std::vector<Edge>& edges);

    [[nodiscard]] std::size_t size() const { return adjacency_.size(); }
    [[nodiscard]] const std::vector<std::size_t>& neighbors(std::size_t v) const;
    /// N[v], including v.
    [[nodiscard]] const Bitset& closed_neighborhood(std::size_t v) const;
    [[nodiscard]] bool adjacent(std::size_t a, std::size_t b) const;
    [[nodiscard]] std::vector<Edge> edges() const;
    [[nodiscard]] bool connected() const;

private:
    void check_index(std::size_t v) const;

    std::vector<std::vector<std::size_t>> adjacency_;
    std::vector<Bitset> closed_;
};

Graph complete_graph(std::size_t n);
Graph cycle_graph(std::size_t n);

/// N[a] ⊇ N[b]. Throws std::out_of_range on a bad index.
bool dominates(const Graph& g, std::size_t a, std::size_t b);

/// Domination inside the subgraph induced by `alive`.
bool dominates_in(const Graph& g, const Bitset& alive, std::size_t a, std::size_t b);

struct DismantleCertificate {
    std::vector<std::size_t> order;
    /// dominators[i] dominated order[i] when it was removed. The last vertex
    /// has no dominator and repeats itself.
    std::vector<std::size_t> dominators;
};

/// Greedy elimination of dominated vertices.
std::optional<DismantleCertificate> dismantle(const Graph& g);
/// Same, restricted to the induced subgraph on `alive`.
std::optional<DismantleCertificate> dismantle_in(const Graph& g, const Bitset& alive);

/// Replays the removals and re-tests every domination.
bool check_dismantle(const Graph& g, const DismantleCertificate& cert);

struct TwoDismantleCertificate {
    std::vector<Edge> pairs;
    /// For each pair, the vertices dominating its first and second members.
    std::vector<Edge> dominators;
    /// Dismantling of what is left once the pairs are gone (fewer than 7 vertices).
    DismantleCertificate base;
};

/// Backtracking search for a sequence of dominated pairs down to a cop-win
/// graph on fewer than 7 vertices. Failing residual vertex sets are memoized.
std::optional<TwoDismantleCertificate> two_dismantle(const Graph& g);

bool check_two_dismantle(const Graph& g, const TwoDismantleCertificate& cert);

nlohmann::json graph_to_json(const Graph& g);
Graph graph_from_json(const nlohmann::json& j);
nlohmann::json certificate_to_json(const DismantleCertificate& cert);
nlohmann::json certificate_to_json(const TwoDismantleCertificate& cert);

}  // namespace visgame::graphgame
