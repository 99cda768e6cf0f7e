#include "visgame/graphgame/graph.h"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <unordered_set>

namespace visgame::graphgame {

Graph::Graph(std::size_t n, const std::vector<Edge>& edges) : adjacency_(n), closed_(n, Bitset(n)) {
    for (auto [a, b] : edges) {
        if (a >= n || b >= n) throw std::invalid_argument("edge endpoint out of range");
        if (a == b) throw std::invalid_argument("self-loop at vertex " + std::to_string(a));
        adjacency_[a].push_back(b);
        adjacency_[b].push_back(a);
    }
    for (std::size_t v = 0; v < n; ++v) {
        auto& adj = adjacency_[v];
        std::sort(adj.begin(), adj.end());
        adj.erase(std::unique(adj.begin(), adj.end()), adj.end());
        closed_[v].set(v);
        for (std::size_t w : adj) closed_[v].set(w);
    }
}

void Graph::check_index(std::size_t v) const {
    if (v >= size()) throw std::out_of_range("vertex " + std::to_string(v) + " out of range");
}

const std::vector<std::size_t>& Graph::neighbors(std::size_t v) const {
    check_index(v);
    return adjacency_[v];
}

const Bitset& Graph::closed_neighborhood(std::size_t v) const {
    check_index(v);
    return closed_[v];
}

bool Graph::adjacent(std::size_t a, std::size_t b) const {
    check_index(a);
    check_index(b);
    return a != b && closed_[a].test(b);
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    for (std::size_t a = 0; a < size(); ++a)
        for (std::size_t b : adjacency_[a])
            if (a < b) out.emplace_back(a, b);
    return out;
}

bool Graph::connected() const {
    if (size() == 0) return true;
    std::vector<bool> seen(size(), false);
    std::vector<std::size_t> stack{0};
    seen[0] = true;
    std::size_t count = 1;
    while (!stack.empty()) {
        std::size_t v = stack.back();
        stack.pop_back();
        for (std::size_t w : adjacency_[v])
            if (!seen[w]) {
                seen[w] = true;
                ++count;
                stack.push_back(w);
            }
    }
    return count == size();
}

Graph complete_graph(std::size_t n) {
    std::vector<Edge> e;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b) e.emplace_back(a, b);
    return Graph(n, e);
}

Graph cycle_graph(std::size_t n) {
    std::vector<Edge> e;
    for (std::size_t a = 0; a < n; ++a) e.emplace_back(a, (a + 1) % n);
    return Graph(n, e);
}

bool dominates(const Graph& g, std::size_t a, std::size_t b) {
    return g.closed_neighborhood(b).is_subset_of(g.closed_neighborhood(a));
}

bool dominates_in(const Graph& g, const Bitset& alive, std::size_t a, std::size_t b) {
    return (g.closed_neighborhood(b) & alive).is_subset_of(g.closed_neighborhood(a));
}

namespace {

/// Some alive vertex other than b (and other than the excluded ones) that
/// dominates b, or npos.
std::size_t find_dominator(const Graph& g, const Bitset& alive, std::size_t b, std::size_t skip1, std::size_t skip2) {
    // A dominator of b is adjacent to b, so only neighbours need checking.
    for (std::size_t a : g.neighbors(b)) {
        if (!alive.test(a) || a == skip1 || a == skip2) continue;
        if (dominates_in(g, alive, a, b)) return a;
    }
    return Bitset::npos;
}

}  // namespace

std::optional<DismantleCertificate> dismantle_in(const Graph& g, const Bitset& alive_in) {
    Bitset alive = alive_in;
    DismantleCertificate cert;
    std::size_t left = alive.count();
    // Remove the dominated vertex of least residual degree (then least
    // original degree) so that well-connected vertices survive to the end.
    while (left > 1) {
        std::size_t pick = Bitset::npos, pick_dom = Bitset::npos;
        std::size_t pick_res = 0, pick_deg = 0;
        for (std::size_t v = alive.find_first(); v != Bitset::npos; v = alive.find_next(v)) {
            std::size_t d = find_dominator(g, alive, v, v, v);
            if (d == Bitset::npos) continue;
            std::size_t res = (g.closed_neighborhood(v) & alive).count(), deg = g.neighbors(v).size();
            if (pick == Bitset::npos || res < pick_res || (res == pick_res && deg < pick_deg)) {
                pick = v;
                pick_dom = d;
                pick_res = res;
                pick_deg = deg;
            }
        }
        if (pick == Bitset::npos) return std::nullopt;
        cert.order.push_back(pick);
        cert.dominators.push_back(pick_dom);
        alive.reset(pick);
        --left;
    }
    if (left == 1) {
        std::size_t last = alive.find_first();
        cert.order.push_back(last);
        cert.dominators.push_back(last);
    }
    return cert;
}

std::optional<DismantleCertificate> dismantle(const Graph& g) {
    Bitset all(g.size());
    all.set();
    return dismantle_in(g, all);
}

namespace {

bool check_dismantle_in(const Graph& g, Bitset alive, const DismantleCertificate& cert) {
    if (cert.order.size() != alive.count() || cert.dominators.size() != cert.order.size()) return false;
    for (std::size_t i = 0; i < cert.order.size(); ++i) {
        std::size_t v = cert.order[i], d = cert.dominators[i];
        if (v >= g.size() || d >= g.size() || !alive.test(v)) return false;
        if (i + 1 == cert.order.size()) return d == v;
        if (d == v || !alive.test(d) || !dominates_in(g, alive, d, v)) return false;
        alive.reset(v);
    }
    return true;
}

}  // namespace

bool check_dismantle(const Graph& g, const DismantleCertificate& cert) {
    Bitset all(g.size());
    all.set();
    return check_dismantle_in(g, all, cert);
}

namespace {

constexpr std::size_t two_dismantle_base = 7;

struct BitsetHash {
    std::size_t operator()(const Bitset& b) const {
        std::size_t h = 1469598103934665603ull;
        for (std::size_t v = b.find_first(); v != Bitset::npos; v = b.find_next(v)) h = (h ^ v) * 1099511628211ull;
        return h;
    }
};

struct PairSearch {
    const Graph& g;
    std::unordered_set<Bitset, BitsetHash> failed;
    TwoDismantleCertificate cert;

    bool run(Bitset& alive) {
        if (alive.count() < two_dismantle_base) {
            auto base = dismantle_in(g, alive);
            if (!base) return false;
            cert.base = *base;
            return true;
        }
        if (failed.count(alive)) return false;

        std::vector<std::size_t> dominated;
        for (std::size_t v = alive.find_first(); v != Bitset::npos; v = alive.find_next(v))
            if (find_dominator(g, alive, v, v, v) != Bitset::npos) dominated.push_back(v);

        for (std::size_t i = 0; i < dominated.size(); ++i)
            for (std::size_t j = i + 1; j < dominated.size(); ++j) {
                std::size_t a = dominated[i], b = dominated[j];
                std::size_t da = find_dominator(g, alive, a, a, b);
                if (da == Bitset::npos) continue;
                std::size_t db = find_dominator(g, alive, b, a, b);
                if (db == Bitset::npos) continue;
                alive.reset(a);
                alive.reset(b);
                cert.pairs.emplace_back(a, b);
                cert.dominators.emplace_back(da, db);
                bool ok = run(alive);
                alive.set(a);
                alive.set(b);
                if (ok) return true;
                cert.pairs.pop_back();
                cert.dominators.pop_back();
            }
        failed.insert(alive);
        return false;
    }
};

}  // namespace

std::optional<TwoDismantleCertificate> two_dismantle(const Graph& g) {
    PairSearch search{g, {}, {}};
    Bitset alive(g.size());
    alive.set();
    if (!search.run(alive)) return std::nullopt;
    return search.cert;
}

bool check_two_dismantle(const Graph& g, const TwoDismantleCertificate& cert) {
    if (cert.pairs.size() != cert.dominators.size()) return false;
    Bitset alive(g.size());
    alive.set();
    for (std::size_t i = 0; i < cert.pairs.size(); ++i) {
        if (alive.count() < two_dismantle_base) return false;
        auto [a, b] = cert.pairs[i];
        auto [da, db] = cert.dominators[i];
        for (std::size_t v : {a, b, da, db})
            if (v >= g.size() || !alive.test(v)) return false;
        if (a == b || da == a || da == b || db == a || db == b) return false;
        if (!dominates_in(g, alive, da, a) || !dominates_in(g, alive, db, b)) return false;
        alive.reset(a);
        alive.reset(b);
    }
    if (alive.count() >= two_dismantle_base) return false;
    return check_dismantle_in(g, alive, cert.base);
}

nlohmann::json graph_to_json(const Graph& g) {
    nlohmann::json edges = nlohmann::json::array();
    for (auto [a, b] : g.edges()) edges.push_back({a, b});
    return {{"n", g.size()}, {"edges", edges}};
}

Graph graph_from_json(const nlohmann::json& j) {
    try {
        auto n = j.at("n").get<std::size_t>();
        std::vector<Edge> edges;
        for (const auto& e : j.at("edges")) edges.emplace_back(e.at(0).get<std::size_t>(), e.at(1).get<std::size_t>());
        return Graph(n, edges);
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("bad graph JSON: ") + e.what());
    }
}

nlohmann::json certificate_to_json(const DismantleCertificate& cert) {
    return {{"order", cert.order}, {"dominators", cert.dominators}};
}

nlohmann::json certificate_to_json(const TwoDismantleCertificate& cert) {
    nlohmann::json pairs = nlohmann::json::array(), doms = nlohmann::json::array();
    for (auto [a, b] : cert.pairs) pairs.push_back({a, b});
    for (auto [a, b] : cert.dominators) doms.push_back({a, b});
    return {{"pairs", pairs}, {"dominators", doms}, {"base", certificate_to_json(cert.base)}};
}

}  // namespace visgame::graphgame
