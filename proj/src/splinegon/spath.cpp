#include "visgame/splinegon/spath.h"

#include "visgame/splinegon/tangents.h"

#include <algorithm>
#include <functional>
#include <limits>
#include <queue>

namespace visgame::splinegon {

std::vector<Vec2> SplinePath::points() const {
    std::vector<Vec2> out;
    for (const PathPiece& p : pieces) out.push_back(p.from);
    if (!pieces.empty()) out.push_back(pieces.back().to);
    return out;
}

TangentGraph::TangentGraph(const Splinegon& region) : region_(&region) {
    for (std::size_t i = 0; i < region.size(); ++i)
        if (region.edge(i).concave()) concave_.push_back(i);
    const std::size_t n = region.size();
    for (std::size_t v = 0; v < n; ++v) add_node(nodes_, region.vertex(v));
    for (std::size_t v = 0; v < n; ++v) add_tangent_links(nodes_, links_, v);
    for (std::size_t x = 0; x < concave_.size(); ++x)
        for (std::size_t y = x + 1; y < concave_.size(); ++y) {
            const ArcEdge& e1 = region.edge(concave_[x]);
            const ArcEdge& e2 = region.edge(concave_[y]);
            for (const auto& [t1, t2] : circle_bitangents(e1.center, e1.radius(), e2.center, e2.radius())) {
                if (near(t1, t2) || !e1.angle_in_sweep(t1) || !e2.angle_in_sweep(t2) || !region.sees(t1, t2)) continue;
                const std::size_t a = add_node(nodes_, t1);
                links_.push_back({a, add_node(nodes_, t2)});
            }
        }
}

std::size_t TangentGraph::add_node(std::vector<Node>& nodes, Vec2 p) const {
    for (std::size_t i = 0; i < nodes.size(); ++i)
        if (near(nodes[i].p, p, 10 * eps)) return i;
    Node node{p, {}};
    for (std::size_t a : concave_) {
        const ArcEdge& e = region_->edge(a);
        double s = 0;
        if (std::abs(dist(p, e.center) - e.radius()) <= 10 * eps && e.angle_in_sweep(p, &s)) node.on.push_back({a, s});
    }
    nodes.push_back(std::move(node));
    return nodes.size() - 1;
}

void TangentGraph::add_tangent_links(std::vector<Node>& nodes, std::vector<Link>& links, std::size_t from) const {
    const Vec2 p = nodes[from].p;
    for (std::size_t v = 0; v < region_->size(); ++v)
        if (v != from && !near(p, nodes[v].p) && region_->sees(p, nodes[v].p)) links.push_back({from, v});
    for (std::size_t a : concave_) {
        const ArcEdge& e = region_->edge(a);
        const std::vector<Vec2> pts = circle_tangent_points(p, e.center, e.radius());
        if (pts.size() != 2) continue;
        for (Vec2 t : pts)
            if (e.angle_in_sweep(t) && region_->sees(p, t)) {
                const std::size_t k = add_node(nodes, t);
                links.push_back({from, k});
            }
    }
}

SplinePath TangentGraph::shortest_path(Vec2 s, Vec2 t) const {
    const Splinegon& region = *region_;
    if (!region.contains(s) || !region.contains(t))
        throw StrategyViolation("shortest_path: endpoint outside the region");
    SplinePath path;
    if (region.sees(s, t)) {
        if (!near(s, t)) path.pieces.push_back({s, t, std::nullopt});
        path.length = dist(s, t);
        return path;
    }
    std::vector<Node> nodes = nodes_;
    std::vector<Link> links = links_;
    const std::size_t src = add_node(nodes, s);
    add_tangent_links(nodes, links, src);
    const std::size_t dst = add_node(nodes, t);
    add_tangent_links(nodes, links, dst);

    struct Arc {
        std::size_t to;
        double w;
        std::optional<std::size_t> edge;
    };
    std::vector<std::vector<Arc>> adj(nodes.size());
    for (const Link& l : links) {
        const double w = dist(nodes[l.a].p, nodes[l.b].p);
        adj[l.a].push_back({l.b, w, std::nullopt});
        adj[l.b].push_back({l.a, w, std::nullopt});
    }
    for (std::size_t a : concave_) {
        std::vector<std::pair<double, std::size_t>> chain;
        for (std::size_t k = 0; k < nodes.size(); ++k)
            for (const Member& m : nodes[k].on)
                if (m.arc == a) chain.emplace_back(m.s, k);
        std::sort(chain.begin(), chain.end());
        const double full = region.edge(a).length();
        for (std::size_t k = 0; k + 1 < chain.size(); ++k) {
            const double w = full * (chain[k + 1].first - chain[k].first);
            adj[chain[k].second].push_back({chain[k + 1].second, w, a});
            adj[chain[k + 1].second].push_back({chain[k].second, w, a});
        }
    }

    const double inf = std::numeric_limits<double>::infinity();
    std::vector<double> d(nodes.size(), inf);
    std::vector<std::size_t> pred(nodes.size(), nodes.size());
    std::vector<std::optional<std::size_t>> via(nodes.size());
    using Entry = std::pair<double, std::size_t>;
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> queue;
    d[src] = 0;
    queue.push({0, src});
    while (!queue.empty()) {
        const auto [du, u] = queue.top();
        queue.pop();
        if (du > d[u]) continue;
        for (const Arc& e : adj[u])
            if (du + e.w < d[e.to]) {
                d[e.to] = du + e.w;
                pred[e.to] = u;
                via[e.to] = e.edge;
                queue.push({d[e.to], e.to});
            }
    }
    if (d[dst] == inf) throw StrategyViolation("shortest_path: no route from " + to_string(s) + " to " + to_string(t));

    std::vector<PathPiece> raw;
    for (std::size_t v = dst; v != src; v = pred[v]) raw.push_back({nodes[pred[v]].p, nodes[v].p, via[v]});
    std::reverse(raw.begin(), raw.end());
    for (const PathPiece& piece : raw) {
        if (near(piece.from, piece.to)) continue;
        if (!path.pieces.empty()) {
            PathPiece& last = path.pieces.back();
            const bool same_arc = piece.arc && last.arc == piece.arc;
            const bool collinear = !piece.arc && !last.arc &&
                                   std::abs(cross(unit(last.to - last.from), unit(piece.to - piece.from))) < 1e-9 &&
                                   dot(last.to - last.from, piece.to - piece.from) > 0;
            if (same_arc || collinear) {
                last.to = piece.to;
                continue;
            }
        }
        path.pieces.push_back(piece);
    }
    path.length = d[dst];
    return path;
}

SplinePath splinegon_shortest_path(Vec2 s, Vec2 t, const Splinegon& region) {
    return TangentGraph(region).shortest_path(s, t);
}

}  // namespace visgame::splinegon
