#include "visgame/pockets/pockets.h"

#include <algorithm>
#include <set>
#include <string>

namespace visgame::pockets {

using geom::Location;
using geom::Scalar;

graphgame::Graph to_graph(const geom::VisGraph& vg) { return graphgame::Graph(vg.n, vg.edges); }

std::optional<Pocket> pocket(const Polygon& poly, std::size_t u, std::size_t v) {
    const std::size_t n = poly.size();
    if (u >= n || v >= n || (poly.next(u) != v && poly.prev(u) != v))
        throw std::invalid_argument("pocket: uv is not a polygon edge");
    if (!poly.is_reflex(v)) return std::nullopt;

    Point dir = poly[v] - poly[u];
    Scalar s = geom::ray_extent(poly[v], dir, poly);
    Point t = poly[v] + s * dir;

    // Walk away from u until the edge holding t.
    const bool forward = poly.next(u) == v;
    std::vector<Point> chain{poly[v]};
    std::size_t k = v;
    for (std::size_t steps = 0; steps < n; ++steps) {
        std::size_t k2 = forward ? poly.next(k) : poly.prev(k);
        if (poly[k2] == t) {
            chain.push_back(t);
            break;
        }
        if (geom::on_segment(t, poly[k], poly[k2]) && poly[k] != t) {
            chain.push_back(t);
            break;
        }
        chain.push_back(poly[k2]);
        k = k2;
    }
    if (chain.back() != t) throw TheoremViolation("pocket: ray hit point not found on the boundary");
    if (!forward) std::reverse(chain.begin(), chain.end());
    Pocket p;
    p.u = u;
    p.v = v;
    p.t = t;
    p.region = Polygon::unchecked(std::move(chain));
    return p;
}

std::vector<Pocket> all_pockets(const Polygon& poly) {
    std::vector<Pocket> out;
    for (std::size_t u = 0; u < poly.size(); ++u)
        for (std::size_t v : {poly.next(u), poly.prev(u)})
            if (auto p = pocket(poly, u, v)) out.push_back(std::move(*p));
    return out;
}

bool region_contains(const Polygon& outer, const Polygon& inner) {
    for (std::size_t i = 0; i < inner.size(); ++i)
        if (!geom::segment_inside(inner[i], inner[inner.next(i)], outer)) return false;
    return true;
}

std::vector<Pocket> maximal_pockets(const Polygon& poly) {
    std::vector<Pocket> all = all_pockets(poly);
    const std::size_t m = all.size();
    std::vector<std::vector<char>> contains(m, std::vector<char>(m, 0));
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b)
            contains[a][b] = a == b || region_contains(all[a].region, all[b].region);
    std::vector<Pocket> out;
    for (std::size_t b = 0; b < m; ++b) {
        bool maximal = true;
        for (std::size_t a = 0; a < m && maximal; ++a)
            if (contains[a][b] && !contains[b][a]) maximal = false;
        if (maximal) out.push_back(all[b]);
    }
    return out;
}

std::optional<std::pair<std::size_t, std::size_t>> invisible_u_pair(const Polygon& poly,
                                                                   const std::vector<Pocket>& pockets) {
    for (std::size_t i = 0; i < pockets.size(); ++i)
        for (std::size_t j = i + 1; j < pockets.size(); ++j)
            if (!geom::sees(poly[pockets[i].u], poly[pockets[j].u], poly)) return std::make_pair(i, j);
    return std::nullopt;
}

std::vector<Edge> visibility_increasing_edges(const Polygon& poly) {
    std::vector<Edge> out;
    if (poly.is_convex()) {
        for (std::size_t u = 0; u < poly.size(); ++u) out.push_back({u, poly.next(u)});
        return out;
    }
    for (const Pocket& p : maximal_pockets(poly))
        if (std::find(out.begin(), out.end(), Edge{p.u, p.v}) == out.end()) out.push_back({p.u, p.v});
    return out;
}

std::vector<Point> nesting_test_points(const Polygon& poly) {
    std::set<Point> pts(poly.vertices().begin(), poly.vertices().end());
    for (std::size_t i = 0; i < poly.size(); ++i)
        for (std::size_t j = i + 1; j < poly.size(); ++j)
            if (j == poly.next(i) || i == poly.next(j) || geom::sees(poly[i], poly[j], poly))
                pts.insert(geom::midpoint(poly[i], poly[j]));
    return {pts.begin(), pts.end()};
}

bool check_visibility_nesting(const Polygon& poly, const Edge& e, int interior_samples) {
    std::vector<Point> tests = nesting_test_points(poly);
    std::vector<std::vector<bool>> seen;
    for (int k = 0; k <= interior_samples + 1; ++k) {
        Point p = geom::lerp(poly[e.u], poly[e.v], geom::ratio(k, interior_samples + 1));
        geom::VisRegion vr = geom::visibility_polygon(p, poly);
        std::vector<bool> row;
        row.reserve(tests.size());
        for (const Point& q : tests) row.push_back(vr.contains(q));
        seen.push_back(std::move(row));
    }
    // Containment is transitive, so consecutive samples suffice.
    for (std::size_t k = 0; k + 1 < seen.size(); ++k)
        for (std::size_t q = 0; q < tests.size(); ++q)
            if (seen[k][q] && !seen[k + 1][q]) return false;
    return true;
}

namespace {

/// Same vertex count and adjacency after relabelling through `keep`.
bool induced_equals(const geom::VisGraph& big, const std::vector<std::size_t>& keep, const geom::VisGraph& small) {
    if (small.n != keep.size()) return false;
    for (std::size_t i = 0; i < keep.size(); ++i)
        for (std::size_t j = i + 1; j < keep.size(); ++j)
            if (big.has_edge(keep[i], keep[j]) != small.has_edge(i, j)) return false;
    return true;
}

}  // namespace

GeometricDismantling geometric_dismantling(const Polygon& poly, std::size_t exact_recheck_limit) {
    GeometricDismantling out;
    Polygon cur = poly;
    std::vector<std::size_t> label(poly.size());
    for (std::size_t i = 0; i < label.size(); ++i) label[i] = i;
    geom::VisGraph vg = geom::visibility_graph(cur);

    while (!cur.is_convex()) {
        std::vector<Pocket> maximal = maximal_pockets(cur);
        if (maximal.empty()) throw TheoremViolation("nonconvex polygon without a maximal pocket");
        const Pocket& pk = maximal.front();
        std::size_t u = pk.u, v = pk.v;
        if (!graphgame::dominates(to_graph(vg), v, u))
            throw TheoremViolation("vertex " + std::to_string(label[v]) + " does not dominate " +
                                   std::to_string(label[u]) + " across a maximal pocket edge");

        std::vector<Point> pts;
        std::vector<std::size_t> keep;
        for (std::size_t i = 0; i < cur.size(); ++i)
            if (i != u) {
                pts.push_back(cur[i]);
                keep.push_back(i);
            }
        Polygon smaller = Polygon::unchecked({});
        try {
            smaller = Polygon(pts);
        } catch (const geom::InvalidPolygon& e) {
            throw TheoremViolation(std::string("ear removal left a non-simple polygon: ") + e.what());
        }
        geom::VisGraph small_vg = geom::visibility_graph(smaller);
        if (cur.size() <= exact_recheck_limit && !induced_equals(vg, keep, small_vg))
            throw TheoremViolation("visibility graph after removing ear at " + std::to_string(label[u]) +
                                   " is not the induced subgraph");

        out.ear_steps.push_back({label[u], label[v]});
        out.certificate.order.push_back(label[u]);
        out.certificate.dominators.push_back(label[v]);
        std::vector<std::size_t> new_label;
        for (std::size_t i : keep) new_label.push_back(label[i]);
        label = std::move(new_label);
        cur = std::move(smaller);
        vg = std::move(small_vg);
    }
    // Convex remainder: the visibility graph is complete, so any order works.
    for (std::size_t i = 0; i < label.size(); ++i) {
        out.certificate.order.push_back(label[i]);
        out.certificate.dominators.push_back(label.back());
    }
    return out;
}

}  // namespace visgame::pockets
