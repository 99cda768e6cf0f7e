#include "visgame/pursuit/paths.h"

#include "visgame/geom/visibility.h"

#include <algorithm>
#include <limits>
#include <optional>
#include <stdexcept>

namespace visgame::pursuit {

using geom::Location;
using geom::Orientation;

namespace {

Real to_real(const Scalar& q) {
    Real r;
    mpfr_set_q(r.backend().data(), q.get_mpq_t(), MPFR_RNDN);
    return r;
}

/// a < b by more than the tie tolerance.
bool clearly_less(const Real& a, const Real& b) {
    Real scale = std::max(abs(a), abs(b));
    return b - a > scale * Real("1e-40");
}

void require_inside(const Point& p, const Polygon& poly) {
    if (geom::point_location(p, poly) == Location::Exterior)
        throw geom::PreconditionViolation("point outside polygon: " + geom::to_string(p));
}

}  // namespace

Real length(const Point& a, const Point& b) { return sqrt(to_real(geom::squared_distance(a, b))); }

PathIndex::PathIndex(Polygon poly) : poly_(std::move(poly)) {
    for (std::size_t i = 0; i < poly_.size(); ++i)
        if (poly_.is_reflex(i)) reflex_.push_back(i);
    const std::size_t m = reflex_.size();
    sees_.assign(m, std::vector<bool>(m, true));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j)
            sees_[i][j] = sees_[j][i] = geom::sees(poly_[reflex_[i]], poly_[reflex_[j]], poly_);
}

ShortestPathTree::ShortestPathTree(Point source, const PathIndex& index) : index_(&index), source_(std::move(source)) {
    const Polygon& poly = index.polygon();
    require_inside(source_, poly);
    const auto& reflex = index.reflex();
    const std::size_t m = reflex.size();
    dist_.assign(m, std::nullopt);
    hops_.assign(m, std::numeric_limits<int>::max());
    pred_.assign(m, none);
    std::vector<bool> done(m, false);
    auto point_of = [&](std::size_t k) -> const Point& { return k == none ? source_ : poly[reflex[k]]; };
    // Labels compare by length (with tolerance), then hop count, then the
    // lexicographic order of the predecessor's point.
    auto relax = [&](std::size_t target, const Real& d, int h, std::size_t via) {
        bool take = !dist_[target] || clearly_less(d, *dist_[target]);
        if (!take && !clearly_less(*dist_[target], d))
            take = h != hops_[target] ? h < hops_[target] : point_of(via) < point_of(pred_[target]);
        if (!take) return;
        dist_[target] = d;
        hops_[target] = h;
        pred_[target] = via;
    };
    for (std::size_t k = 0; k < m; ++k)
        if (point_of(k) == source_) relax(k, Real(0), 0, none);
        else if (geom::sees(source_, point_of(k), poly)) relax(k, length(source_, point_of(k)), 1, none);
    for (;;) {
        std::size_t u = none;
        for (std::size_t k = 0; k < m; ++k) {
            if (done[k] || !dist_[k]) continue;
            if (u == none || clearly_less(*dist_[k], *dist_[u]) ||
                (!clearly_less(*dist_[u], *dist_[k]) && hops_[k] < hops_[u]))
                u = k;
        }
        if (u == none) break;
        done[u] = true;
        for (std::size_t v = 0; v < m; ++v) {
            if (done[v] || v == u || !index.reflex_sees(u, v)) continue;
            relax(v, *dist_[u] + length(point_of(u), point_of(v)), hops_[u] + 1, u);
        }
    }
}

PathResult ShortestPathTree::path_to(const Point& t) const {
    const Polygon& poly = index_->polygon();
    require_inside(t, poly);
    if (t == source_) return {{source_}, 0};
    if (geom::sees(source_, t, poly)) return {{source_, t}, length(source_, t)};

    const auto& reflex = index_->reflex();
    // Candidate last hops by tentative length; only the shortest visible ones
    // (up to ties) need a visibility test.
    struct Candidate {
        std::size_t k;
        Real d;
        int h;
    };
    std::vector<Candidate> cands;
    for (std::size_t k = 0; k < reflex.size(); ++k) {
        if (!dist_[k]) continue;
        const Point& p = poly[reflex[k]];
        cands.push_back({k, *dist_[k] + length(p, t), hops_[k] + (p == t ? 0 : 1)});
    }
    std::sort(cands.begin(), cands.end(), [](const Candidate& a, const Candidate& b) { return a.d < b.d; });
    std::size_t best = none;
    Real best_dist = 0;
    int best_hops = 0;
    for (const Candidate& c : cands) {
        if (best != none && clearly_less(best_dist, c.d)) break;
        const Point& p = poly[reflex[c.k]];
        if (p != t && !geom::sees(p, t, poly)) continue;
        bool take = best == none || clearly_less(c.d, best_dist);
        if (!take && !clearly_less(best_dist, c.d))
            take = c.h != best_hops ? c.h < best_hops : p < poly[reflex[best]];
        if (take) {
            best = c.k;
            best_dist = c.d;
            best_hops = c.h;
        }
    }
    if (best == none) throw std::logic_error("shortest_path: target unreachable");

    std::vector<Point> path;
    if (poly[reflex[best]] != t) path.push_back(t);
    for (std::size_t k = best; k != none; k = pred_[k]) path.push_back(poly[reflex[k]]);
    path.push_back(source_);
    std::reverse(path.begin(), path.end());
    // Drop straight pass-throughs.
    std::vector<Point> clean{path.front()};
    for (std::size_t i = 1; i + 1 < path.size(); ++i)
        if (geom::orient(clean.back(), path[i], path[i + 1]) != Orientation::Collinear) clean.push_back(path[i]);
    clean.push_back(path.back());
    Real total = 0;
    for (std::size_t i = 0; i + 1 < clean.size(); ++i) total += length(clean[i], clean[i + 1]);
    return {clean, total};
}

PathResult shortest_path(const Point& s, const Point& t, const PathIndex& index) {
    require_inside(t, index.polygon());
    return ShortestPathTree(s, index).path_to(t);
}

PathResult shortest_path(const Point& s, const Point& t, const Polygon& poly) {
    return shortest_path(s, t, PathIndex(poly));
}

int link_distance(const Point& s, const Point& t, const PathIndex& index) {
    require_inside(t, index.polygon());
    return link_distance(s, geom::visibility_polygon(t, index.polygon()), ShortestPathTree(t, index));
}

int link_distance(const Point& s, const geom::VisRegion& from_t, const ShortestPathTree& tree) {
    const Polygon& poly = tree.index().polygon();
    const Point& t = from_t.viewpoint;
    require_inside(s, poly);
    if (s == t) return 0;

    Point a = s, b = s;
    const int limit = static_cast<int>(poly.size()) + 2;
    for (int k = 1; k <= limit; ++k) {
        if (from_t.meets_segment(a, b)) return k;
        std::vector<Point> pa = tree.path_to(a).waypoints;
        std::vector<Point> pb = tree.path_to(b).waypoints;
        // Apex: last shared waypoint that is not the final point of either path.
        std::size_t j = 0;
        while (j + 3 <= pa.size() && j + 3 <= pb.size() && pa[j + 1] == pb[j + 1]) ++j;
        if (j == 0) throw std::logic_error("link_distance: window apex coincides with the target");
        const Point& z = pa[j];
        const Point& y = pa[j - 1];
        Point in = z - y;
        auto turn = [&](const Point& x) {
            // Angle between the incoming direction and z->x, as a comparable
            // pair (cosine sign class is enough since both chains bend the
            // same way): larger normalized dot means less turned.
            Point d = x - z;
            return std::make_pair(geom::dot(in, d), geom::dot(d, d));
        };
        auto [da, la] = turn(pa[j + 1]);
        auto [db, lb] = turn(pb[j + 1]);
        // Compare da/sqrt(la) with db/sqrt(lb) exactly via signs and squares.
        auto cos_greater = [](const Scalar& d1, const Scalar& l1, const Scalar& d2, const Scalar& l2) {
            int s1 = geom::sign(d1), s2 = geom::sign(d2);
            if (s1 != s2) return s1 > s2;
            Scalar lhs = d1 * d1 * l2, rhs = d2 * d2 * l1;
            return s1 >= 0 ? lhs > rhs : lhs < rhs;
        };
        const Point& x1 = cos_greater(db, lb, da, la) ? pb[j + 1] : pa[j + 1];
        Point dir = z - x1;
        Scalar reach = geom::ray_extent(z, dir, poly);
        if (reach == 0) throw std::logic_error("link_distance: window has zero length");
        a = z;
        b = z + reach * dir;
    }
    throw std::logic_error("link_distance: no convergence");
}

int link_distance(const Point& s, const Point& t, const Polygon& poly) { return link_distance(s, t, PathIndex(poly)); }

}  // namespace visgame::pursuit
