#include "visgame/harness/scenes.h"

#include <random>
#include <stdexcept>

namespace visgame::harness {

using splinegon::pi;

ArcEdge bulge(Vec2 a, Vec2 b, double sagitta, bool convex) {
    const double half = splinegon::dist(a, b) / 2;
    if (sagitta <= 0 || sagitta >= half) throw std::invalid_argument("bulge: sagitta must be in (0, |ab|/2)");
    const double radius = (sagitta * sagitta + half * half) / (2 * sagitta);
    const Vec2 mid = 0.5 * (a + b);
    const Vec2 inward = splinegon::perp(splinegon::unit(b - a));
    const Vec2 center = convex ? mid + (radius - sagitta) * inward : mid - (radius - sagitta) * inward;
    return ArcEdge::arc(a, b, center, convex);
}

namespace {

/// Arc from a to b of the given radius, per bulge().
ArcEdge arc_with_radius(Vec2 a, Vec2 b, double radius, bool convex) {
    const double half = splinegon::dist(a, b) / 2;
    return bulge(a, b, radius - std::sqrt(radius * radius - half * half), convex);
}

std::vector<ArcEdge> arc_polygon(const std::vector<Vec2>& corners, double radius, bool convex) {
    std::vector<ArcEdge> edges;
    for (std::size_t i = 0; i < corners.size(); ++i)
        edges.push_back(arc_with_radius(corners[i], corners[(i + 1) % corners.size()], radius, convex));
    return edges;
}

}  // namespace

SplinegonScene stadium() {
    SplinegonScene s;
    s.family = "Stadium";
    s.edges = {ArcEdge::segment({-2, -1}, {2, -1}),     ArcEdge::arc({2, -1}, {3, 0}, {2, 0}, true),
               ArcEdge::arc({3, 0}, {2, 1}, {2, 0}, true),  ArcEdge::segment({2, 1}, {-2, 1}),
               ArcEdge::arc({-2, 1}, {-3, 0}, {-2, 0}, true), ArcEdge::arc({-3, 0}, {-2, -1}, {-2, 0}, true)};
    s.d = 1;
    return s;
}

SplinegonScene curved_triangle() {
    SplinegonScene s;
    s.family = "CurvedTriangle";
    s.edges = arc_polygon({{0, 0}, {4, 0}, {2, 2 * std::sqrt(3.0)}}, 6, false);
    s.d = 2;
    return s;
}

SplinegonScene bay_scene() {
    SplinegonScene s;
    s.family = "BayScene";
    s.edges = {ArcEdge::segment({0, 0}, {12, 0}),   ArcEdge::segment({12, 0}, {12, 4}),
               ArcEdge::segment({12, 4}, {10, 4}),  bulge({10, 4}, {7, 4}, 1.3, false),
               ArcEdge::segment({7, 4}, {5, 4}),    bulge({5, 4}, {2, 4}, 1.3, false),
               ArcEdge::segment({2, 4}, {0, 4}),    ArcEdge::segment({0, 4}, {0, 0})};
    s.d = 3;
    return s;
}

SplinegonScene curved_square() {
    SplinegonScene s;
    s.family = "GodfriedRegion";
    s.edges = arc_polygon({{-2, -2}, {2, -2}, {2, 2}, {-2, 2}}, 5, false);
    s.d = 2;
    return s;
}

SplinegonScene crescent() {
    SplinegonScene s;
    s.family = "Crescent";
    const double h = std::sqrt(3.0);
    const Vec2 top{1, h}, bottom{1, -h}, waist{1, 0};
    s.edges = {ArcEdge::arc(bottom, top, {0, 0}, true), ArcEdge::arc(top, waist, {0.5, h / 2}, false),
               ArcEdge::arc(waist, bottom, {0.5, -h / 2}, false)};
    s.d = 3;
    return s;
}

SplinegonScene random_arcgon(std::size_t n, std::uint64_t seed, int max_d) {
    if (n < 3) throw std::invalid_argument("random_arcgon needs at least 3 edges");
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit01(0.0, 1.0);
    for (int attempt = 0; attempt < 1000; ++attempt) {
        std::vector<Vec2> corners;
        for (std::size_t k = 0; k < n; ++k) {
            const double angle = 2 * pi * (static_cast<double>(k) + 0.6 * (unit01(rng) - 0.5)) / static_cast<double>(n);
            const double radius = 5 * (0.55 + 0.45 * unit01(rng));
            corners.push_back({radius * std::cos(angle), radius * std::sin(angle)});
        }
        std::vector<ArcEdge> edges;
        for (std::size_t k = 0; k < n; ++k) {
            const Vec2 a = corners[k], b = corners[(k + 1) % n];
            const double pick = unit01(rng);
            const double sagitta = splinegon::dist(a, b) * (0.05 + 0.3 * unit01(rng));
            if (pick < 0.4) edges.push_back(ArcEdge::segment(a, b));
            else edges.push_back(bulge(a, b, sagitta, pick < 0.7));
        }
        try {
            Splinegon region(edges, max_d);
            SplinegonScene s;
            s.family = "RandomArcgon";
            s.edges = std::move(edges);
            s.d = splinegon::sampled_link_diameter(region);
            return s;
        } catch (const splinegon::InvalidSplinegon&) {
        }
    }
    throw std::runtime_error("random_arcgon: no valid region after 1000 attempts");
}

SplinegonScene random_staircase(std::size_t steps, std::uint64_t seed, int max_d) {
    if (steps < 1 || steps > 2) throw std::invalid_argument("random_staircase takes 1 or 2 steps");
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit01(0.0, 1.0);
    for (int attempt = 0; attempt < 1000; ++attempt) {
        const double w = 0.6 + 0.8 * unit01(rng);
        std::vector<Vec2> lower{{0, 0}};
        for (std::size_t k = 0; k < steps; ++k) {
            const Vec2 last = lower.back();
            const double run = 2 + 3 * unit01(rng), rise = 2 + 3 * unit01(rng);
            lower.push_back({last.x + run, last.y});
            lower.push_back({last.x + run, last.y + rise});
        }
        std::vector<Vec2> corners = lower;
        for (auto it = lower.rbegin(); it != lower.rend(); ++it) corners.push_back({it->x - w, it->y + w});
        const std::size_t n = corners.size();
        std::vector<ArcEdge> edges;
        for (std::size_t k = 0; k < n; ++k) {
            const Vec2 a = corners[k], b = corners[(k + 1) % n];
            const double pick = unit01(rng);
            const double sagitta = std::min(splinegon::dist(a, b), w) * (0.05 + 0.3 * unit01(rng));
            if (pick < 0.4) edges.push_back(ArcEdge::segment(a, b));
            else edges.push_back(bulge(a, b, sagitta, pick < 0.7));
        }
        try {
            Splinegon region(edges, max_d);
            SplinegonScene s;
            s.family = "RandomStaircase";
            s.edges = std::move(edges);
            s.d = splinegon::sampled_link_diameter(region);
            return s;
        } catch (const splinegon::InvalidSplinegon&) {
        }
    }
    throw std::runtime_error("random_staircase: no valid region after 1000 attempts");
}

std::vector<SplinegonScene> splinegon_corpus(std::size_t count, std::uint64_t base_seed) {
    std::vector<SplinegonScene> out{stadium(), curved_triangle(), bay_scene(), curved_square()};
    for (std::size_t i = 0; i < count; ++i)
        out.push_back(i % 2 == 0 ? random_arcgon(3 + (i / 2) % 8, base_seed + i)
                                 : random_staircase(1 + (i / 2) % 2, base_seed + i));
    return out;
}

}  // namespace visgame::harness
