#pragma once

#include "visgame/splinegon/splinegon.h"

#include <cstdint>
#include <string>
#include <vector>

namespace visgame::harness {

using splinegon::ArcEdge;
using splinegon::Splinegon;
using splinegon::Vec2;

/// Unvalidated splinegon description; `build` validates it.
struct SplinegonScene {
    std::string family;
    std::vector<ArcEdge> edges;
    int d = 1;

    [[nodiscard]] Splinegon build() const { return Splinegon(edges, d); }
};

/// Arc from a to b with the given sagitta (bulge height), bulging out of the
/// region when convex and into it otherwise. Requires sagitta < |ab|/2.
ArcEdge bulge(Vec2 a, Vec2 b, double sagitta, bool convex);

/// Rectangle with semicircular ends, each split into two quarter arcs.
SplinegonScene stadium();

/// Equilateral triangle of side 4 whose sides are concave arcs of radius 6.
SplinegonScene curved_triangle();

/// Room whose ceiling carries two concave bulges, forming three bays.
SplinegonScene bay_scene();

/// Square with corners (+-2, +-2) whose sides are concave arcs of radius 5.
SplinegonScene curved_square();

/// Outer arc and two inner arcs meeting tangentially at the horns. Fails
/// validation: the link diameter is infinite.
SplinegonScene crescent();

/// Star-shaped region with n edges, each randomly a segment, a convex arc
/// or a concave arc; d is the sampled link diameter. Retries until the
/// region validates with d <= max_d.
SplinegonScene random_arcgon(std::size_t n, std::uint64_t seed, int max_d = 12);

/// Corridor of width 0.6..1.4 climbing `steps` (1 or 2) stairs, giving 6 or
/// 10 edges with random bulges. Retries until valid with d <= max_d.
SplinegonScene random_staircase(std::size_t steps, std::uint64_t seed, int max_d = 12);

/// stadium, curved_triangle, bay_scene and curved_square (the valid
/// fixtures) followed by `count` random regions alternating between
/// random_arcgon (3..10 edges) and random_staircase.
std::vector<SplinegonScene> splinegon_corpus(std::size_t count = 50, std::uint64_t base_seed = 1);

}  // namespace visgame::harness
