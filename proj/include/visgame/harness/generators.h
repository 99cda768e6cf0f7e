#pragma once

#include "visgame/geom/polygon.h"

#include <cstdint>
#include <string>
#include <vector>

namespace visgame::harness {

using geom::Point;
using geom::Polygon;
using geom::Scalar;

/// Polygon together with the robber's anchor points x_1..x_m, if the family
/// has them.
struct GeneratedPolygon {
    std::string family;
    Polygon polygon;
    std::vector<Point> anchors;
};

/// Skinny zig-zag with 2k bends and n = 4k vertices. The lower chain runs
/// through (j, a_j) with a_j alternating 0 and 4; the upper chain is the same
/// chain lifted by 1. Anchors sit midway across each bend.
GeneratedPolygon zigzag(int k);

/// Horizontal corridor [.,.] x [0, 4] with k triangular spikes of depth 4,
/// alternating top (odd i) and bottom (even i), tips x_i = (6i, 8) or
/// (6i, -4). Each spike wall lies on the line to the neighbouring tip, so
/// consecutive tips see each other along the walls. n = 3k.
/// `widen` moves every spike base corner outward by that horizontal amount;
/// zero gives the exact construction.
GeneratedPolygon corridor(int k, const Scalar& widen = 0);

/// Random simple polygon on n distinct integer points in [0, 1000]^2 with
/// no three collinear, made simple by 2-opt uncrossing. Deterministic per seed.
GeneratedPolygon random_simple(int n, std::uint64_t seed);

/// The seeded evaluation corpus: polygon i has n = 6 + (i mod 15) vertices
/// and seed base_seed + i.
std::vector<GeneratedPolygon> random_corpus(std::size_t count = 200, std::uint64_t base_seed = 1);

}  // namespace visgame::harness
