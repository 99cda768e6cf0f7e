#include "visgame/harness/generators.h"

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>

namespace visgame::harness {

GeneratedPolygon zigzag(int k) {
    if (k < 1 || k > 1000) throw std::invalid_argument("zigzag size out of range");
    const long rise = 4;
    const int bends = 2 * k;
    auto level = [&](int j) { return j % 2 == 0 ? 0L : rise; };
    std::vector<Point> v;
    for (int j = 0; j < bends; ++j) v.emplace_back(j, level(j));
    for (int j = bends - 1; j >= 0; --j) v.emplace_back(j, level(j) + 1);
    GeneratedPolygon g{"Zigzag", Polygon(std::move(v)), {}};
    for (int j = 0; j < bends; ++j) g.anchors.emplace_back(Scalar(j), geom::ratio(2 * level(j) + 1, 2));
    return g;
}

GeneratedPolygon corridor(int k, const Scalar& widen) {
    if (k < 2 || k > 1000) throw std::invalid_argument("corridor size out of range");
    if (widen < 0 || widen >= 1) throw std::invalid_argument("corridor widening out of range");
    const long width = 4, depth = 4, spacing = 6;
    // The wall from tip i towards tip i+-1 crosses its own corridor side a
    // third of the spacing away from the tip's x.
    const Scalar third = geom::ratio(spacing, 3);
    // Counterclockwise: bottom side left to right, then top side right to left.
    std::vector<Point> v;
    for (int i = 2; i <= k; i += 2) {
        Scalar x(spacing * i);
        v.emplace_back(x - third - widen, Scalar(0));
        v.emplace_back(x, Scalar(-depth));
        v.emplace_back(x + third + widen, Scalar(0));
    }
    for (int i = k % 2 == 1 ? k : k - 1; i >= 1; i -= 2) {
        Scalar x(spacing * i);
        v.emplace_back(x + third + widen, Scalar(width));
        v.emplace_back(x, Scalar(width + depth));
        v.emplace_back(x - third - widen, Scalar(width));
    }
    GeneratedPolygon g{"Corridor", Polygon(std::move(v)), {}};
    for (int i = 1; i <= k; ++i) g.anchors.emplace_back(Scalar(spacing * i), Scalar(i % 2 == 0 ? -depth : width + depth));
    return g;
}

namespace {

bool proper_cross(const Point& a, const Point& b, const Point& c, const Point& d) {
    auto o1 = geom::orient(a, b, c), o2 = geom::orient(a, b, d);
    auto o3 = geom::orient(c, d, a), o4 = geom::orient(c, d, b);
    return o1 != o2 && o3 != o4 && o1 != geom::Orientation::Collinear && o2 != geom::Orientation::Collinear &&
           o3 != geom::Orientation::Collinear && o4 != geom::Orientation::Collinear;
}

}  // namespace

GeneratedPolygon random_simple(int n, std::uint64_t seed) {
    if (n < 3 || n > 200) throw std::invalid_argument("random polygon size out of range");
    std::mt19937_64 rng(seed);
    const long range = 1001;
    std::vector<Point> pts;
    std::set<Point> used;
    while (static_cast<int>(pts.size()) < n) {
        Point p(static_cast<long>(rng() % range), static_cast<long>(rng() % range));
        if (used.count(p)) continue;
        bool collinear = false;
        for (std::size_t i = 0; i < pts.size() && !collinear; ++i)
            for (std::size_t j = i + 1; j < pts.size() && !collinear; ++j)
                collinear = geom::orient(pts[i], pts[j], p) == geom::Orientation::Collinear;
        if (collinear) continue;
        used.insert(p);
        pts.push_back(p);
    }
    // 2-opt: reversing the stretch between two crossing edges strictly
    // shortens the tour, so this terminates.
    const int limit = 100000;
    int iterations = 0;
    for (bool changed = true; changed;) {
        changed = false;
        for (int i = 0; i < n && !changed; ++i)
            for (int j = i + 2; j < n && !changed; ++j) {
                if (i == 0 && j == n - 1) continue;
                if (proper_cross(pts[i], pts[i + 1], pts[j], pts[(j + 1) % n])) {
                    std::reverse(pts.begin() + i + 1, pts.begin() + j + 1);
                    changed = true;
                }
            }
        if (++iterations > limit) throw std::runtime_error("2-opt did not converge");
    }
    return {"RandomSimple", Polygon::from_any_orientation(std::move(pts)), {}};
}

std::vector<GeneratedPolygon> random_corpus(std::size_t count, std::uint64_t base_seed) {
    std::vector<GeneratedPolygon> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i)
        out.push_back(random_simple(6 + static_cast<int>(i % 15), base_seed + i));
    return out;
}

}  // namespace visgame::harness
