#pragma once

#include "visgame/geom/scalar.h"

#include <ostream>
#include <string>
#include <vector>

namespace visgame::geom {

struct Point {
    Scalar x;
    Scalar y;

    Point() = default;
    Point(Scalar x_, Scalar y_) : x(std::move(x_)), y(std::move(y_)) {}
    Point(long x_, long y_) : x(x_), y(y_) {}

    friend bool operator==(const Point& a, const Point& b) { return a.x == b.x && a.y == b.y; }
    friend bool operator!=(const Point& a, const Point& b) { return !(a == b); }
    /// Lexicographic (x, then y); used only for deterministic tie-breaks.
    friend bool operator<(const Point& a, const Point& b) {
        if (a.x != b.x) return a.x < b.x;
        return a.y < b.y;
    }

    friend Point operator+(const Point& a, const Point& b) { return {a.x + b.x, a.y + b.y}; }
    friend Point operator-(const Point& a, const Point& b) { return {a.x - b.x, a.y - b.y}; }
    friend Point operator*(const Scalar& s, const Point& p) { return {s * p.x, s * p.y}; }
};

inline Scalar cross(const Point& a, const Point& b) { return a.x * b.y - a.y * b.x; }
inline Scalar dot(const Point& a, const Point& b) { return a.x * b.x + a.y * b.y; }
inline Scalar squared_distance(const Point& a, const Point& b) {
    Point d = b - a;
    return dot(d, d);
}
inline Point midpoint(const Point& a, const Point& b) {
    return {(a.x + b.x) / 2, (a.y + b.y) / 2};
}
/// a + t (b - a)
inline Point lerp(const Point& a, const Point& b, const Scalar& t) { return a + t * (b - a); }

std::string to_string(const Point& p);
std::ostream& operator<<(std::ostream& os, const Point& p);

enum class Orientation { Right = -1, Collinear = 0, Left = 1 };

/// Sign of (q - p) x (r - p), computed exactly.
Orientation orient(const Point& p, const Point& q, const Point& r);

/// True iff p lies on the closed segment ab.
bool on_segment(const Point& p, const Point& a, const Point& b);

/// True iff closed segments ab and cd share at least one point.
bool segments_intersect(const Point& a, const Point& b, const Point& c, const Point& d);

/// Parameters t in [t_min, t_max] (or t >= t_min when unbounded) at which the
/// line a + t (b - a) meets closed segment cd. Overlaps contribute both ends.
void line_segment_params(const Point& a, const Point& b, const Point& c, const Point& d,
                         bool bounded, std::vector<Scalar>& out);

}  // namespace visgame::geom
