#pragma once

#include <cmath>
#include <string>
#include <utility>
#include <vector>

namespace visgame::splinegon {

/// Single tolerance for incidence and tangency tests.
inline constexpr double eps = 1e-9;
inline constexpr double pi = 3.14159265358979323846;

struct Vec2 {
    double x = 0;
    double y = 0;

    bool operator==(const Vec2&) const = default;
    auto operator<=>(const Vec2&) const = default;
};

inline Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
inline Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
inline Vec2 operator-(Vec2 a) { return {-a.x, -a.y}; }
inline Vec2 operator*(double s, Vec2 a) { return {s * a.x, s * a.y}; }
inline Vec2 operator*(Vec2 a, double s) { return {s * a.x, s * a.y}; }
inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
inline double norm(Vec2 a) { return std::hypot(a.x, a.y); }
inline double dist(Vec2 a, Vec2 b) { return norm(a - b); }
inline Vec2 unit(Vec2 a) { return (1.0 / norm(a)) * a; }
/// Rotated a quarter turn counterclockwise.
inline Vec2 perp(Vec2 a) { return {-a.y, a.x}; }
inline bool near(Vec2 a, Vec2 b, double tol = eps) { return dist(a, b) <= tol; }
/// -1, 0 or 1 for right of, along, or left of the direction d (tolerance on the
/// perpendicular offset of p).
int side(Vec2 origin, Vec2 d, Vec2 p, double tol = eps);

std::string to_string(Vec2 p);

enum class EdgeKind { Segment, Arc };

/// Boundary curve from `from` to `to`, traversed with the region on its left.
/// An arc with ccw = true turns counterclockwise about its center and bulges
/// out of the region (convex); ccw = false bulges into it (concave). Arcs
/// span less than a half turn.
struct ArcEdge {
    EdgeKind kind = EdgeKind::Segment;
    Vec2 from;
    Vec2 to;
    Vec2 center;
    bool ccw = true;

    static ArcEdge segment(Vec2 a, Vec2 b);
    static ArcEdge arc(Vec2 a, Vec2 b, Vec2 center, bool ccw);

    [[nodiscard]] bool is_arc() const { return kind == EdgeKind::Arc; }
    [[nodiscard]] bool concave() const { return is_arc() && !ccw; }
    [[nodiscard]] double radius() const { return dist(from, center); }
    [[nodiscard]] double start_angle() const;
    /// Signed turning angle of the arc (positive when ccw).
    [[nodiscard]] double sweep() const;
    [[nodiscard]] double length() const;
    /// Point at parameter s in [0, 1] (arc length proportional).
    [[nodiscard]] Vec2 point_at(double s) const;
    /// Unit direction of travel at parameter s.
    [[nodiscard]] Vec2 tangent_at(double s) const;
    /// Parameter of the nearest point and the distance to it.
    [[nodiscard]] std::pair<double, double> project(Vec2 p) const;
    /// Parameter of p if p lies on the arc's circle within the angular range.
    [[nodiscard]] bool angle_in_sweep(Vec2 p, double* s = nullptr) const;
    /// Every meeting of the line origin + t*dir with this edge, as pairs
    /// (t, s). A tangent touch yields one pair; a collinear segment yields its
    /// two endpoints.
    void line_hits(Vec2 origin, Vec2 dir, std::vector<std::pair<double, double>>& out) const;
    /// Contribution to twice the signed area enclosed by the boundary.
    [[nodiscard]] double doubled_area_term() const;
    /// Splits at parameter s into two edges of the same kind.
    [[nodiscard]] std::pair<ArcEdge, ArcEdge> split(double s) const;
    [[nodiscard]] ArcEdge reversed() const;
};

}  // namespace visgame::splinegon
