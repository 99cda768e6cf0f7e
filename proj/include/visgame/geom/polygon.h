#pragma once

#include "visgame/geom/point.h"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace visgame::geom {

class InvalidPolygon : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class PreconditionViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

enum class Location { Interior, Boundary, Exterior };

std::string to_string(Location loc);

/// Simple polygon, vertices counterclockwise. Collinear consecutive vertices
/// are allowed; repeated vertices and self-contact are not.
class Polygon {
public:
    /// Validates and throws InvalidPolygon on failure.
    explicit Polygon(std::vector<Point> ccw_vertices);

    /// Accepts either orientation; clockwise input is reversed.
    static Polygon from_any_orientation(std::vector<Point> vertices);

    /// Skips validation. For derived regions whose boundary may be weakly
    /// simple (touching chords); containment still uses winding numbers.
    static Polygon unchecked(std::vector<Point> vertices);

    [[nodiscard]] std::size_t size() const { return vertices_.size(); }
    [[nodiscard]] const Point& operator[](std::size_t i) const { return vertices_[i]; }
    [[nodiscard]] const std::vector<Point>& vertices() const { return vertices_; }
    [[nodiscard]] std::size_t next(std::size_t i) const { return i + 1 == size() ? 0 : i + 1; }
    [[nodiscard]] std::size_t prev(std::size_t i) const { return i == 0 ? size() - 1 : i - 1; }

    /// Strict right turn at vertex i (interior angle > 180 degrees).
    [[nodiscard]] bool is_reflex(std::size_t i) const;
    /// No reflex vertex.
    [[nodiscard]] bool is_convex() const;
    /// Twice the signed area.
    [[nodiscard]] Scalar doubled_area() const;
    /// Index of the vertex equal to p, or size() if none.
    [[nodiscard]] std::size_t find_vertex(const Point& p) const;

private:
    struct NoCheck {};
    Polygon(std::vector<Point> v, NoCheck) : vertices_(std::move(v)) {}
    std::vector<Point> vertices_;
};

/// Throws InvalidPolygon describing the first defect found.
void validate_simple_ccw(const std::vector<Point>& vertices);

Scalar doubled_signed_area(const std::vector<Point>& vertices);

/// Exact classification; boundary includes vertices and edge interiors.
Location point_location(const Point& p, const Polygon& poly);

/// True iff every point of segment ab is in the closed polygon.
/// Requires a and b to be in the polygon.
bool sees(const Point& a, const Point& b, const Polygon& poly);

/// Same test without the precondition check (exterior endpoints yield false).
bool segment_inside(const Point& a, const Point& b, const Polygon& poly);

/// Largest t >= 0 such that origin + s * dir lies in the polygon for all
/// s in [0, t]. Grazing contacts do not stop the ray.
Scalar ray_extent(const Point& origin, const Point& dir, const Polygon& poly);

/// Sorted, deduplicated parameters t >= 0 where the ray origin + t dir meets
/// the boundary.
std::vector<Scalar> boundary_params(const Point& origin, const Point& dir, const Polygon& poly,
                                    bool bounded);

}  // namespace visgame::geom
