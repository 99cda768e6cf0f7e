#include "visgame/splinegon/arc.h"

#include <algorithm>
#include <sstream>

namespace visgame::splinegon {

namespace {

/// Angle reduced to [0, 2 pi).
double wrap(double a) {
    a = std::fmod(a, 2 * pi);
    return a < 0 ? a + 2 * pi : a;
}

}  // namespace

int side(Vec2 origin, Vec2 d, Vec2 p, double tol) {
    const double v = cross(unit(d), p - origin);
    return v > tol ? 1 : v < -tol ? -1 : 0;
}

std::string to_string(Vec2 p) {
    std::ostringstream out;
    out.precision(17);
    out << "(" << p.x << ", " << p.y << ")";
    return out.str();
}

ArcEdge ArcEdge::segment(Vec2 a, Vec2 b) { return {EdgeKind::Segment, a, b, {}, true}; }

ArcEdge ArcEdge::arc(Vec2 a, Vec2 b, Vec2 center, bool ccw) { return {EdgeKind::Arc, a, b, center, ccw}; }

double ArcEdge::start_angle() const { return std::atan2(from.y - center.y, from.x - center.x); }

double ArcEdge::sweep() const {
    if (!is_arc()) return 0;
    const double a0 = start_angle();
    const double a1 = std::atan2(to.y - center.y, to.x - center.x);
    return ccw ? wrap(a1 - a0) : -wrap(a0 - a1);
}

double ArcEdge::length() const { return is_arc() ? radius() * std::abs(sweep()) : dist(from, to); }

Vec2 ArcEdge::point_at(double s) const {
    if (s <= 0) return from;
    if (s >= 1) return to;
    if (!is_arc()) return from + s * (to - from);
    const double a = start_angle() + s * sweep();
    const double r = radius();
    return {center.x + r * std::cos(a), center.y + r * std::sin(a)};
}

Vec2 ArcEdge::tangent_at(double s) const {
    if (!is_arc()) return unit(to - from);
    const double a = start_angle() + std::clamp(s, 0.0, 1.0) * sweep();
    const Vec2 t{-std::sin(a), std::cos(a)};
    return ccw ? t : -t;
}

bool ArcEdge::angle_in_sweep(Vec2 p, double* s) const {
    const double span = std::abs(sweep());
    const double a = std::atan2(p.y - center.y, p.x - center.x);
    const double off = ccw ? wrap(a - start_angle()) : wrap(start_angle() - a);
    const double tol = eps / std::max(radius(), 1e-300);
    double param;
    if (off <= span + tol) param = std::min(off / span, 1.0);
    else if (off >= 2 * pi - tol) param = 0;
    else return false;
    if (s) *s = param;
    return true;
}

std::pair<double, double> ArcEdge::project(Vec2 p) const {
    if (!is_arc()) {
        const Vec2 e = to - from;
        const double s = std::clamp(dot(p - from, e) / dot(e, e), 0.0, 1.0);
        return {s, dist(p, from + s * e)};
    }
    double s = 0;
    if (!near(p, center, 0) && angle_in_sweep(p, &s)) return {s, std::abs(dist(p, center) - radius())};
    const double d0 = dist(p, from), d1 = dist(p, to);
    return d0 <= d1 ? std::make_pair(0.0, d0) : std::make_pair(1.0, d1);
}

void ArcEdge::line_hits(Vec2 origin, Vec2 dir, std::vector<std::pair<double, double>>& out) const {
    const double len2 = dot(dir, dir);
    if (!is_arc()) {
        const Vec2 e = to - from;
        const double denom = cross(dir, e);
        if (std::abs(denom) <= 1e-12 * std::sqrt(len2) * norm(e)) {
            if (std::abs(cross(unit(dir), from - origin)) <= eps) {
                out.emplace_back(dot(from - origin, dir) / len2, 0.0);
                out.emplace_back(dot(to - origin, dir) / len2, 1.0);
            }
            return;
        }
        const double t = cross(from - origin, e) / denom;
        const double s = cross(from - origin, dir) / denom;
        const double tol = eps / norm(e);
        if (s >= -tol && s <= 1 + tol) out.emplace_back(t, std::clamp(s, 0.0, 1.0));
        return;
    }
    const double len = std::sqrt(len2);
    const Vec2 u = (1.0 / len) * dir;
    const Vec2 f = origin - center;
    const double r = radius();
    const double b = dot(f, u);
    const double h = std::abs(cross(u, f));
    std::vector<double> roots;
    if (std::abs(h - r) <= eps) roots.push_back(-b);
    else if (h < r) {
        const double w = std::sqrt(r * r - h * h);
        roots.push_back(-b - w);
        roots.push_back(-b + w);
    }
    for (double tau : roots) {
        double s = 0;
        if (angle_in_sweep(origin + tau * u, &s)) out.emplace_back(tau / len, s);
    }
}

double ArcEdge::doubled_area_term() const {
    double a = cross(from, to);
    if (is_arc()) {
        const double th = std::abs(sweep());
        const double r = radius();
        a += (ccw ? 1 : -1) * r * r * (th - std::sin(th));
    }
    return a;
}

std::pair<ArcEdge, ArcEdge> ArcEdge::split(double s) const {
    const Vec2 m = point_at(s);
    if (!is_arc()) return {segment(from, m), segment(m, to)};
    return {arc(from, m, center, ccw), arc(m, to, center, ccw)};
}

ArcEdge ArcEdge::reversed() const { return is_arc() ? arc(to, from, center, !ccw) : segment(to, from); }

}  // namespace visgame::splinegon
