#include "o2i/geom2d.hpp"

#include <algorithm>

namespace o2i {

SegmentProjection project_to_segment(Vec2 p, Vec2 a, Vec2 b) {
    const Vec2 d = b - a;
    const double len2 = dot(d, d);
    double t = len2 > 0.0 ? dot(p - a, d) / len2 : 0.0;
    t = std::clamp(t, 0.0, 1.0);
    return {a + t * d, t};
}

double polygon_signed_area2(std::span<const Vec2> poly) {
    double s = 0.0;
    const std::size_t n = poly.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Vec2 a = poly[i];
        const Vec2 b = poly[(i + 1) % n];
        s += cross(a, b);
    }
    return s;
}

bool polygon_is_simple(std::span<const Vec2> poly) {
    const std::size_t n = poly.size();
    if (n < 3) {
        return false;
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (norm(poly[(i + 1) % n] - poly[i]) <= 0.0) {
            return false;
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            // skip adjacent edges (shared vertex)
            if (j == i || (j + 1) % n == i || (i + 1) % n == j) {
                continue;
            }
            if (segments_properly_intersect(poly[i], poly[(i + 1) % n], poly[j],
                                            poly[(j + 1) % n])) {
                return false;
            }
        }
    }
    return true;
}

bool point_in_polygon(std::span<const Vec2> poly, Vec2 p) {
    bool inside = false;
    const std::size_t n = poly.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Vec2 a = poly[i];
        const Vec2 b = poly[(i + 1) % n];
        if ((a.y > p.y) != (b.y > p.y)) {
            const double xint = a.x + (p.y - a.y) * (b.x - a.x) / (b.y - a.y);
            if (p.x < xint) {
                inside = !inside;
            }
        }
    }
    return inside;
}

bool point_in_polygon_or_boundary(std::span<const Vec2> poly, Vec2 p, double tol) {
    const std::size_t n = poly.size();
    for (std::size_t i = 0; i < n; ++i) {
        const auto proj = project_to_segment(p, poly[i], poly[(i + 1) % n]);
        if (norm(p - proj.point) <= tol) {
            return true;
        }
    }
    return point_in_polygon(poly, p);
}

bool segments_properly_intersect(Vec2 p1, Vec2 p2, Vec2 q1, Vec2 q2) {
    const double d1 = cross(p2 - p1, q1 - p1);
    const double d2 = cross(p2 - p1, q2 - p1);
    const double d3 = cross(q2 - q1, p1 - q1);
    const double d4 = cross(q2 - q1, p2 - q1);
    const bool q_straddles = (d1 > 0.0 && d2 < 0.0) || (d1 < 0.0 && d2 > 0.0);
    const bool p_straddles = (d3 > 0.0 && d4 < 0.0) || (d3 < 0.0 && d4 > 0.0);
    return q_straddles && p_straddles;
}

} // namespace o2i
