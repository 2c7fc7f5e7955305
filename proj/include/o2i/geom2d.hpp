#ifndef O2I_GEOM2D_HPP
#define O2I_GEOM2D_HPP

#include <cmath>
#include <span>
#include <vector>

namespace o2i {

struct Vec2 {
    double x = 0.0;
    double y = 0.0;
};

inline Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
inline Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
inline Vec2 operator*(double s, Vec2 v) { return {s * v.x, s * v.y}; }
inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
inline double norm(Vec2 v) { return std::hypot(v.x, v.y); }

struct Vec3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    Vec2 xy() const { return {x, y}; }
};

inline Vec3 operator-(Vec3 a, Vec3 b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
inline double dot(Vec3 a, Vec3 b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
inline double norm(Vec3 v) { return std::sqrt(v.x * v.x + v.y * v.y + v.z * v.z); }

/// Closest point on segment [a,b] to p, with the segment parameter clamped to [0,1].
struct SegmentProjection {
    Vec2 point;
    double t; // clamped parameter along a->b
};
SegmentProjection project_to_segment(Vec2 p, Vec2 a, Vec2 b);

/// Twice the signed area; positive for counter-clockwise vertex order.
double polygon_signed_area2(std::span<const Vec2> poly);

/// True when no two non-adjacent edges intersect and no edge has zero length.
bool polygon_is_simple(std::span<const Vec2> poly);

/// Strict interior test (ray casting). Points on the boundary are not interior.
bool point_in_polygon(std::span<const Vec2> poly, Vec2 p);

/// Interior or on an edge within tol.
bool point_in_polygon_or_boundary(std::span<const Vec2> poly, Vec2 p, double tol = 1e-9);

/// Proper crossing test: true only when each segment straddles the other's line.
/// Touching at an endpoint or collinear overlap does not count.
bool segments_properly_intersect(Vec2 p1, Vec2 p2, Vec2 q1, Vec2 q2);

} // namespace o2i

#endif
