#pragma once
// Planar primitives for the sector-cover machinery: points, lines, rays,
// rigid motions, polygonal arcs, circular sectors.
//
// Conventions: angles in radians, CCW positive. All types are immutable
// value types; every operation is a pure function, safe to call from any
// number of threads.

#include <array>
#include <cmath>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace sectorcover {

inline constexpr double kPi = 3.14159265358979323846;

inline double deg_to_rad(double d) { return d * kPi / 180.0; }
inline double rad_to_deg(double r) { return r * 180.0 / kPi; }

struct Vec2 {
    double x{0.0};
    double y{0.0};

    constexpr Vec2() = default;
    constexpr Vec2(double px, double py) : x(px), y(py) {}

    constexpr Vec2 operator+(const Vec2& r) const { return {x + r.x, y + r.y}; }
    constexpr Vec2 operator-(const Vec2& r) const { return {x - r.x, y - r.y}; }
    constexpr Vec2 operator*(double s) const { return {x * s, y * s}; }
    constexpr Vec2 operator-() const { return {-x, -y}; }
    friend constexpr Vec2 operator*(double s, const Vec2& v) { return {v.x * s, v.y * s}; }

    constexpr double dot(const Vec2& r) const { return x * r.x + y * r.y; }
    constexpr double cross(const Vec2& r) const { return x * r.y - y * r.x; }
    double norm() const { return std::hypot(x, y); }
    constexpr double norm2() const { return x * x + y * y; }
    bool finite() const { return std::isfinite(x) && std::isfinite(y); }

    Vec2 normalized() const;
    constexpr Vec2 perp() const { return {-y, x}; }  // rotate +90 degrees
    Vec2 rotated(double angle) const {
        const double c = std::cos(angle), s = std::sin(angle);
        return {c * x - s * y, s * x + c * y};
    }
    double angle() const { return std::atan2(y, x); }
};

using Point = Vec2;

inline double dist(const Point& a, const Point& b) { return (a - b).norm(); }

inline Vec2 Vec2::normalized() const {
    const double n = norm();
    if (n <= 0.0) throw std::invalid_argument("cannot normalize zero vector");
    return {x / n, y / n};
}

/// Unsigned angle between two directions, in [0, pi].
inline double angle_between(const Vec2& a, const Vec2& b) {
    return std::atan2(std::fabs(a.cross(b)), a.dot(b));
}

/// Line through an anchor point with unit direction.
struct Line {
    Point anchor;
    Vec2 dir;  // unit

    static Line through(const Point& a, const Point& b) {
        if (dist(a, b) <= 0.0) throw std::invalid_argument("degenerate line: coincident points");
        return Line{a, (b - a).normalized()};
    }
    static Line from_dir(const Point& a, const Vec2& d) { return Line{a, d.normalized()}; }

    /// Signed distance, positive on the left of `dir`.
    double signed_dist(const Point& p) const { return dir.cross(p - anchor); }
    Point project(const Point& p) const { return anchor + dir * dir.dot(p - anchor); }
};

struct Ray {
    Point origin;
    Vec2 dir;  // unit

    static Ray from_dir(const Point& o, const Vec2& d) { return Ray{o, d.normalized()}; }

    Point at(double t) const { return origin + dir * t; }
    Line line() const { return Line{origin, dir}; }

    /// Distance from p to the closed ray (origin included).
    double distance(const Point& p) const {
        const double t = dir.dot(p - origin);
        if (t <= 0.0) return dist(p, origin);
        return std::fabs(dir.cross(p - origin));
    }
    /// Ray parameter of the projection of p onto the ray's line.
    double param_of(const Point& p) const { return dir.dot(p - origin); }
};

/// Mirror image of p across L. Points on L are fixed.
Point reflect(const Point& p, const Line& l);

/// Plane isometry: reflect across the x-axis first (when `reflect` is set),
/// then rotate by `rotation`, then translate.
struct RigidMotion {
    double rotation{0.0};
    Vec2 translation{0.0, 0.0};
    bool reflect{false};

    Point apply(const Point& p) const {
        Point q = reflect ? Point{p.x, -p.y} : p;
        return q.rotated(rotation) + translation;
    }
    /// Image of a direction vector (no translation).
    Vec2 apply_dir(const Vec2& v) const {
        Vec2 q = reflect ? Vec2{v.x, -v.y} : v;
        return q.rotated(rotation);
    }

    static RigidMotion identity() { return {}; }
    static RigidMotion translate(const Vec2& t) { return {0.0, t, false}; }
    static RigidMotion rotation_about(double angle, const Point& center) {
        return {angle, center - center.rotated(angle), false};
    }
    /// Reflection across a line, encoded as an orientation-reversing motion.
    static RigidMotion reflection_across(const Line& l) {
        const double phi = l.dir.angle();
        RigidMotion m{2.0 * phi, {0.0, 0.0}, true};
        m.translation = l.anchor - m.apply(l.anchor);
        return m;
    }

    /// Composition: (a.then(b))(p) == b(a(p)).
    RigidMotion then(const RigidMotion& after) const;
    RigidMotion inverse() const;
};

/// Product of the reflections across l1 then l2. A rotation by twice the
/// angle from l1 to l2 about their intersection; a translation when the
/// lines are parallel.
RigidMotion compose_reflections(const Line& l1, const Line& l2);

/// Chord subtended by `angle` in a circle of radius `radius`: 2 r sin(a/2).
double chord_length(double radius, double angle);

/// Open polygonal path with cumulative-arclength parametrization.
class PolygonalArc {
  public:
    static PolygonalArc from_vertices(std::vector<Point> vertices);

    const std::vector<Point>& vertices() const { return verts_; }
    std::size_t size() const { return verts_.size(); }
    const Point& vertex(std::size_t i) const { return verts_[i]; }
    /// Arclength parameter of vertex i.
    double param(std::size_t i) const { return cum_[i]; }
    double length() const { return cum_.back(); }

    /// Point at arclength s (clamped to [0, length]).
    Point point_at(double s) const;

    /// Exact pairwise segment check; consecutive segments may share their
    /// common endpoint, anything else within 1e-12 counts as a crossing.
    bool is_simple() const;

    PolygonalArc transformed(const RigidMotion& m) const;
    PolygonalArc reversed() const;
    PolygonalArc scaled(double s) const;

  private:
    PolygonalArc(std::vector<Point> v, std::vector<double> c)
        : verts_(std::move(v)), cum_(std::move(c)) {}
    std::vector<Point> verts_;
    std::vector<double> cum_;
};

double arc_length(const PolygonalArc& a);

/// Strict corner points of the convex hull of the arc's vertices, listed in
/// the arc's parametric order. Vertices within collinearity tolerance of a
/// hull edge are not corners. A fully collinear arc yields its two extreme
/// points.
std::vector<std::size_t> hull_corner_indices(const PolygonalArc& a);
std::vector<Point> hull_corners(const PolygonalArc& a);

/// Convex hull of a point set (CCW, strict corners). Exposed for the
/// support-line sweep.
std::vector<Point> convex_hull(const std::vector<Point>& pts);

/// Closed circular sector: apex, bisector direction, full angle, radius.
struct Sector {
    Point apex;
    Vec2 axis;  // unit bisector
    double angle;
    double radius;

    static Sector make(const Point& apex, const Vec2& axis, double angle, double radius);

    Vec2 left_dir() const { return axis.rotated(angle / 2.0); }
    Vec2 right_dir() const { return axis.rotated(-angle / 2.0); }
    Ray left_ray() const { return {apex, left_dir()}; }
    Ray right_ray() const { return {apex, right_dir()}; }
    double area() const { return 0.5 * radius * radius * angle; }
};

/// Signed containment violation: max over the two half-plane constraints and
/// the disk constraint of the signed distance outside. <= 0 iff p lies in the
/// closed sector.
double sector_contains(const Sector& s, const Point& p);

}  // namespace sectorcover
