#include "sectorcover/geometry.hpp"

#include <algorithm>
#include <limits>

namespace sectorcover {

namespace {

constexpr double kSimplicityTol = 1e-12;
constexpr double kCollinearRel = 1e-10;  // hull corner tolerance, scaled by extent

// Orientation of c relative to the directed line a->b.
double orient(const Point& a, const Point& b, const Point& c) {
    return (b - a).cross(c - a);
}

// Distance from p to segment [a, b].
double segment_distance(const Point& a, const Point& b, const Point& p) {
    const Vec2 d = b - a;
    const double len2 = d.norm2();
    if (len2 <= 0.0) return dist(a, p);
    double t = d.dot(p - a) / len2;
    t = std::clamp(t, 0.0, 1.0);
    return dist(a + d * t, p);
}

// Minimum distance between segments [a,b] and [c,d].
double segment_segment_distance(const Point& a, const Point& b, const Point& c, const Point& d) {
    const double o1 = orient(a, b, c), o2 = orient(a, b, d);
    const double o3 = orient(c, d, a), o4 = orient(c, d, b);
    if (((o1 > 0) != (o2 > 0)) && ((o3 > 0) != (o4 > 0)) && o1 != o2 && o3 != o4) return 0.0;
    return std::min(std::min(segment_distance(a, b, c), segment_distance(a, b, d)),
                    std::min(segment_distance(c, d, a), segment_distance(c, d, b)));
}

}  // namespace

Point reflect(const Point& p, const Line& l) {
    const Vec2 v = p - l.anchor;
    return l.anchor + l.dir * (2.0 * l.dir.dot(v)) - v;
}

RigidMotion RigidMotion::then(const RigidMotion& after) const {
    RigidMotion m;
    m.reflect = reflect != after.reflect;
    m.rotation = after.rotation + (after.reflect ? -rotation : rotation);
    m.translation = after.apply_dir(translation) + after.translation;
    return m;
}

RigidMotion RigidMotion::inverse() const {
    RigidMotion m;
    m.reflect = reflect;
    m.rotation = reflect ? rotation : -rotation;
    m.translation = -m.apply_dir(translation);
    return m;
}

RigidMotion compose_reflections(const Line& l1, const Line& l2) {
    return RigidMotion::reflection_across(l1).then(RigidMotion::reflection_across(l2));
}

double chord_length(double radius, double angle) {
    if (!(radius > 0.0)) throw std::invalid_argument("chord_length: radius must be positive");
    if (!(angle > 0.0) || angle > kPi + 1e-15)
        throw std::invalid_argument("chord_length: angle must lie in (0, pi]");
    return 2.0 * radius * std::sin(0.5 * angle);
}

PolygonalArc PolygonalArc::from_vertices(std::vector<Point> vertices) {
    if (vertices.size() < 2) throw std::invalid_argument("arc needs at least 2 vertices");
    std::vector<double> cum(vertices.size(), 0.0);
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        if (!vertices[i].finite()) throw std::invalid_argument("arc vertex is not finite");
        if (i > 0) {
            const double step = dist(vertices[i - 1], vertices[i]);
            if (step <= 0.0) throw std::invalid_argument("consecutive arc vertices coincide");
            cum[i] = cum[i - 1] + step;
        }
    }
    return PolygonalArc(std::move(vertices), std::move(cum));
}

Point PolygonalArc::point_at(double s) const {
    if (s <= 0.0) return verts_.front();
    if (s >= cum_.back()) return verts_.back();
    const auto it = std::upper_bound(cum_.begin(), cum_.end(), s);
    const std::size_t i = static_cast<std::size_t>(it - cum_.begin());
    const double seg = cum_[i] - cum_[i - 1];
    const double t = (s - cum_[i - 1]) / seg;
    return verts_[i - 1] + (verts_[i] - verts_[i - 1]) * t;
}

bool PolygonalArc::is_simple() const {
    const std::size_t n = verts_.size();
    if (n < 3) return true;
    // Consecutive segments share a vertex; only a fold-back counts as a crossing.
    for (std::size_t i = 0; i + 2 < n; ++i) {
        if (segment_distance(verts_[i], verts_[i + 1], verts_[i + 2]) <= kSimplicityTol) return false;
        if (segment_distance(verts_[i + 1], verts_[i + 2], verts_[i]) <= kSimplicityTol) return false;
    }
    for (std::size_t i = 0; i + 1 < n; ++i) {
        for (std::size_t j = i + 2; j + 1 < n; ++j) {
            if (segment_segment_distance(verts_[i], verts_[i + 1], verts_[j], verts_[j + 1]) <=
                kSimplicityTol)
                return false;
        }
    }
    return true;
}

PolygonalArc PolygonalArc::transformed(const RigidMotion& m) const {
    std::vector<Point> v;
    v.reserve(verts_.size());
    for (const auto& p : verts_) v.push_back(m.apply(p));
    return PolygonalArc(std::move(v), cum_);
}

PolygonalArc PolygonalArc::reversed() const {
    std::vector<Point> v(verts_.rbegin(), verts_.rend());
    return from_vertices(std::move(v));
}

PolygonalArc PolygonalArc::scaled(double s) const {
    if (!(s > 0.0)) throw std::invalid_argument("scale must be positive");
    std::vector<Point> v;
    v.reserve(verts_.size());
    for (const auto& p : verts_) v.push_back(p * s);
    return from_vertices(std::move(v));
}

double arc_length(const PolygonalArc& a) { return a.length(); }

std::vector<Point> convex_hull(const std::vector<Point>& pts) {
    std::vector<Point> p = pts;
    std::sort(p.begin(), p.end(), [](const Point& a, const Point& b) {
        return a.x < b.x || (a.x == b.x && a.y < b.y);
    });
    p.erase(std::unique(p.begin(), p.end(),
                        [](const Point& a, const Point& b) { return a.x == b.x && a.y == b.y; }),
            p.end());
    const std::size_t n = p.size();
    if (n <= 2) return p;

    double lo_x = p.front().x, hi_x = p.back().x, lo_y = p.front().y, hi_y = p.front().y;
    for (const auto& q : p) {
        lo_y = std::min(lo_y, q.y);
        hi_y = std::max(hi_y, q.y);
    }
    const double span = std::max(hi_x - lo_x, hi_y - lo_y);  // translation-invariant scale
    const double eps = kCollinearRel * std::max(span, 1e-300);

    std::vector<Point> hull(2 * n);
    std::size_t k = 0;
    for (std::size_t i = 0; i < n; ++i) {  // lower
        while (k >= 2 && orient(hull[k - 2], hull[k - 1], p[i]) <= eps) --k;
        hull[k++] = p[i];
    }
    const std::size_t lower = k + 1;
    for (std::size_t i = n - 1; i-- > 0;) {  // upper
        while (k >= lower && orient(hull[k - 2], hull[k - 1], p[i]) <= eps) --k;
        hull[k++] = p[i];
    }
    hull.resize(k - 1);
    return hull;
}

std::vector<std::size_t> hull_corner_indices(const PolygonalArc& a) {
    const auto hull = convex_hull(a.vertices());
    std::vector<std::size_t> idx;
    idx.reserve(hull.size());
    for (const auto& h : hull) {
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (a.vertex(i).x == h.x && a.vertex(i).y == h.y) {
                idx.push_back(i);
                break;
            }
        }
    }
    std::sort(idx.begin(), idx.end());
    return idx;
}

std::vector<Point> hull_corners(const PolygonalArc& a) {
    std::vector<Point> out;
    for (std::size_t i : hull_corner_indices(a)) out.push_back(a.vertex(i));
    return out;
}

Sector Sector::make(const Point& apex, const Vec2& axis, double angle, double radius) {
    if (!(angle > 0.0) || !(angle < kPi))
        throw std::invalid_argument("sector angle must lie in (0, pi)");
    if (!(radius > 0.0)) throw std::invalid_argument("sector radius must be positive");
    return Sector{apex, axis.normalized(), angle, radius};
}

double sector_contains(const Sector& s, const Point& p) {
    const Vec2 v = p - s.apex;
    const double left = s.left_dir().cross(v);         // > 0: outside the left ray
    const double right = -(s.right_dir().cross(v));    // > 0: outside the right ray
    const double disk = v.norm() - s.radius;
    return std::max({left, right, disk});
}

}  // namespace sectorcover
