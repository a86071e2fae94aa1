#include "sectorcover/support_lines.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace sectorcover {

namespace {

// Arc vertices lying on a support ray, as sorted parameters.
std::vector<double> contact_params(const PolygonalArc& a, const Ray& r) {
    std::vector<double> out;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (r.distance(a.vertex(i)) <= kContactTol) out.push_back(a.param(i));
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Signed violation of the wedge with apex w and rays du, dv (interior swept
// from du toward dv through sign(du x dv)).
double wedge_violation(const Point& w, const Vec2& du, const Vec2& dv, const Point& p) {
    const double sigma = du.cross(dv) >= 0.0 ? 1.0 : -1.0;
    const Vec2 v = p - w;
    return std::max(-sigma * du.cross(v), sigma * dv.cross(v));
}

bool wedge_supports(const PolygonalArc& a, const Point& w, const Vec2& du, const Vec2& dv) {
    for (const auto& p : a.vertices()) {
        if (wedge_violation(w, du, dv, p) > kContactTol) return false;
    }
    return true;
}

// Try to assemble a 3-alternating-contact certificate from the contact sets
// of two rays. Outer contacts take extreme parameters.
std::optional<WedgeCertificate> make_alternating(const PolygonalArc& a, const Ray& u, const Ray& v,
                                                 double theta) {
    const auto su = contact_params(a, u);
    const auto sv = contact_params(a, v);

    struct Triple {
        double t1, t2, t3;
        int doubled_side;
        double span() const { return t3 - t1; }
    };
    std::optional<Triple> best;
    auto consider = [&](const std::vector<double>& two, const std::vector<double>& one,
                        int doubled_side) {
        if (two.size() < 2) return;
        const double t1 = two.front(), t3 = two.back();
        for (double t2 : one) {
            if (t2 > t1 && t2 < t3) {
                Triple tr{t1, t2, t3, doubled_side};
                if (!best || tr.span() > best->span()) best = tr;
                break;
            }
        }
    };
    consider(su, sv, 0);
    consider(sv, su, 1);
    if (!best) return std::nullopt;

    WedgeCertificate c;
    c.ray_u = u;
    c.ray_v = v;
    c.theta = theta;
    const int ds = best->doubled_side;
    c.contacts = {WedgeContact{best->t1, a.point_at(best->t1), ds},
                  WedgeContact{best->t2, a.point_at(best->t2), 1 - ds},
                  WedgeContact{best->t3, a.point_at(best->t3), ds}};
    return c;
}

bool same_certificate(const WedgeCertificate& a, const WedgeCertificate& b) {
    if (a.contacts.size() != b.contacts.size()) return false;
    for (std::size_t i = 0; i < a.contacts.size(); ++i) {
        if (std::fabs(a.contacts[i].param - b.contacts[i].param) > 1e-9) return false;
    }
    if (a.theta == 0.0 || b.theta == 0.0) {
        // Parallel strips: same unordered line pair.
        auto on = [](const Ray& r, const Ray& s) {
            return std::fabs(r.dir.cross(s.dir)) <= 1e-9 &&
                   std::fabs(r.dir.cross(s.origin - r.origin)) <= 1e-7;
        };
        return (on(a.ray_u, b.ray_u) && on(a.ray_v, b.ray_v)) ||
               (on(a.ray_u, b.ray_v) && on(a.ray_v, b.ray_u));
    }
    if (dist(a.ray_u.origin, b.ray_u.origin) > 1e-7) return false;
    auto close_dir = [](const Vec2& x, const Vec2& y) { return dist(x, y) <= 1e-7; };
    return (close_dir(a.ray_u.dir, b.ray_u.dir) && close_dir(a.ray_v.dir, b.ray_v.dir)) ||
           (close_dir(a.ray_u.dir, b.ray_v.dir) && close_dir(a.ray_v.dir, b.ray_u.dir));
}

// Ordering that puts the X1-end certificate first. Ties over all three
// contact parameters happen in the shared-line degenerate case; there the
// X1-end wedge is the one whose apex sits near the earliest contact.
std::array<double, 4> contact_key(const WedgeCertificate& c) {
    double bias = 0.0;
    if (c.theta > 0.0)
        bias = dist(c.apex(), c.contacts.front().point) - dist(c.apex(), c.contacts.back().point);
    return {c.contacts[0].param, c.contacts[1].param, c.contacts[2].param, bias};
}

}  // namespace

double WedgeCertificate::contains_violation(const Point& p) const {
    if (theta == 0.0) {
        // Strip between the two parallel support lines.
        const double a = ray_u.dir.cross(p - ray_u.origin);
        const double b = ray_u.dir.cross(ray_v.origin - ray_u.origin);
        // p must lie between the lines: signed offsets 0 and b bracket a.
        if (b >= 0.0) return std::max(a - b, -a);
        return std::max(a, b - a);
    }
    return wedge_violation(ray_u.origin, ray_u.dir, ray_v.dir, p);
}

double hull_angle_at(const PolygonalArc& a, std::size_t corner_index) {
    const auto idx = hull_corner_indices(a);
    if (corner_index >= idx.size())
        throw std::invalid_argument("hull_angle_at: not a hull corner index");
    const auto hull = convex_hull(a.vertices());
    if (hull.size() <= 2) return 0.0;
    const Point c = a.vertex(idx[corner_index]);
    std::size_t k = hull.size();
    for (std::size_t i = 0; i < hull.size(); ++i) {
        if (hull[i].x == c.x && hull[i].y == c.y) {
            k = i;
            break;
        }
    }
    if (k == hull.size()) throw std::invalid_argument("hull_angle_at: corner not on hull");
    const Point& prev = hull[(k + hull.size() - 1) % hull.size()];
    const Point& next = hull[(k + 1) % hull.size()];
    return angle_between(prev - c, next - c);
}

std::vector<WedgeCertificate> enumerate_certificates(const PolygonalArc& a, double theta) {
    if (theta < 0.0 || theta >= kPi)
        throw std::invalid_argument("enumerate_certificates: theta must lie in [0, pi)");
    const std::vector<Point> poly = convex_hull(a.vertices());
    const std::size_t h = poly.size();
    std::vector<WedgeCertificate> found;
    if (h < 2) return found;

    auto try_candidate = [&](const WedgeCertificate& c) {
        for (const auto& p : a.vertices()) {
            if (c.contains_violation(p) > kContactTol) return;
        }
        for (const auto& f : found) {
            if (same_certificate(f, c)) return;
        }
        found.push_back(c);
    };

    for (std::size_t i = 0; i < h; ++i) {
        const Point& e0 = poly[i];
        const Point& e1 = poly[(i + 1) % h];
        if (h == 2 && i == 1) break;  // a segment hull has one edge
        const Vec2 d = (e1 - e0).normalized();  // hull on the left (CCW)

        if (theta == 0.0) {
            // Opposite parallel tangent: max signed distance on the left.
            double far = -std::numeric_limits<double>::infinity();
            Point t{};
            for (const auto& q : poly) {
                const double s = d.cross(q - e0);
                if (s > far) {
                    far = s;
                    t = q;
                }
            }
            // Anchor the rays behind every contact so ray distances behave
            // like line distances.
            double lo = std::numeric_limits<double>::infinity();
            for (const auto& q : a.vertices()) lo = std::min(lo, d.dot(q - e0));
            const Point ou = e0 + d * (lo - 1.0);
            const Ray u{ou, d};
            const Ray v{t + d * d.dot(ou - t), d};
            if (auto c = make_alternating(a, u, v, 0.0)) try_candidate(*c);
            continue;
        }

        for (int sign : {+1, -1}) {
            // Ray along the flush edge; the other ray fans toward the hull
            // side. sign picks which end of the edge line hosts the apex.
            const Vec2 du = (sign > 0) ? d : -d;
            const Vec2 dv = du.rotated(sign > 0 ? theta : -theta);
            // Support line with direction dv: tangency corner extreme along
            // the inward normal of dv for this orientation.
            const Vec2 n = (sign > 0) ? dv.perp() : -dv.perp();
            double far = -std::numeric_limits<double>::infinity();
            Point t{};
            for (const auto& q : poly) {
                const double s = n.dot(q);
                if (s > far) {
                    far = s;
                    t = q;
                }
            }
            // Apex: intersection of the edge line and the tangent line.
            const double denom = du.cross(dv);
            if (std::fabs(denom) < 1e-14) continue;
            const double s = (t - e0).cross(dv) / denom;
            const Point w = e0 + du * s;
            if (!w.finite()) continue;
            if (!wedge_supports(a, w, du, dv)) continue;
            if (auto c = make_alternating(a, Ray{w, du}, Ray{w, dv}, theta)) try_candidate(*c);
        }
    }

    std::sort(found.begin(), found.end(), [](const WedgeCertificate& x, const WedgeCertificate& y) {
        return contact_key(x) < contact_key(y);
    });
    return found;
}

std::optional<WedgeCertificate> apex_touch_certificate(const PolygonalArc& a, double theta,
                                                       int end) {
    const auto idx = hull_corner_indices(a);
    if (idx.empty()) return std::nullopt;
    const std::size_t corner = (end == 0) ? 0 : idx.size() - 1;
    const double phi = hull_angle_at(a, corner);
    if (phi > theta + kWedgeAngleTol) return std::nullopt;

    const Point c = a.vertex(idx[corner]);
    const auto hull = convex_hull(a.vertices());

    // Wedge rays: center the hull's cone at the corner inside the theta-cone.
    Vec2 bisector;
    if (hull.size() <= 2) {
        const Point& other = (dist(hull.front(), c) > dist(hull.back(), c)) ? hull.front()
                                                                            : hull.back();
        bisector = (other - c).normalized();
    } else {
        std::size_t k = 0;
        for (std::size_t i = 0; i < hull.size(); ++i) {
            if (hull[i].x == c.x && hull[i].y == c.y) k = i;
        }
        const Point& prev = hull[(k + hull.size() - 1) % hull.size()];
        const Point& next = hull[(k + 1) % hull.size()];
        const Vec2 u = (prev - c).normalized();
        const Vec2 v = (next - c).normalized();
        Vec2 sum = u + v;
        if (sum.norm() < 1e-12) sum = u.perp();
        bisector = sum.normalized();
    }
    WedgeCertificate cert;
    const double half = std::max(theta, 1e-12) / 2.0;
    cert.ray_u = Ray{c, bisector.rotated(+half)};
    cert.ray_v = Ray{c, bisector.rotated(-half)};
    cert.theta = theta;
    cert.apex_corner = corner;
    for (const auto& p : a.vertices()) {
        if (cert.contains_violation(p) > kContactTol) return std::nullopt;
    }
    return cert;
}

CertificatePair find_certificates(const PolygonalArc& a, double theta) {
    if (theta < 0.0 || theta >= kPi)
        throw std::invalid_argument("find_certificates: theta must lie in [0, pi)");
    if (!a.is_simple()) throw std::invalid_argument("find_certificates: arc is not simple");

    const auto apex_first = apex_touch_certificate(a, theta, 0);
    const auto apex_second = apex_touch_certificate(a, theta, 1);
    std::vector<WedgeCertificate> three = enumerate_certificates(a, theta);

    CertificatePair pair;
    if (apex_first && apex_second) {
        pair.first = *apex_first;
        pair.second = *apex_second;
    } else if (apex_first) {
        if (three.empty())
            throw std::runtime_error("find_certificates: no 3-contact certificate for the Xn end");
        pair.first = *apex_first;
        pair.second = three.back();
    } else if (apex_second) {
        if (three.empty())
            throw std::runtime_error("find_certificates: no 3-contact certificate for the X1 end");
        pair.first = three.front();
        pair.second = *apex_second;
    } else if (three.size() == 1 && theta == 0.0) {
        // theta == 0: the two conclusions merge into the unique parallel pair.
        pair.first = three.front();
        pair.second = three.front();
    } else {
        if (three.size() < 2)
            throw std::runtime_error("find_certificates: expected two 3-contact certificates");
        pair.first = three.front();
        pair.second = three.back();
    }
    pair.apex_first = pair.first.apex();
    pair.apex_second = pair.second.apex();
    return pair;
}

VerifyResult verify_certificate(const PolygonalArc& a, const WedgeCertificate& c, double theta) {
    // (iv) wedge angle
    const double ang = angle_between(c.ray_u.dir, c.ray_v.dir);
    if (std::fabs(ang - theta) > kWedgeAngleTol) return {false, "angle mismatch"};
    if (theta > 0.0 && dist(c.ray_u.origin, c.ray_v.origin) > kContactTol)
        return {false, "rays do not share an apex"};

    // (i) support: every arc point in the closed wedge
    for (const auto& p : a.vertices()) {
        if (c.contains_violation(p) > kContactTol) return {false, "arc outside wedge"};
    }

    if (c.is_apex_kind()) {
        if (!c.contacts.empty()) return {false, "apex certificate carries contacts"};
        const auto idx = hull_corner_indices(a);
        if (*c.apex_corner >= idx.size()) return {false, "apex corner out of range"};
        if (dist(a.vertex(idx[*c.apex_corner]), c.apex()) > kContactTol)
            return {false, "apex corner not at wedge apex"};
        return {true, {}};
    }

    // (iii) ordering and alternation
    if (c.contacts.size() != 3) return {false, "expected 3 contacts"};
    if (!(c.contacts[0].param < c.contacts[1].param && c.contacts[1].param < c.contacts[2].param))
        return {false, "contacts out of order"};
    if (c.contacts[0].side != c.contacts[2].side || c.contacts[1].side == c.contacts[0].side)
        return {false, "contacts do not alternate"};

    // (ii) contacts on their labeled rays
    for (const auto& ct : c.contacts) {
        const Ray& r = (ct.side == 0) ? c.ray_u : c.ray_v;
        if (r.distance(ct.point) > kContactTol) return {false, "contact off ray"};
        if (dist(a.point_at(ct.param), ct.point) > kContactTol)
            return {false, "contact point does not match its parameter"};
    }
    return {true, {}};
}

Interlace interlace(const CertificatePair& pair) {
    if (pair.first.is_apex_kind() || pair.second.is_apex_kind()) return Interlace::not_applicable;
    if (same_certificate(pair.first, pair.second)) return Interlace::no;

    // Merge the six contacts by parameter and read the ownership pattern.
    struct Tagged {
        double t;
        int owner;
    };
    std::vector<Tagged> all;
    for (const auto& ct : pair.first.contacts) all.push_back({ct.param, 0});
    for (const auto& ct : pair.second.contacts) all.push_back({ct.param, 1});
    std::stable_sort(all.begin(), all.end(), [](const Tagged& a, const Tagged& b) {
        return a.t < b.t || (a.t == b.t && a.owner < b.owner);
    });
    int lead = all.front().owner;
    std::string pattern;
    for (const auto& tg : all) pattern += (tg.owner == lead) ? '1' : '2';

    if (pattern == "112122" || pattern == "111222") return Interlace::yes;
    // Shared-line Case 1: the outer contacts coincide pairwise (the shared
    // support line carries both), the middles may even coincide degenerately.
    const auto& f = pair.first.contacts;
    const auto& s = pair.second.contacts;
    const bool shared_outer = std::fabs(f[0].param - s[0].param) <= 1e-12 &&
                              std::fabs(f[2].param - s[2].param) <= 1e-12;
    if (shared_outer) return Interlace::yes;
    return Interlace::no;
}

}  // namespace sectorcover
