#include "sectorcover/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <vector>

namespace sectorcover {

namespace {

constexpr double kView = 1000.0;
constexpr double kMargin = 60.0;

struct Mapper {
    double scale{1.0};
    Point lo{0, 0};

    static Mapper fit(const std::vector<Point>& pts) {
        Mapper m;
        if (pts.empty()) return m;
        double lx = pts[0].x, hx = pts[0].x, ly = pts[0].y, hy = pts[0].y;
        for (const auto& p : pts) {
            lx = std::min(lx, p.x);
            hx = std::max(hx, p.x);
            ly = std::min(ly, p.y);
            hy = std::max(hy, p.y);
        }
        const double span = std::max({hx - lx, hy - ly, 1e-9});
        m.scale = (kView - 2.0 * kMargin) / span;
        m.lo = {lx, ly};
        return m;
    }

    // SVG y grows downward; geometry y grows upward.
    double x(const Point& p) const { return kMargin + (p.x - lo.x) * scale; }
    double y(const Point& p) const { return kView - kMargin - (p.y - lo.y) * scale; }
};

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.3f", v);
    return buf;
}

void emit_polyline(std::ostringstream& out, const Mapper& m, const std::vector<Point>& pts,
                   const char* stroke, const char* extra = "") {
    out << "  <polyline fill=\"none\" stroke=\"" << stroke << "\" stroke-width=\"2\"" << extra
        << " points=\"";
    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (i) out << ' ';
        out << num(m.x(pts[i])) << ',' << num(m.y(pts[i]));
    }
    out << "\"/>\n";
}

void emit_line(std::ostringstream& out, const Mapper& m, const Point& a, const Point& b,
               const char* stroke, const char* extra = "") {
    out << "  <line stroke=\"" << stroke << "\" stroke-width=\"1.5\"" << extra << " x1=\""
        << num(m.x(a)) << "\" y1=\"" << num(m.y(a)) << "\" x2=\"" << num(m.x(b)) << "\" y2=\""
        << num(m.y(b)) << "\"/>\n";
}

void emit_dot(std::ostringstream& out, const Mapper& m, const Point& p, const char* fill,
              double r = 5.0) {
    out << "  <circle fill=\"" << fill << "\" cx=\"" << num(m.x(p)) << "\" cy=\"" << num(m.y(p))
        << "\" r=\"" << num(r) << "\"/>\n";
}

void emit_sector(std::ostringstream& out, const Mapper& m, const Sector& s) {
    const Point a = s.apex + s.left_dir() * s.radius;
    const Point b = s.apex + s.right_dir() * s.radius;
    out << "  <path fill=\"#eef3fb\" stroke=\"#123a6b\" stroke-width=\"2\" d=\"M "
        << num(m.x(s.apex)) << ' ' << num(m.y(s.apex)) << " L " << num(m.x(a)) << ' '
        << num(m.y(a)) << " A " << num(s.radius * m.scale) << ' ' << num(s.radius * m.scale)
        << " 0 " << (s.angle > kPi ? 1 : 0) << " 1 " << num(m.x(b)) << ' ' << num(m.y(b))
        << " Z\"/>\n";
}

std::string document(const std::ostringstream& body) {
    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 1000 1000\" width=\"1000\" "
           "height=\"1000\">\n"
        << body.str() << "</svg>\n";
    return out.str();
}

std::vector<Point> sector_extent(const Sector& s) {
    std::vector<Point> pts{s.apex, s.apex + s.left_dir() * s.radius,
                           s.apex + s.right_dir() * s.radius};
    // The circular arc may bulge past the chord; include the axis extreme.
    pts.push_back(s.apex + s.axis * s.radius);
    return pts;
}

}  // namespace

std::string render_placement(const PolygonalArc& a, const Sector& s, const RigidMotion& motion) {
    const PolygonalArc placed = a.transformed(motion);
    std::vector<Point> extent = sector_extent(s);
    for (const auto& p : placed.vertices()) extent.push_back(p);
    const Mapper m = Mapper::fit(extent);

    std::ostringstream body;
    emit_sector(body, m, s);
    emit_polyline(body, m, placed.vertices(), "#b02a18");
    emit_dot(body, m, placed.vertices().front(), "#b02a18");
    emit_dot(body, m, placed.vertices().back(), "#b02a18", 3.5);
    return document(body);
}

std::string render_certificates(const PolygonalArc& a, const CertificatePair& pair) {
    std::vector<Point> extent = a.vertices();
    auto wedge_points = [&](const WedgeCertificate& c, std::vector<Point>& out) {
        const double reach = 1.5 * a.length();
        out.push_back(c.ray_u.origin);
        out.push_back(c.ray_u.at(reach));
        out.push_back(c.ray_v.origin);
        out.push_back(c.ray_v.at(reach));
    };
    wedge_points(pair.first, extent);
    wedge_points(pair.second, extent);
    const Mapper m = Mapper::fit(extent);

    std::ostringstream body;
    const double reach = 1.5 * a.length();
    for (const WedgeCertificate* c : {&pair.first, &pair.second}) {
        const char* color = (c == &pair.first) ? "#1b6b2a" : "#6b1b5e";
        emit_line(body, m, c->ray_u.origin, c->ray_u.at(reach), color);
        emit_line(body, m, c->ray_v.origin, c->ray_v.at(reach), color);
        emit_dot(body, m, c->ray_u.origin, color, 4.0);
        for (const auto& ct : c->contacts) emit_dot(body, m, ct.point, color, 5.0);
        if (c->apex_corner) emit_dot(body, m, c->apex(), color, 7.0);
    }
    emit_polyline(body, m, a.vertices(), "#b02a18");
    return document(body);
}

std::string render_unfolding(const PolygonalArc& a, const LengthCertificate& cert) {
    std::vector<Point> extent = a.vertices();
    for (const auto& p : cert.unfolded.vertices()) extent.push_back(p);
    for (const auto& p : cert.polysegment.vertices()) extent.push_back(p);
    for (const auto& p : sector_extent(cert.sector_used)) extent.push_back(p);
    const Mapper m = Mapper::fit(extent);

    std::ostringstream body;
    emit_sector(body, m, cert.sector_used);
    emit_polyline(body, m, a.vertices(), "#c9c9c9");
    emit_polyline(body, m, cert.polysegment.vertices(), "#b02a18",
                  " stroke-dasharray=\"6,4\"");
    emit_polyline(body, m, cert.unfolded.vertices(), "#123a6b");
    for (const auto& st : cert.transcript) {
        const double reach = 2.0 * a.length();
        emit_line(body, m, st.mirror.anchor - st.mirror.dir * reach,
                  st.mirror.anchor + st.mirror.dir * reach, "#1b6b2a",
                  " stroke-dasharray=\"2,3\"");
    }
    emit_dot(body, m, cert.sector_used.apex, "#123a6b", 6.0);
    return document(body);
}

}  // namespace sectorcover
