// Python bindings for the main operations: geometry primitives, support-line
// certificates, chord-comparison bounds, the fitter and the campaign runner.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "sectorcover/arc_io.hpp"
#include "sectorcover/fitter.hpp"
#include "sectorcover/harness.hpp"
#include "sectorcover/length_bounds.hpp"
#include "sectorcover/support_lines.hpp"
#include "sectorcover/svg.hpp"

namespace py = pybind11;
using namespace sectorcover;

namespace {

using VertexList = std::vector<std::pair<double, double>>;

PolygonalArc to_arc(const VertexList& verts) {
    std::vector<Point> pts;
    pts.reserve(verts.size());
    for (const auto& [x, y] : verts) pts.push_back({x, y});
    return PolygonalArc::from_vertices(std::move(pts));
}

VertexList from_arc(const PolygonalArc& a) {
    VertexList out;
    out.reserve(a.size());
    for (const auto& p : a.vertices()) out.emplace_back(p.x, p.y);
    return out;
}

Sector make_sector(double angle_deg, double radius) {
    return Sector::make({0, 0}, {1, 0}, deg_to_rad(angle_deg), radius);
}

py::dict motion_dict(const RigidMotion& m) {
    py::dict d;
    d["rotation"] = m.rotation;
    d["translation"] = std::make_pair(m.translation.x, m.translation.y);
    d["reflect"] = m.reflect;
    return d;
}

py::dict certificate_dict(const WedgeCertificate& c) {
    py::dict d;
    d["apex_kind"] = c.is_apex_kind();
    d["theta"] = c.theta;
    d["apex"] = std::make_pair(c.apex().x, c.apex().y);
    py::list contacts;
    for (const auto& ct : c.contacts) {
        py::dict e;
        e["param"] = ct.param;
        e["point"] = std::make_pair(ct.point.x, ct.point.y);
        e["side"] = ct.side;
        contacts.append(e);
    }
    d["contacts"] = contacts;
    return d;
}

}  // namespace

PYBIND11_MODULE(sectorcover, m) {
    m.doc() = "Sector covers for unit arcs: support-line certificates, "
              "chord-comparison length bounds, and a rigid-motion fitter.";

    m.def("arc_length", [](const VertexList& v) { return to_arc(v).length(); },
          py::arg("vertices"), "Total length of the polygonal arc.");

    m.def("is_simple", [](const VertexList& v) { return to_arc(v).is_simple(); },
          py::arg("vertices"));

    m.def("hull_corners",
          [](const VertexList& v) {
              const auto arc = to_arc(v);
              VertexList out;
              for (const auto& p : hull_corners(arc)) out.emplace_back(p.x, p.y);
              return out;
          },
          py::arg("vertices"),
          "Strict convex-hull corners in the arc's parametric order.");

    m.def("chord_length", &chord_length, py::arg("radius"), py::arg("angle"),
          "Chord subtended by `angle` radians at radius `radius`.");

    m.def("sector_area",
          [](double angle_deg, double radius) { return make_sector(angle_deg, radius).area(); },
          py::arg("angle_deg") = 30.0, py::arg("radius") = 1.0);

    m.def("sector_contains",
          [](double angle_deg, double radius, std::pair<double, double> p) {
              return sector_contains(make_sector(angle_deg, radius), {p.first, p.second});
          },
          py::arg("angle_deg"), py::arg("radius"), py::arg("point"),
          "Signed containment violation (<= 0 inside the closed sector).");

    m.def("reflect_point",
          [](std::pair<double, double> p, std::pair<double, double> a,
             std::pair<double, double> b) {
              const Point r = reflect({p.first, p.second},
                                      Line::through({a.first, a.second}, {b.first, b.second}));
              return std::make_pair(r.x, r.y);
          },
          py::arg("point"), py::arg("line_a"), py::arg("line_b"),
          "Mirror image of `point` across the line through `line_a` and `line_b`.");

    m.def("compose_reflections",
          [](std::pair<double, double> a1, std::pair<double, double> b1,
             std::pair<double, double> a2, std::pair<double, double> b2) {
              const RigidMotion mm = compose_reflections(
                  Line::through({a1.first, a1.second}, {b1.first, b1.second}),
                  Line::through({a2.first, a2.second}, {b2.first, b2.second}));
              return motion_dict(mm);
          },
          "Product of two line reflections as a rigid motion dict.");

    m.def("sine_superadditive", &sine_superadditive, py::arg("alpha"), py::arg("beta"));

    m.def("find_certificates",
          [](const VertexList& v, double theta_deg) {
              const auto pair = find_certificates(to_arc(v), deg_to_rad(theta_deg));
              py::dict d;
              d["first"] = certificate_dict(pair.first);
              d["second"] = certificate_dict(pair.second);
              return d;
          },
          py::arg("vertices"), py::arg("theta_deg") = 30.0,
          "Support-line certificate pair for both arc ends.");

    m.def("replay",
          [](const VertexList& v) {
              const ReplayOutcome out = replay_contradiction(to_arc(v));
              py::dict d;
              if (out.certificate) {
                  d["outcome"] = "certificate";
                  d["case"] = out.certificate->case_label;
                  d["bound"] = out.certificate->bound;
                  d["unfolded"] = from_arc(out.certificate->unfolded);
              } else {
                  d["outcome"] = "no-certificate";
                  d["reason"] = out.reason;
              }
              return d;
          },
          py::arg("vertices"),
          "Full contradiction pipeline; certificates carry a length lower bound.");

    m.def("fit",
          [](const VertexList& v, double angle_deg, double radius) {
              const Sector s = make_sector(angle_deg, radius);
              const FitResult r = fit(to_arc(v), s);
              py::dict d;
              d["success"] = r.success;
              d["violation"] = r.best.violation;
              d["motion"] = motion_dict(r.best.motion);
              d["candidate_kind"] = to_string(r.best.kind);
              if (!r.success) d["replay_reason"] = r.replay_reason;
              return d;
          },
          py::arg("vertices"), py::arg("angle_deg") = 30.0, py::arg("radius") = 1.0,
          "Best rigid-motion placement of the arc into the sector.");

    m.def("generate",
          [](const std::string& family, std::uint64_t seed, int vertices, double shape) {
              return from_arc(
                  generate(ArcFamily{family_from_string(family), seed, vertices, shape}));
          },
          py::arg("family"), py::arg("seed") = 0, py::arg("vertices") = 12,
          py::arg("shape") = 1.0, "Deterministic simple unit arc from a named family.");

    m.def("baseline_radius",
          [](double theta_deg, int rule) {
              const BaselineRule r =
                  rule == 1 ? BaselineRule::half_csc_half : BaselineRule::csc_two_theta;
              return baseline_sector(deg_to_rad(theta_deg), r).radius;
          },
          py::arg("theta_deg"), py::arg("rule") = 1);

    m.def("run_campaign",
          [](const std::vector<std::string>& families, int trials, std::uint64_t seed,
             double angle_deg, double radius, int threads) {
              CampaignConfig cfg;
              for (const auto& f : families)
                  cfg.mix.push_back(ArcFamily{family_from_string(f), 0, 12, 1.0});
              cfg.trials = trials;
              cfg.seed = seed;
              cfg.target = make_sector(angle_deg, radius);
              cfg.threads = threads;
              const CampaignReport rep = run_campaign(cfg);
              py::dict d;
              d["trials"] = rep.trials;
              d["successes"] = rep.successes;
              d["failures"] = rep.failures;
              d["max_violation"] = rep.max_violation;
              d["successes_by_kind"] = rep.successes_by_kind;
              return d;
          },
          py::arg("families"), py::arg("trials") = 100, py::arg("seed") = 0,
          py::arg("angle_deg") = 30.0, py::arg("radius") = 1.0, py::arg("threads") = 0,
          "Monte Carlo fitting campaign against a sector target.");

    m.def("render_placement_svg",
          [](const VertexList& v, double angle_deg, double radius) {
              const Sector s = make_sector(angle_deg, radius);
              const auto arc = to_arc(v);
              const FitResult r = fit(arc, s);
              if (!r.success) throw std::runtime_error("no placement found");
              return render_placement(arc, s, r.best.motion);
          },
          py::arg("vertices"), py::arg("angle_deg") = 30.0, py::arg("radius") = 1.0);
}
