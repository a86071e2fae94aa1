#include "sectorcover/fitter.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "sectorcover/length_bounds.hpp"
#include "sectorcover/parallel.hpp"
#include "sectorcover/support_lines.hpp"

namespace sectorcover {

namespace {

constexpr double kRotGridStep = 0.25 * kPi / 180.0;
constexpr double kGolden = 0.6180339887498949;

// Motion sending `anchor` to `target` after rotating by rho about `anchor`.
RigidMotion pin_and_rotate(const Point& anchor, double rho, const Point& target) {
    return RigidMotion{rho, target - anchor.rotated(rho), false};
}

double eval(const PolygonalArc& a, const Sector& s, const RigidMotion& m) {
    return placement_violation(a, s, m);
}

template <class F>
double golden_min(F&& f, double lo, double hi, int iters = 48) {
    double a = lo, b = hi;
    double c = b - kGolden * (b - a);
    double d = a + kGolden * (b - a);
    double fc = f(c), fd = f(d);
    for (int i = 0; i < iters && (b - a) > 1e-13; ++i) {
        if (fc < fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - kGolden * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + kGolden * (b - a);
            fd = f(d);
        }
    }
    return fc < fd ? c : d;
}

struct CornerCone {
    Point corner;
    double bisector;  // direction angle of the hull cone bisector
    double opening;   // hull angle at the corner
};

std::optional<CornerCone> corner_cone(const PolygonalArc& a, std::size_t corner_rank) {
    const auto idx = hull_corner_indices(a);
    if (corner_rank >= idx.size()) return std::nullopt;
    const auto hull = convex_hull(a.vertices());
    const Point c = a.vertex(idx[corner_rank]);
    if (hull.size() <= 2) {
        const Point& other =
            (dist(hull.front(), c) > dist(hull.back(), c)) ? hull.front() : hull.back();
        return CornerCone{c, (other - c).angle(), 0.0};
    }
    std::size_t k = hull.size();
    for (std::size_t i = 0; i < hull.size(); ++i)
        if (hull[i].x == c.x && hull[i].y == c.y) k = i;
    if (k == hull.size()) return std::nullopt;
    const Point& prev = hull[(k + hull.size() - 1) % hull.size()];
    const Point& next = hull[(k + 1) % hull.size()];
    const Vec2 u = (prev - c).normalized();
    const Vec2 w = (next - c).normalized();
    Vec2 bis = u + w;
    if (bis.norm() < 1e-12) bis = u.perp();
    return CornerCone{c, bis.normalized().angle(), angle_between(u, w)};
}

// Apex-touch candidates for one hull corner of the working (possibly
// mirrored) arc; violations come from the original arc via `pre`.
void apex_candidates(const PolygonalArc& original, const PolygonalArc& working,
                     const RigidMotion& pre, const Sector& s, std::size_t corner_rank,
                     CandidateKind kind, std::vector<Placement>& out) {
    const auto cone = corner_cone(working, corner_rank);
    if (!cone) return;
    if (cone->opening > s.angle + 1e-10) return;

    const double axis_angle = s.axis.angle();
    const double slack = s.angle - cone->opening;
    const double lo = axis_angle - cone->bisector - slack / 2.0;
    const double hi = axis_angle - cone->bisector + slack / 2.0;

    auto violation_at = [&](double rho) {
        const RigidMotion m = pre.then(pin_and_rotate(cone->corner, rho, s.apex));
        return eval(original, s, m);
    };

    double best_rho = (lo + hi) / 2.0;
    double best_v = violation_at(best_rho);
    const int steps =
        std::min(2000, std::max(1, static_cast<int>(std::ceil((hi - lo) / kRotGridStep))));
    for (int i = 0; i <= steps; ++i) {
        const double rho = lo + (hi - lo) * double(i) / steps;
        const double v = violation_at(rho);
        if (v < best_v) {
            best_v = v;
            best_rho = rho;
        }
    }
    const double pad = (hi - lo) / steps;
    const double g_lo = std::max(lo, best_rho - pad);
    const double g_hi = std::min(hi, best_rho + pad);
    if (g_hi > g_lo) {
        const double rho = golden_min(violation_at, g_lo, g_hi);
        const double v = violation_at(rho);
        if (v < best_v) {
            best_v = v;
            best_rho = rho;
        }
    }
    out.push_back(
        Placement{pre.then(pin_and_rotate(cone->corner, best_rho, s.apex)), best_v, kind});
}

// Motions aligning a support wedge with the sector wedge; two of the four
// ray pairings map both rays onto boundary rays (one proper, one mirrored).
void wedge_candidates(const PolygonalArc& original, const WedgeCertificate& cert, const Sector& s,
                      CandidateKind kind, std::vector<Placement>& out) {
    if (cert.theta == 0.0) return;
    const Point w = cert.apex();
    const Vec2 targets[2] = {s.left_dir(), s.right_dir()};
    for (int t = 0; t < 2; ++t) {
        const Vec2 t1 = targets[t], t2 = targets[1 - t];
        {
            const double rho = t1.angle() - cert.ray_u.dir.angle();
            const RigidMotion m = pin_and_rotate(w, rho, s.apex);
            if (dist(m.apply_dir(cert.ray_v.dir), t2) <= 1e-9)
                out.push_back(Placement{m, eval(original, s, m), kind});
        }
        {
            const RigidMotion flip = RigidMotion::reflection_across(Line{w, cert.ray_u.dir});
            const double rho = t1.angle() - cert.ray_u.dir.angle();
            const RigidMotion m = flip.then(pin_and_rotate(w, rho, s.apex));
            if (dist(m.apply_dir(cert.ray_v.dir), t2) <= 1e-9)
                out.push_back(Placement{m, eval(original, s, m), kind});
        }
    }
}

// Pin a pair of arc points onto the two bounding rays; the exact seed for
// tight chord-style placements no apex or wedge candidate reaches. All hull
// corner pairs are tried: for needle-like arcs the binding pair is often a
// middle corner and an endpoint.
void chord_pair(const PolygonalArc& original, const Sector& s, const Point& e1, const Point& e2,
                std::vector<Placement>& out) {
    const double c = dist(e1, e2);
    if (c < 1e-12) return;
    const double ct = std::cos(s.angle), st = std::sin(s.angle);
    const int kGrid = 8;
    const double half = std::sin(s.angle / 2.0);

    auto place = [&](const Vec2& ray1, const Vec2& ray2, double s1, double s2) {
        const Point p1 = s.apex + ray1 * s1;
        const Point p2 = s.apex + ray2 * s2;
        const double rho = (p2 - p1).angle() - (e2 - e1).angle();
        const RigidMotion m = pin_and_rotate(e1, rho, p1);
        out.push_back(Placement{m, eval(original, s, m), CandidateKind::refined});
        const RigidMotion flip = RigidMotion::reflection_across(Line{e1, (e2 - e1).normalized()});
        const RigidMotion mm = flip.then(m);
        out.push_back(Placement{mm, eval(original, s, mm), CandidateKind::refined});
    };

    for (int swap = 0; swap < 2; ++swap) {
        const Vec2 ray1 = swap ? s.right_dir() : s.left_dir();
        const Vec2 ray2 = swap ? s.left_dir() : s.right_dir();
        // Symmetric exact solution (both pins at equal ray distance).
        if (half > 1e-12) {
            const double sym = c / (2.0 * half);
            if (sym <= s.radius * (1.0 + 1e-9)) {
                const double sv = std::min(sym, s.radius);
                place(ray1, ray2, sv, sv);
            }
        }
        for (int i = 0; i <= kGrid; ++i) {
            const double s1 = s.radius * double(i) / kGrid;
            const double disc = c * c - s1 * s1 * st * st;
            if (disc < 0.0) continue;
            for (double sign : {+1.0, -1.0}) {
                double s2 = s1 * ct + sign * std::sqrt(disc);
                if (s2 < -1e-9 || s2 > s.radius * (1.0 + 1e-9)) continue;
                s2 = std::clamp(s2, 0.0, s.radius);
                place(ray1, ray2, s1, s2);
            }
        }
    }
}

void chord_candidates(const PolygonalArc& original, const Sector& s,
                      std::vector<Placement>& out) {
    chord_pair(original, s, original.vertices().front(), original.vertices().back(), out);
    const auto corners = hull_corners(original);
    for (std::size_t i = 0; i < corners.size(); ++i)
        for (std::size_t j = i + 1; j < corners.size(); ++j)
            chord_pair(original, s, corners[i], corners[j], out);
}

PolygonalArc perturb_to_simple(const PolygonalArc& a, bool& changed) {
    changed = false;
    if (a.is_simple()) return a;
    changed = true;
    const std::vector<Point>& v = a.vertices();
    std::uint64_t h = 0x9e3779b97f4a7c15ull;
    for (int attempt = 1; attempt <= 100; ++attempt) {
        std::vector<Point> w = v;
        for (std::size_t i = 0; i < w.size(); ++i) {
            h ^= (i + 1) * 0xbf58476d1ce4e5b9ull + attempt;
            h *= 0x94d049bb133111ebull;
            const double ang = double(h >> 11) * (2.0 * kPi / 9007199254740992.0);
            const double mag = 1e-9 * attempt / 100.0;
            w[i] = w[i] + Vec2{std::cos(ang), std::sin(ang)} * mag;
        }
        try {
            auto arc = PolygonalArc::from_vertices(w);
            if (arc.is_simple()) return arc;
        } catch (const std::invalid_argument&) {
        }
    }
    return a;
}

}  // namespace

const char* to_string(CandidateKind k) {
    switch (k) {
        case CandidateKind::apex_touch_first: return "apex-touch-X1";
        case CandidateKind::apex_touch_last: return "apex-touch-Xn";
        case CandidateKind::apex_touch_middle: return "apex-touch-middle";
        case CandidateKind::wedge_at_u: return "wedge-at-U";
        case CandidateKind::wedge_at_v: return "wedge-at-V";
        case CandidateKind::refined: return "refined";
    }
    return "unknown";
}

double placement_violation(const PolygonalArc& a, const Sector& s, const RigidMotion& m) {
    double worst = -std::numeric_limits<double>::infinity();
    for (const auto& p : a.vertices()) worst = std::max(worst, sector_contains(s, m.apply(p)));
    return worst;
}

std::vector<Placement> candidate_placements(const PolygonalArc& a, const Sector& s,
                                            bool* perturbed) {
    bool changed = false;
    const PolygonalArc working = perturb_to_simple(a, changed);
    if (perturbed) *perturbed = changed;

    std::vector<Placement> out;
    const RigidMotion identity = RigidMotion::identity();
    const RigidMotion mirror{0.0, {0.0, 0.0}, true};

    for (const RigidMotion& pre : {identity, mirror}) {
        // pre maps `view` back onto the working arc; candidates pin corners
        // of the mirrored view, then undo the mirror inside the motion.
        const PolygonalArc view = working.transformed(pre.inverse());
        const auto idx = hull_corner_indices(view);
        for (std::size_t rank = 0; rank < idx.size(); ++rank) {
            CandidateKind kind = CandidateKind::apex_touch_middle;
            if (rank == 0) kind = CandidateKind::apex_touch_first;
            else if (rank + 1 == idx.size()) kind = CandidateKind::apex_touch_last;
            apex_candidates(a, view, pre, s, rank, kind, out);
        }
    }

    try {
        const CertificatePair pair = find_certificates(working, s.angle);
        if (!pair.first.is_apex_kind())
            wedge_candidates(a, pair.first, s, CandidateKind::wedge_at_u, out);
        if (!pair.second.is_apex_kind())
            wedge_candidates(a, pair.second, s, CandidateKind::wedge_at_v, out);
    } catch (const std::exception&) {
        // Certificates are an accelerator; the remaining families stand alone.
    }

    chord_candidates(a, s, out);

    std::sort(out.begin(), out.end(),
              [](const Placement& x, const Placement& y) { return x.violation < y.violation; });
    return out;
}

Placement refine(const PolygonalArc& a, const Sector& s, const Placement& p) {
    Placement best = p;
    best.violation = eval(a, s, p.motion);
    if (best.violation <= 0.0) return best;

    // 26-direction compass poll over (rotation about the apex, tx, ty).
    static const std::vector<std::array<double, 3>> dirs = [] {
        std::vector<std::array<double, 3>> d;
        for (int i = -1; i <= 1; ++i)
            for (int j = -1; j <= 1; ++j)
                for (int k = -1; k <= 1; ++k)
                    if (i || j || k) d.push_back({double(i), double(j), double(k)});
        return d;
    }();

    double step = 1e-2;
    RigidMotion cur = best.motion;
    double cur_v = best.violation;
    int evals = 0;
    int restarts = 2;  // re-widen the poll after convergence to slip past kinks
    while (evals < 80000) {
        bool improved = false;
        for (const auto& d : dirs) {
            const RigidMotion cand = cur.then(RigidMotion::rotation_about(d[0] * step, s.apex))
                                         .then(RigidMotion::translate({d[1] * step, d[2] * step}));
            const double v = eval(a, s, cand);
            ++evals;
            if (v < cur_v - 1e-15) {
                cur = cand;
                cur_v = v;
                improved = true;
                break;
            }
        }
        if (!improved) step *= 0.5;
        if (cur_v <= -1e-12) break;
        if (step <= 1e-12) {
            if (restarts-- <= 0 || cur_v <= kFitTol) break;
            step = 3e-2;
        }
    }
    if (cur_v < best.violation) {
        best.motion = cur;
        best.violation = cur_v;
        best.kind = CandidateKind::refined;
    }
    return best;
}

FitResult fit(const PolygonalArc& a, const Sector& s) {
    FitResult result;
    result.candidates = candidate_placements(a, s, &result.perturbed_nonsimple);

    if (result.candidates.empty()) {
        result.best = Placement{RigidMotion::identity(), eval(a, s, RigidMotion::identity()),
                                CandidateKind::refined};
        result.candidates.push_back(result.best);
    }

    const std::size_t n_refine = std::min<std::size_t>(5, result.candidates.size());
    std::vector<Placement> refined(n_refine);
    parallel_for(n_refine,
                 [&](std::size_t i) { refined[i] = refine(a, s, result.candidates[i]); });

    result.best = result.candidates.front();
    for (const auto& r : refined)
        if (r.violation < result.best.violation) result.best = r;

    // Independent re-verification of the stored violation.
    result.best.violation = placement_violation(a, s, result.best.motion);
    result.success = result.best.violation <= kFitTol;

    if (!result.success) {
        try {
            const ReplayOutcome replay = replay_contradiction(a);
            if (replay.certificate) {
                result.replay_bound = replay.certificate->bound;
                result.replay_reason = "length lower bound exceeds 1";
            } else {
                result.replay_reason = replay.reason;
            }
        } catch (const std::exception& e) {
            result.replay_reason = e.what();
        }
    }
    return result;
}

}  // namespace sectorcover
