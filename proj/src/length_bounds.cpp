#include "sectorcover/length_bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace sectorcover {

namespace {

constexpr double kLineTol = 1e-9;
constexpr double kIsoTol = 1e-12;
constexpr double kBoundSlack = 1e-12;

bool on_ray(const Ray& r, const Point& p) { return r.distance(p) <= kLineTol; }

bool in_wedge(const SectorConfig& cfg, const Point& p) {
    const double sigma = cfg.dir_a.cross(cfg.dir_b) >= 0.0 ? 1.0 : -1.0;
    const Vec2 v = p - cfg.apex;
    return std::max(-sigma * cfg.dir_a.cross(v), sigma * cfg.dir_b.cross(v)) <= kLineTol;
}

Vec2 bisector_of(const SectorConfig& cfg) {
    Vec2 s = cfg.dir_a + cfg.dir_b;
    if (s.norm() < 1e-12) s = cfg.dir_a.perp();
    return s.normalized();
}

// Angle between two lines (direction sign ignored), in [0, pi/2].
double line_angle(const Vec2& a, const Vec2& b) {
    const double t = angle_between(a, b);
    return std::min(t, kPi - t);
}

[[noreturn]] void fail(const std::string& clause) { throw std::invalid_argument(clause); }

// --- classification helpers -------------------------------------------------

struct SplitContacts {
    WedgeContact outer_lo, middle, outer_hi;  // outer contacts share a ray
    Ray outer_ray, middle_ray;
};

SplitContacts split(const WedgeCertificate& c) {
    SplitContacts s;
    s.outer_lo = c.contacts[0];
    s.middle = c.contacts[1];
    s.outer_hi = c.contacts[2];
    s.outer_ray = (c.contacts[0].side == 0) ? c.ray_u : c.ray_v;
    s.middle_ray = (c.contacts[1].side == 0) ? c.ray_u : c.ray_v;
    return s;
}

bool same_line(const Ray& a, const Ray& b) {
    return std::fabs(a.dir.cross(b.dir)) <= kLineTol &&
           std::fabs(a.dir.cross(b.origin - a.origin)) <= kLineTol;
}

std::array<double, 4> cert_key(const WedgeCertificate& c) {
    double bias = 0.0;
    if (c.theta > 0.0)
        bias = dist(c.apex(), c.contacts.front().point) - dist(c.apex(), c.contacts.back().point);
    return {c.contacts[0].param, c.contacts[1].param, c.contacts[2].param, bias};
}

// --- unfolding machinery ----------------------------------------------------

struct PolyPoint {
    double param;
    Point pos;
    char label;  // 'A'..'F', 'X', 'Y'
};

struct Flip {
    Line mirror;
    double lo, hi;
};

void apply_flip(std::vector<PolyPoint>& pts, const Flip& f) {
    for (auto& pp : pts) {
        if (pp.param > f.lo && pp.param < f.hi) pp.pos = reflect(pp.pos, f.mirror);
    }
}

double poly_length(const std::vector<PolyPoint>& pts) {
    double t = 0.0;
    for (std::size_t i = 1; i < pts.size(); ++i) t += dist(pts[i - 1].pos, pts[i].pos);
    return t;
}

PolygonalArc to_arc(const std::vector<PolyPoint>& pts) {
    std::vector<Point> v;
    for (const auto& pp : pts) {
        if (v.empty() || dist(v.back(), pp.pos) > 0.0) v.push_back(pp.pos);
    }
    if (v.size() < 2) throw std::runtime_error("degenerate polysegment");
    return PolygonalArc::from_vertices(v);
}

struct Witness {
    Point pos;      // final position (shifted candidates sit on the outer line)
    double param;   // parameter in the polysegment ordering
    Point arc_pos;  // original arc position of the chosen vertex
    double arc_param{0.0};
    bool shifted{false};
};

std::optional<Witness> max_dist_vertex(const PolygonalArc& a, double lo, double hi,
                                       const Point& anchor) {
    std::optional<Witness> best;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double t = a.param(i);
        if (t < lo || t > hi) continue;
        const double d = dist(a.vertex(i), anchor);
        if (!best || d > dist(best->pos, anchor))
            best = Witness{a.vertex(i), t, a.vertex(i), t, false};
    }
    return best;
}

struct WitnessQuery {
    const PolygonalArc& arc;
    Point far_anchor;    // distances are measured to this apex
    double outer_param;  // parameter of the outer contact (A or F/D)
    Point outer_point;
    Vec2 shift_dir;            // along the outer support line, away from the hull
    double range_lo, range_hi; // full designated range including the tail
};

// Witness with the endpoint-shift fallback: a maximizer beyond the outer
// contact is moved onto the outer support line at equal distance from it.
std::optional<Witness> pick_witness(const WitnessQuery& q, bool prefix_side) {
    const double in_lo = prefix_side ? q.outer_param : q.range_lo;
    const double in_hi = prefix_side ? q.range_hi : q.outer_param;
    const auto in_range = max_dist_vertex(q.arc, in_lo, in_hi, q.far_anchor);
    const auto tail = prefix_side ? max_dist_vertex(q.arc, q.range_lo, q.outer_param, q.far_anchor)
                                  : max_dist_vertex(q.arc, q.outer_param, q.range_hi, q.far_anchor);

    const double d_in = in_range ? dist(in_range->pos, q.far_anchor) : -1.0;
    const double d_tail = tail ? dist(tail->pos, q.far_anchor) : -1.0;

    if (d_tail > d_in && tail) {
        const Point shifted = q.outer_point + q.shift_dir * dist(tail->pos, q.outer_point);
        if (dist(shifted, q.far_anchor) > 1.0)
            return Witness{shifted, q.outer_param, tail->arc_pos, tail->arc_param, true};
    }
    if (d_in > 1.0) return in_range;
    return std::nullopt;
}

// Reverse a certificate pair for the alpha >= beta normalization.
CertificatePair reverse_pair(const CertificatePair& pair, double total_len) {
    auto rev = [&](const WedgeCertificate& c) {
        WedgeCertificate r = c;
        r.contacts = {
            WedgeContact{total_len - c.contacts[2].param, c.contacts[2].point, c.contacts[2].side},
            WedgeContact{total_len - c.contacts[1].param, c.contacts[1].point, c.contacts[1].side},
            WedgeContact{total_len - c.contacts[0].param, c.contacts[0].point, c.contacts[0].side}};
        return r;
    };
    CertificatePair out;
    out.first = rev(pair.second);
    out.second = rev(pair.first);
    out.apex_first = pair.apex_second;
    out.apex_second = pair.apex_first;
    return out;
}

}  // namespace

double lemma2_bound(const SectorConfig& cfg, int part) {
    if (part < 1 || part > 4) fail("part must be 1, 2, 3 or 4");
    if (!(cfg.radius > 0.0)) fail("radius must be positive");
    const double theta = cfg.theta();
    if (!(theta > 0.0)) fail("rays must span a positive angle");
    const Ray ray_a{cfg.apex, cfg.dir_a};
    const Ray ray_b{cfg.apex, cfg.dir_b};
    if (!on_ray(ray_a, cfg.p)) fail("P must lie on ray VA");
    if (!on_ray(ray_b, cfg.q)) fail("Q must lie on ray VB");

    const double chord = chord_length(cfg.radius, theta);
    const double aa_prime = cfg.radius * std::sin(theta);

    switch (part) {
        case 1: {
            if (theta >= kPi / 2.0) fail("part 1 requires theta < 90 degrees");
            if (!(dist(cfg.p, cfg.apex) > cfg.radius))
                fail("part 1: P must lie outside the sector");
            return aa_prime;
        }
        case 2: {
            if (theta >= kPi) fail("part 2 requires theta < 180 degrees");
            const double dp = dist(cfg.p, cfg.apex), dq = dist(cfg.q, cfg.apex);
            const bool p_out = dp > cfg.radius, q_out = dq > cfg.radius;
            const bool p_on = std::fabs(dp - cfg.radius) <= kLineTol;
            const bool q_on = std::fabs(dq - cfg.radius) <= kLineTol;
            if (!((p_out && (q_out || q_on)) || (q_out && (p_out || p_on))))
                fail("part 2: P and Q must lie outside the sector (one may sit on the arc)");
            return chord;
        }
        case 3: {
            if (theta >= kPi / 2.0) fail("part 3 requires theta < 90 degrees");
            if (!cfg.x) fail("part 3: witness X required");
            if (!in_wedge(cfg, *cfg.x)) fail("part 3: X must lie in the wedge");
            if (!(dist(*cfg.x, cfg.apex) > cfg.radius))
                fail("part 3: X must lie outside the sector");
            const Vec2 bis = bisector_of(cfg);
            const Vec2 vx = *cfg.x - cfg.apex;
            if (std::fabs(bis.cross(vx)) <= kLineTol * std::max(1.0, vx.norm())) return chord;
            return aa_prime;
        }
        case 4: {
            if (theta >= kPi) fail("part 4 requires theta < 180 degrees");
            if (!cfg.x || !cfg.y) fail("part 4: witnesses X and Y required");
            for (const Point* w : {&*cfg.x, &*cfg.y}) {
                if (!in_wedge(cfg, *w)) fail("part 4: witnesses must lie in the wedge");
                if (!(dist(*w, cfg.apex) > cfg.radius))
                    fail("part 4: witnesses must lie outside the sector");
            }
            const Vec2 bis = bisector_of(cfg);
            const double sx = bis.cross(*cfg.x - cfg.apex);
            const double sy = bis.cross(*cfg.y - cfg.apex);
            if (!(sx * sy < 0.0))
                fail("part 4: witnesses must lie on opposite sides of the bisector");
            return chord;
        }
    }
    fail("unreachable");
}

bool sine_superadditive(double alpha, double beta) {
    if (!(alpha > 0.0) || alpha >= kPi / 2.0 || !(beta > 0.0) || beta >= kPi / 2.0)
        throw std::invalid_argument("angles must lie in (0, 90 degrees)");
    return std::sin(alpha) + std::sin(beta) > std::sin(alpha + beta);
}

ClassifyResult classify_case(const CertificatePair& pair) {
    if (pair.first.is_apex_kind() || pair.second.is_apex_kind())
        return {std::nullopt, "classification needs two 3-contact certificates"};
    if (pair.first.contacts.size() != 3 || pair.second.contacts.size() != 3)
        return {std::nullopt, "malformed certificate"};

    WedgeCertificate f = pair.first, s = pair.second;
    if (cert_key(s) < cert_key(f)) std::swap(f, s);

    const SplitContacts cf = split(f), cs = split(s);

    // Case 1: the two pairs share the outer support line.
    if (same_line(cf.outer_ray, cs.outer_ray)) {
        if (same_line(cf.middle_ray, cs.middle_ray) &&
            std::fabs(cf.middle.param - cs.middle.param) <= 1e-12)
            return {std::nullopt, "certificates are identical"};
        if (std::fabs(cf.outer_lo.param - cs.outer_lo.param) > 1e-9 ||
            std::fabs(cf.outer_hi.param - cs.outer_hi.param) > 1e-9)
            return {std::nullopt, "shared line with mismatched outer contacts"};
        const WedgeCertificate* b_cert = &f;
        const WedgeCertificate* c_cert = &s;
        const SplitContacts* b_split = &cf;
        const SplitContacts* c_split = &cs;
        if (b_split->middle.param > c_split->middle.param) {
            std::swap(b_cert, c_cert);
            std::swap(b_split, c_split);
        }
        ContactLabeling lab;
        lab.case_label = 1;
        lab.points = {
            LabeledContact{'A', b_split->outer_lo.param, b_split->outer_lo.point, 0},
            LabeledContact{'B', b_split->middle.param, b_split->middle.point, 1},
            LabeledContact{'C', c_split->middle.param, c_split->middle.point, 3},
            LabeledContact{'D', b_split->outer_hi.param, b_split->outer_hi.point, 0},
        };
        lab.apex_u = b_cert->apex();
        lab.apex_v = c_cert->apex();
        return {lab, {}};
    }
    if (same_line(cf.outer_ray, cs.middle_ray) || same_line(cf.middle_ray, cs.outer_ray) ||
        same_line(cf.middle_ray, cs.middle_ray))
        return {std::nullopt, "unsupported line coincidence"};

    // Remaining cases: merge the six contacts and read the ownership pattern.
    struct Tagged {
        const WedgeContact* c;
        int owner;
        int line_id;
    };
    std::vector<Tagged> all;
    auto add = [&all](const SplitContacts& sc, int owner) {
        const int outer = owner == 0 ? 0 : 2;
        const int middle = owner == 0 ? 1 : 3;
        all.push_back({&sc.outer_lo, owner, outer});
        all.push_back({&sc.middle, owner, middle});
        all.push_back({&sc.outer_hi, owner, outer});
    };
    add(cf, 0);
    add(cs, 1);
    std::stable_sort(all.begin(), all.end(),
                     [](const Tagged& a, const Tagged& b) { return a.c->param < b.c->param; });
    std::string pattern;
    for (const auto& t : all) pattern += static_cast<char>('1' + t.owner);

    int case_label = 0;
    if (pattern == "112122") {
        case_label = 2;
    } else if (pattern == "111222") {
        // Cases 3 and 4 are told apart by the sides of line UV carrying C and D.
        const Point u = f.apex(), v = s.apex();
        const Vec2 duv = v - u;
        if (duv.norm() < 1e-12) return {std::nullopt, "coincident wedge apexes"};
        const double sc3 = duv.cross(all[2].c->point - u);
        const double sd3 = duv.cross(all[3].c->point - u);
        const double scale = std::max(1.0, duv.norm());
        if (std::fabs(sc3) <= kLineTol * scale || std::fabs(sd3) <= kLineTol * scale)
            case_label = 3;  // CD degenerates onto the UV line
        else
            case_label = (sc3 * sd3 > 0.0) ? 3 : 4;
    } else {
        return {std::nullopt, "contact pattern matches no case: " + pattern};
    }

    ContactLabeling lab;
    lab.case_label = case_label;
    char next = 'A';
    for (const auto& t : all)
        lab.points.push_back(LabeledContact{next++, t.c->param, t.c->point, t.line_id});
    lab.apex_u = f.apex();
    lab.apex_v = s.apex();
    return {lab, {}};
}

namespace {

UnfoldOutcome unfold_impl(const PolygonalArc& a, const CertificatePair& pair,
                          const ContactLabeling& lab, int depth) {
    auto find_label = [&lab](char c) -> const LabeledContact& {
        for (const auto& p : lab.points)
            if (p.label == c) return p;
        throw std::logic_error("missing contact label");
    };

    const Point u = lab.apex_u, v = lab.apex_v;
    const double len = a.length();

    if (std::fabs(pair.first.theta - kPi / 6.0) > 1e-9 ||
        std::fabs(pair.second.theta - kPi / 6.0) > 1e-9)
        return {std::nullopt, "case analysis requires 30 degree wedges"};

    const bool case1 = lab.case_label == 1;
    const LabeledContact& A = find_label('A');
    const LabeledContact& B = find_label('B');
    const LabeledContact& C = find_label('C');
    const LabeledContact& D = find_label('D');
    const LabeledContact& last = case1 ? D : find_label('F');
    const LabeledContact& second_last = case1 ? C : find_label('E');

    // alpha >= beta normalization for cases 2 and 4: swap the pair roles by
    // reversing the arc orientation instead of moving geometry.
    if (lab.case_label == 2 || lab.case_label == 4) {
        const double alpha = angle_between(A.point - v, u - v);
        const double beta = angle_between(last.point - u, v - u);
        if (alpha + 1e-12 < beta) {
            if (depth > 0) return {std::nullopt, "normalization did not converge"};
            const PolygonalArc ra = a.reversed();
            const CertificatePair rp = reverse_pair(pair, len);
            const ClassifyResult rc = classify_case(rp);
            if (!rc.labeling) return {std::nullopt, "reversed pair failed to classify"};
            if (rc.labeling->case_label != lab.case_label)
                return {std::nullopt, "reversed pair changed case"};
            UnfoldOutcome out = unfold_impl(ra, rp, *rc.labeling, depth + 1);
            if (out.certificate) out.certificate->arc_reversed = true;
            return out;
        }
    }

    // Witness selection on the designated subarcs.
    const LabeledContact& outer_mate_x = case1 ? D : (lab.case_label == 2 ? D : C);
    const LabeledContact& outer_mate_y =
        case1 ? A : find_label(lab.case_label == 2 ? 'C' : 'D');

    Vec2 shift_x = A.point - outer_mate_x.point;
    Vec2 shift_y = last.point - outer_mate_y.point;
    if (shift_x.norm() < 1e-12 || shift_y.norm() < 1e-12)
        return {std::nullopt, "degenerate outer support line"};
    shift_x = shift_x.normalized();
    shift_y = shift_y.normalized();

    const auto wx =
        pick_witness(WitnessQuery{a, v, A.param, A.point, shift_x, 0.0, B.param}, true);
    if (!wx) return {std::nullopt, "witness X: no subarc point beyond distance 1 of V"};
    const auto wy = pick_witness(
        WitnessQuery{a, u, last.param, last.point, shift_y, second_last.param, len}, false);
    if (!wy) return {std::nullopt, "witness Y: no subarc point beyond distance 1 of U"};

    // Comparison polysegment, in parametric order. A shifted witness replaces
    // the outer contact it merges with. `reference` is the pre-shift list used
    // for the length comparison against the arc.
    std::vector<PolyPoint> pts;
    std::vector<PolyPoint> reference;
    if (wx->shifted) {
        pts.push_back({A.param, wx->pos, 'X'});
        reference.push_back({wx->arc_param, wx->arc_pos, 'X'});
        reference.push_back({A.param, A.point, 'A'});
    } else {
        pts.push_back({A.param, A.point, 'A'});
        pts.push_back({wx->param, wx->pos, 'X'});
        reference.push_back({A.param, A.point, 'A'});
        reference.push_back({wx->param, wx->pos, 'X'});
    }
    auto push_contact = [&](const LabeledContact& lc) {
        pts.push_back({lc.param, lc.point, lc.label});
        reference.push_back({lc.param, lc.point, lc.label});
    };
    push_contact(B);
    push_contact(C);
    if (!case1) {
        push_contact(D);
        push_contact(find_label('E'));
    }
    if (wy->shifted) {
        pts.push_back({last.param, wy->pos, 'Y'});
        reference.push_back({last.param, last.point, 'F'});
        reference.push_back({wy->arc_param, wy->arc_pos, 'Y'});
    } else {
        pts.push_back({wy->param, wy->pos, 'Y'});
        pts.push_back({last.param, last.point, 'F'});
        reference.push_back({wy->param, wy->pos, 'Y'});
        reference.push_back({last.param, last.point, 'F'});
    }
    std::stable_sort(pts.begin(), pts.end(),
                     [](const PolyPoint& x, const PolyPoint& y) { return x.param < y.param; });

    const std::vector<PolyPoint> before = pts;
    const double reference_length = poly_length(reference);

    // Reflection transcript.
    const double inf = std::numeric_limits<double>::infinity();
    std::vector<Flip> flips;
    std::vector<PolyPoint> cur = pts;
    Point apex_t;
    double bound_angle = kPi / 3.0;

    auto img_of = [&cur](char label) -> Point {
        for (const auto& pp : cur)
            if (pp.label == label) return pp.pos;
        throw std::logic_error("label image missing");
    };

    if (case1) {
        const Flip f1{Line::through(u, B.point), -inf, B.param};
        apply_flip(cur, f1);
        flips.push_back(f1);
        const Flip f2{Line::through(v, C.point), C.param, inf};
        apply_flip(cur, f2);
        flips.push_back(f2);
        const Point v_img = reflect(v, f1.mirror);
        const Point u_img = reflect(u, f2.mirror);
        if (dist(v_img, u_img) > kLineTol) return {std::nullopt, "case 1 apex images disagree"};
        apex_t = v_img;
        bound_angle = kPi / 3.0;
    } else if (lab.case_label == 2 || lab.case_label == 4) {
        const char pivot = (lab.case_label == 2) ? 'D' : 'C';
        const double pivot_param = (lab.case_label == 2) ? D.param : C.param;
        const Flip f1{Line::through(u, B.point), B.param, inf};
        apply_flip(cur, f1);
        flips.push_back(f1);
        const Flip f2{Line::through(u, img_of(pivot)), pivot_param, inf};
        if (std::fabs(line_angle(f1.mirror.dir, f2.mirror.dir) - kPi / 6.0) > 1e-9)
            return {std::nullopt, "inner mirrors are not 30 degrees apart"};
        apply_flip(cur, f2);
        flips.push_back(f2);
        const Point v_img = reflect(reflect(v, f1.mirror), f2.mirror);  // 60-degree turn of V
        const Flip f3{Line::through(v_img, img_of('E')), second_last.param, inf};
        apply_flip(cur, f3);
        flips.push_back(f3);
        apex_t = v;
        const double alpha = angle_between(A.point - v, u - v);
        const double beta = angle_between(last.point - u, v - u);
        bound_angle = kPi / 3.0 + alpha - beta;
    } else {  // case 3
        const Flip f1{Line::through(u, A.point), A.param, C.param};
        apply_flip(cur, f1);
        flips.push_back(f1);
        const Flip f2{Line::through(u, img_of('B')), -inf, B.param};
        if (std::fabs(line_angle(f1.mirror.dir, f2.mirror.dir) - kPi / 6.0) > 1e-9)
            return {std::nullopt, "inner mirrors are not 30 degrees apart"};
        apply_flip(cur, f2);
        flips.push_back(f2);
        const Flip f3{Line::through(v, last.point), D.param, last.param};
        apply_flip(cur, f3);
        flips.push_back(f3);
        const Flip f4{Line::through(v, img_of('E')), second_last.param, inf};
        apply_flip(cur, f4);
        flips.push_back(f4);
        const Point v_img = reflect(reflect(v, f1.mirror), f2.mirror);
        const Point u_img = reflect(reflect(u, f3.mirror), f4.mirror);
        if (dist(v_img, u_img) > kLineTol) return {std::nullopt, "case 3 apex images disagree"};
        apex_t = v_img;
        bound_angle = 0.0;  // set from the measured terminal angle below
    }

    Point wx_img{}, wy_img{};
    for (const auto& pp : cur) {
        if (pp.label == 'X') wx_img = pp.pos;
        if (pp.label == 'Y') wy_img = pp.pos;
    }

    const Point e1 = cur.front().pos, e2 = cur.back().pos;
    const Vec2 va = e1 - apex_t, vb = e2 - apex_t;
    if (va.norm() < 1e-12 || vb.norm() < 1e-12)
        return {std::nullopt, "unfolded endpoint at the terminal apex"};
    const double theta_t = angle_between(va, vb);
    if (lab.case_label == 3) bound_angle = theta_t;

    // --- validation of the terminal configuration ---
    const double len_before = poly_length(before);
    const double len_after = poly_length(cur);
    if (std::fabs(len_before - len_after) > kIsoTol * std::max(1.0, len_before))
        return {std::nullopt, "unfolding is not an isometry"};
    if (reference_length > a.length() + kIsoTol)
        return {std::nullopt, "polysegment exceeds arc length"};
    if (len_before > reference_length + kIsoTol)
        return {std::nullopt, "shifted polysegment exceeds the unshifted one"};

    const double r_used = std::min(dist(wx_img, apex_t), dist(wy_img, apex_t));
    if (!(r_used > 1.0)) return {std::nullopt, "witness condition failed"};

    if (theta_t < kPi / 3.0 - 1e-10 || theta_t >= kPi - 1e-12)
        return {std::nullopt, "terminal sector angle out of range"};
    if (std::fabs(theta_t - bound_angle) > 1e-9)
        return {std::nullopt, "terminal sector angle mismatch"};

    Vec2 bis = va.normalized() + vb.normalized();
    if (bis.norm() < 1e-12) return {std::nullopt, "terminal sector bisector degenerate"};
    bis = bis.normalized();
    const double sx = bis.cross(wx_img - apex_t);
    const double sy = bis.cross(wy_img - apex_t);
    if (!(sx * sy < 0.0))
        return {std::nullopt, "witnesses not on opposite sides of the bisector"};

    const double bound = chord_length(r_used, bound_angle);
    if (bound > dist(e1, e2) + kIsoTol)
        return {std::nullopt, "bound exceeds the unfolded endpoint distance"};
    if (bound > len_before + kIsoTol)
        return {std::nullopt, "bound exceeds the polysegment length"};

    std::vector<ReflectionStep> transcript;
    for (const auto& f : flips) transcript.push_back(ReflectionStep{f.mirror, f.lo, f.hi});
    LengthCertificate cert{lab.case_label,
                           std::move(transcript),
                           to_arc(cur),
                           to_arc(before),
                           bound,
                           Sector::make(apex_t, bis, bound_angle, r_used),
                           false};
    return {std::move(cert), {}};
}

}  // namespace

UnfoldOutcome unfold(const PolygonalArc& a, const CertificatePair& pair,
                     const ContactLabeling& labeling) {
    return unfold_impl(a, pair, labeling, 0);
}

ReplayOutcome replay_contradiction(const PolygonalArc& a) {
    if (!a.is_simple()) throw std::invalid_argument("replay_contradiction: arc is not simple");
    const double theta = kPi / 6.0;
    CertificatePair pair = find_certificates(a, theta);
    if (pair.first.is_apex_kind() || pair.second.is_apex_kind())
        return {std::nullopt, "apex-touch placement available"};

    // A contact at a wedge apex means an arc point can sit at the sector
    // vertex, which is a fit, not a case input.
    for (const auto* cert : {&pair.first, &pair.second}) {
        for (const auto& ct : cert->contacts) {
            if (dist(ct.point, pair.apex_first) <= kLineTol ||
                dist(ct.point, pair.apex_second) <= kLineTol)
                return {std::nullopt, "contact touches a wedge apex (fit found)"};
        }
    }

    const ClassifyResult cls = classify_case(pair);
    if (!cls.labeling) return {std::nullopt, "classification failed: " + cls.diagnostic};

    UnfoldOutcome out = unfold(a, pair, *cls.labeling);
    if (!out.certificate) return {std::nullopt, out.reason};
    if (!(out.certificate->bound - kBoundSlack > 1.0))
        return {std::nullopt, "bound does not exceed 1 beyond the slack"};
    return {out.certificate, {}};
}

}  // namespace sectorcover
