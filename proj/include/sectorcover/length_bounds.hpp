#pragma once
// Chord-comparison length bounds and the reflection-unfolding case analysis.
//
// The bounds follow one pattern: an arc crossing a sector with endpoints on
// the bounding rays, forced outside the radius by one or two witness points,
// is longer than a chord of the sector. The case analysis replays the exact
// reflection sequences that straighten a 30-degree support-wedge pair into a
// single sector of angle at least 60 degrees; each emitted certificate is
// re-validated numerically before it is returned.
//
// "Outside the sector" for the witness parts means beyond the radius while
// inside the wedge; the arcs these bounds apply to always live inside their
// support wedges.

#include <optional>
#include <string>
#include <vector>

#include "sectorcover/geometry.hpp"
#include "sectorcover/support_lines.hpp"

namespace sectorcover {

/// Sector-and-arc data for the chord-comparison bounds. P sits on ray (apex,
/// dir_a), Q on ray (apex, dir_b); X and Y are optional witness points.
struct SectorConfig {
    Point apex;
    Vec2 dir_a, dir_b;  // unit ray directions, wedge angle in (0, pi)
    double radius{1.0};
    Point p, q;
    std::optional<Point> x, y;

    double theta() const { return angle_between(dir_a, dir_b); }
};

/// Guaranteed lower bound for the requested part (1-4):
///   1: |PQ| > r sin(theta)        (P beyond the radius, theta < 90 deg)
///   2: |PQ| > 2 r sin(theta/2)    (P and Q beyond, theta < 180 deg)
///   3: len   > r sin(theta)       (witness X beyond, theta < 90 deg);
///      X on the bisector upgrades the bound to the chord 2 r sin(theta/2)
///   4: len   > 2 r sin(theta/2)   (X, Y beyond, opposite sides of the
///      bisector, theta < 180 deg)
/// A' is realized as the orthogonal projection of A onto the other ray, so
/// |AA'| = r sin(theta). Precondition violations throw std::invalid_argument
/// naming the failed clause.
double lemma2_bound(const SectorConfig& cfg, int part);

/// sin(a) + sin(b) > sin(a + b) for a, b in (0, 90 deg). Throws outside the
/// range; the returned comparison backs lemma2_bound.
bool sine_superadditive(double alpha, double beta);

struct LabeledContact {
    char label;    // 'A'..'F'
    double param;
    Point point;
    int line_id;   // 0: pair1 outer, 1: pair1 middle, 2: pair2 outer, 3: pair2 middle
};

/// Outcome of matching an interlacing certificate pair against the four
/// unfolding cases.
struct ContactLabeling {
    int case_label{0};  // 1..4
    std::vector<LabeledContact> points;  // parametric order; 4 entries for case 1, else 6
    Point apex_u, apex_v;  // U drives the first reflections, V hosts the far witness
    bool swapped{false};   // pair roles swapped to normalize alpha >= beta
};

struct ClassifyResult {
    std::optional<ContactLabeling> labeling;
    std::string diagnostic;  // set when no case matches
};

/// Match an interlacing 3-contact pair against Cases 1-4. The pair must come
/// from find_certificates at the same wedge angle.
ClassifyResult classify_case(const CertificatePair& pair);

/// One reflection of the unfolding transcript, applied to the polysegment
/// points with parameters inside (lo, hi).
struct ReflectionStep {
    Line mirror;
    double lo, hi;  // open parameter interval the reflection applies to
};

struct LengthCertificate {
    int case_label{0};
    std::vector<ReflectionStep> transcript;
    PolygonalArc unfolded;          // image of the comparison polysegment
    PolygonalArc polysegment;       // the comparison polysegment itself
    double bound{0.0};              // proven lower bound on the arc length
    Sector sector_used;             // terminal sector whose chord gives the bound
    bool arc_reversed{false};       // transcript refers to the reversed arc
};

struct UnfoldOutcome {
    std::optional<LengthCertificate> certificate;
    std::string reason;  // why no certificate was produced
};

/// Replays the reflection sequence of the matched case. Returns no
/// certificate when the witness conditions (XV > 1 and YU > 1) cannot be
/// met or any validation of the unfolded configuration fails.
UnfoldOutcome unfold(const PolygonalArc& a, const CertificatePair& pair,
                     const ContactLabeling& labeling);

struct ReplayOutcome {
    std::optional<LengthCertificate> certificate;
    std::string reason;  // pipeline stage that stopped a certificate
};

/// Full contradiction pipeline at 30 degrees: certificates, classification,
/// unfolding. Arcs of length <= 1 always come back without a certificate.
ReplayOutcome replay_contradiction(const PolygonalArc& a);

}  // namespace sectorcover
