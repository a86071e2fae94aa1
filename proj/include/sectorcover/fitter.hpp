#pragma once
// Constructive placement of a simple polygonal arc into a circular sector.
//
// The candidate set mirrors the covering proof: a vertex-at-apex placement
// exists whenever some hull corner's angle fits the sector opening, and the
// two Lemma-1 support wedges aligned with the sector cover everything else
// for unit arcs. Chord seedings (both arc endpoints on the bounding rays)
// and a derivative-free pattern search handle general sectors.

#include <optional>
#include <string>
#include <vector>

#include "sectorcover/geometry.hpp"

namespace sectorcover {

enum class CandidateKind {
    apex_touch_first,
    apex_touch_last,
    apex_touch_middle,
    wedge_at_u,
    wedge_at_v,
    refined,
};

const char* to_string(CandidateKind k);

struct Placement {
    RigidMotion motion;
    double violation{0.0};
    CandidateKind kind{CandidateKind::refined};
};

/// Max signed sector violation over the placed arc. Each constraint is convex
/// along a segment, so the maximum over a segment sits at a vertex.
double placement_violation(const PolygonalArc& a, const Sector& s, const RigidMotion& m);

/// Candidate placements: apex-touch positions for every hull corner whose
/// hull angle fits the opening (both mirror images, rotation-sampled), the
/// Lemma-1 wedge alignments for both ends (two orientations each), and
/// endpoint-chord seedings. Violations are evaluated on the original arc.
/// Non-simple arcs are perturbed by at most 1e-9 for certificate computation;
/// `perturbed` reports that fallback.
std::vector<Placement> candidate_placements(const PolygonalArc& a, const Sector& s,
                                            bool* perturbed = nullptr);

/// Compass pattern search over rotation (about the sector apex) and
/// translation, shrinking from 1e-2 to 1e-12. Returns a placement never worse
/// than the input; inputs that already fit come back unchanged.
Placement refine(const PolygonalArc& a, const Sector& s, const Placement& p);

struct FitResult {
    bool success{false};
    Placement best;
    std::vector<Placement> candidates;  // evaluated candidates, best first
    bool perturbed_nonsimple{false};
    std::string replay_reason;          // failure diagnostics
    std::optional<double> replay_bound; // length lower bound when one exists
};

/// Best placement over all candidates after refinement; success means the
/// re-verified violation is at most 1e-9.
FitResult fit(const PolygonalArc& a, const Sector& s);

inline constexpr double kFitTol = 1e-9;

}  // namespace sectorcover
