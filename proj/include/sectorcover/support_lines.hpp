#pragma once
// Support-line placement of a simple polygonal arc in a wedge of prescribed
// angle. For each end of the arc the result is either a vertex-at-apex
// certificate (the hull angle at that end fits the wedge) or a wedge whose
// two rays touch the arc at three alternating points t1 < t2 < t3, the middle
// one on the opposite ray from the outer two.
//
// The continuous support-line rotation is replaced by a finite event sweep:
// a ray carrying two distinct contact points of a simple arc contains a hull
// edge, so flush positions of hull edges enumerate every 3-contact wedge.

#include <optional>
#include <string>
#include <vector>

#include "sectorcover/geometry.hpp"

namespace sectorcover {

// Absolute tolerances; arcs are unit-scale by convention.
inline constexpr double kContactTol = 1e-9;
inline constexpr double kWedgeAngleTol = 1e-10;

struct WedgeContact {
    double param{0.0};  // arclength parameter
    Point point;
    int side{0};  // 0: on ray_u, 1: on ray_v
};

struct WedgeCertificate {
    Ray ray_u, ray_v;   // support rays; for theta > 0 they share their origin (the apex)
    double theta{0.0};  // wedge angle; 0 encodes parallel support lines
    std::vector<WedgeContact> contacts;     // empty or exactly 3, ordered by param
    std::optional<std::size_t> apex_corner; // hull-corner index for the vertex-at-apex kind

    bool is_apex_kind() const { return apex_corner.has_value(); }
    Point apex() const { return ray_u.origin; }

    /// Signed violation of the closed wedge (strip when theta == 0).
    double contains_violation(const Point& p) const;
};

struct CertificatePair {
    WedgeCertificate first;   // associated with the X1 end
    WedgeCertificate second;  // associated with the Xn end
    Point apex_first, apex_second;  // the intersection points U and V
};

/// Interior angle of the arc's convex hull at the given corner
/// (index into hull_corner_indices order). Degenerate hulls give 0.
double hull_angle_at(const PolygonalArc& a, std::size_t corner_index);

/// All distinct 3-contact wedges of angle theta, from the exhaustive sweep
/// over hull-edge flush events. Sorted by contact parameters.
std::vector<WedgeCertificate> enumerate_certificates(const PolygonalArc& a, double theta);

/// Lemma 1 certificate pair for both arc ends. theta in [0, pi); theta == 0
/// selects the parallel-support-line mode. Throws std::invalid_argument for
/// non-simple arcs or theta out of range.
CertificatePair find_certificates(const PolygonalArc& a, double theta);

/// Vertex-at-apex certificate for one end (0: X1 end, 1: Xn end), when the
/// hull angle there does not exceed theta.
std::optional<WedgeCertificate> apex_touch_certificate(const PolygonalArc& a, double theta,
                                                       int end);

struct VerifyResult {
    bool ok{false};
    std::string reason;  // empty when ok
};

/// Re-checks a certificate against the arc: wedge supports all points within
/// 1e-9, contacts sit on their labeled rays, ordering/alternation hold, and
/// the wedge angle matches theta within 1e-10.
VerifyResult verify_certificate(const PolygonalArc& a, const WedgeCertificate& c, double theta);

enum class Interlace { yes, no, not_applicable };

/// Whether the two 3-contact certificates weave in one of the admissible
/// orderings (shared-line pattern ABD/ACD, or the disjoint patterns ABD/CEF
/// and ABC/DEF). Pairs with an apex-touch member are not applicable.
Interlace interlace(const CertificatePair& pair);

}  // namespace sectorcover
