#pragma once
// Deterministic SVG figures: fixed 1000-unit viewport, coordinates rounded to
// 3 decimals at emission time only.

#include <string>

#include "sectorcover/fitter.hpp"
#include "sectorcover/geometry.hpp"
#include "sectorcover/length_bounds.hpp"
#include "sectorcover/support_lines.hpp"

namespace sectorcover {

/// Sector outline with the placed arc inside.
std::string render_placement(const PolygonalArc& a, const Sector& s, const RigidMotion& motion);

/// Arc with its two support wedges and contact markers.
std::string render_certificates(const PolygonalArc& a, const CertificatePair& pair);

/// Original and unfolded polysegments with the mirror lines and the terminal
/// sector of a length certificate.
std::string render_unfolding(const PolygonalArc& a, const LengthCertificate& cert);

}  // namespace sectorcover
