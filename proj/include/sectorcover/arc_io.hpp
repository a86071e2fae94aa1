#pragma once
// JSON document formats: arc files, campaign configs, fit/replay results and
// campaign reports. Vertices round-trip at full double precision.

#include <map>
#include <optional>
#include <string>

#include "sectorcover/fitter.hpp"
#include "sectorcover/geometry.hpp"
#include "sectorcover/harness.hpp"
#include "sectorcover/length_bounds.hpp"

namespace sectorcover {

struct ArcDocument {
    int version{1};
    PolygonalArc arc;
    std::map<std::string, std::string> metadata;
};

/// Parse `{"version":1,"vertices":[[x,y],...],"metadata":{...}}`. Throws
/// std::invalid_argument on malformed documents.
ArcDocument parse_arc_document(const std::string& text);
std::string serialize_arc_document(const ArcDocument& doc);

/// Campaign config: `{"families":[...], "trials":n, "seed":s, "sector":{...}}`.
/// Families are names or `{"kind":..., "vertices":..., "shape":...}` records.
CampaignConfig parse_campaign_config(const std::string& text);

std::string fit_result_json(const FitResult& r, const Sector& s);
std::string replay_outcome_json(const ReplayOutcome& r);
std::string campaign_report_json(const CampaignReport& r, const CampaignConfig& cfg);
/// Report with the timing fields stripped; identical seeds give identical text.
std::string campaign_report_canonical_json(const CampaignReport& r, const CampaignConfig& cfg);

}  // namespace sectorcover
