#include "sectorcover/arc_io.hpp"

#include <json.hpp>

namespace sectorcover {

using nlohmann::json;

namespace {

json sector_json(const Sector& s) {
    return json{{"apex", {s.apex.x, s.apex.y}},
                {"axis", {s.axis.x, s.axis.y}},
                {"angle_deg", rad_to_deg(s.angle)},
                {"radius", s.radius}};
}

json motion_json(const RigidMotion& m) {
    return json{{"rotation", m.rotation},
                {"translation", {m.translation.x, m.translation.y}},
                {"reflect", m.reflect}};
}

Sector sector_from_json(const json& j) {
    Point apex{0, 0};
    Vec2 axis{1, 0};
    if (j.contains("apex")) apex = {j["apex"][0].get<double>(), j["apex"][1].get<double>()};
    if (j.contains("axis")) axis = {j["axis"][0].get<double>(), j["axis"][1].get<double>()};
    const double angle = deg_to_rad(j.value("angle_deg", 30.0));
    const double radius = j.value("radius", 1.0);
    return Sector::make(apex, axis, angle, radius);
}

json report_body(const CampaignReport& r, const CampaignConfig& cfg) {
    json j;
    j["trials"] = r.trials;
    j["successes"] = r.successes;
    j["failures"] = r.failures;
    j["success_rate"] = r.trials ? double(r.successes) / double(r.trials) : 0.0;
    j["max_violation"] = r.max_violation;
    j["seed"] = cfg.seed;
    j["sector"] = sector_json(cfg.target);
    json fams = json::array();
    for (const auto& f : cfg.mix)
        fams.push_back(json{{"kind", to_string(f.kind)},
                            {"vertices", f.vertices},
                            {"shape", f.shape}});
    j["families"] = fams;
    json hist = json::array();
    for (const auto& b : r.histogram) {
        if (b.count == 0) continue;
        json e;
        e["lo"] = std::isfinite(b.lo) ? json(b.lo) : json(nullptr);
        e["hi"] = std::isfinite(b.hi) ? json(b.hi) : json(nullptr);
        e["count"] = b.count;
        hist.push_back(e);
    }
    j["violation_histogram"] = hist;
    j["successes_by_kind"] = r.successes_by_kind;
    j["failed_trials"] = r.failed_trials;
    return j;
}

}  // namespace

ArcDocument parse_arc_document(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("arc document is not valid JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("vertices") || !j["vertices"].is_array())
        throw std::invalid_argument("arc document needs a \"vertices\" array");
    std::vector<Point> verts;
    for (const auto& v : j["vertices"]) {
        if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number())
            throw std::invalid_argument("each vertex must be a [x, y] number pair");
        verts.push_back({v[0].get<double>(), v[1].get<double>()});
    }
    std::map<std::string, std::string> meta;
    if (j.contains("metadata")) {
        for (const auto& [k, val] : j["metadata"].items())
            meta[k] = val.is_string() ? val.get<std::string>() : val.dump();
    }
    try {
        return ArcDocument{j.value("version", 1), PolygonalArc::from_vertices(std::move(verts)),
                           std::move(meta)};
    } catch (const std::invalid_argument& e) {
        throw std::invalid_argument(std::string("arc document invalid: ") + e.what());
    }
}

std::string serialize_arc_document(const ArcDocument& doc) {
    json j;
    j["version"] = doc.version;
    json verts = json::array();
    for (const auto& p : doc.arc.vertices()) verts.push_back(json::array({p.x, p.y}));
    j["vertices"] = verts;
    j["metadata"] = doc.metadata;
    return j.dump(2) + "\n";
}

CampaignConfig parse_campaign_config(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("config is not valid JSON: ") + e.what());
    }
    CampaignConfig cfg;
    cfg.trials = j.value("trials", 0);
    if (cfg.trials < 1) throw std::invalid_argument("config: trials must be >= 1");
    cfg.seed = j.value("seed", 0ull);
    if (j.contains("sector")) cfg.target = sector_from_json(j["sector"]);
    if (!j.contains("families") || !j["families"].is_array() || j["families"].empty())
        throw std::invalid_argument("config: families must be a non-empty array");
    for (const auto& f : j["families"]) {
        ArcFamily fam;
        if (f.is_string()) {
            fam.kind = family_from_string(f.get<std::string>());
        } else if (f.is_object()) {
            fam.kind = family_from_string(f.value("kind", "random-walk"));
            fam.vertices = f.value("vertices", 12);
            fam.shape = f.value("shape", 1.0);
        } else {
            throw std::invalid_argument("config: family entries are names or objects");
        }
        cfg.mix.push_back(fam);
    }
    if (j.contains("threads")) cfg.threads = j["threads"].get<int>();
    return cfg;
}

std::string fit_result_json(const FitResult& r, const Sector& s) {
    json j;
    j["success"] = r.success;
    j["violation"] = r.best.violation;
    j["motion"] = motion_json(r.best.motion);
    j["candidate_kind"] = to_string(r.best.kind);
    j["sector"] = sector_json(s);
    j["candidates_evaluated"] = r.candidates.size();
    if (r.perturbed_nonsimple) j["warning"] = "non-simple arc perturbed for certificates";
    if (!r.success) {
        j["replay"] = r.replay_reason;
        if (r.replay_bound) j["length_lower_bound"] = *r.replay_bound;
    }
    return j.dump(2) + "\n";
}

std::string replay_outcome_json(const ReplayOutcome& r) {
    json j;
    if (!r.certificate) {
        j["outcome"] = "no-certificate";
        j["reason"] = r.reason;
        return j.dump(2) + "\n";
    }
    const LengthCertificate& c = *r.certificate;
    j["outcome"] = "certificate";
    j["case"] = c.case_label;
    j["bound"] = c.bound;
    j["arc_reversed"] = c.arc_reversed;
    j["sector_used"] = sector_json(c.sector_used);
    json steps = json::array();
    for (const auto& st : c.transcript) {
        json e;
        e["mirror"] = {{"point", {st.mirror.anchor.x, st.mirror.anchor.y}},
                       {"dir", {st.mirror.dir.x, st.mirror.dir.y}}};
        e["lo"] = std::isfinite(st.lo) ? json(st.lo) : json(nullptr);
        e["hi"] = std::isfinite(st.hi) ? json(st.hi) : json(nullptr);
        steps.push_back(e);
    }
    j["transcript"] = steps;
    json unfolded = json::array();
    for (const auto& p : c.unfolded.vertices()) unfolded.push_back(json::array({p.x, p.y}));
    j["unfolded"] = unfolded;
    json poly = json::array();
    for (const auto& p : c.polysegment.vertices()) poly.push_back(json::array({p.x, p.y}));
    j["polysegment"] = poly;
    return j.dump(2) + "\n";
}

std::string campaign_report_json(const CampaignReport& r, const CampaignConfig& cfg) {
    json j = report_body(r, cfg);
    j["wall_ms"] = r.wall_ms;
    j["mean_trial_ms"] = r.mean_trial_ms;
    return j.dump(2) + "\n";
}

std::string campaign_report_canonical_json(const CampaignReport& r, const CampaignConfig& cfg) {
    return report_body(r, cfg).dump(2) + "\n";
}

}  // namespace sectorcover
