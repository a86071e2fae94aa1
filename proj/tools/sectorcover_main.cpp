// Command-line front end: fit arcs into sectors, replay the chord-comparison
// machinery, render figures, and run Monte Carlo campaigns.
//
// Exit codes: 0 success, 1 analytic failure (no fit / computation refused),
// 2 input error.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "sectorcover/arc_io.hpp"
#include "sectorcover/fitter.hpp"
#include "sectorcover/harness.hpp"
#include "sectorcover/length_bounds.hpp"
#include "sectorcover/svg.hpp"

namespace {

using namespace sectorcover;

constexpr int kExitOk = 0;
constexpr int kExitAnalytic = 1;
constexpr int kExitInput = 2;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot write " + path);
    out << text;
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty())
        std::cout << text;
    else
        write_file(out_path, text);
}

struct SectorFlags {
    double angle_deg{30.0};
    double radius{1.0};

    Sector sector() const {
        return Sector::make({0, 0}, {1, 0}, deg_to_rad(angle_deg), radius);
    }
    void attach(CLI::App* cmd) {
        cmd->add_option("--angle-deg", angle_deg, "Sector opening in degrees")
            ->check(CLI::Range(1e-6, 179.999999));
        cmd->add_option("--radius", radius, "Sector radius")->check(CLI::PositiveNumber);
    }
};

int cmd_fit(const std::string& arc_path, const SectorFlags& flags, const std::string& out_path) {
    const ArcDocument doc = parse_arc_document(read_file(arc_path));
    const Sector s = flags.sector();
    const FitResult r = fit(doc.arc, s);
    emit(fit_result_json(r, s), out_path);
    return r.success ? kExitOk : kExitAnalytic;
}

int cmd_replay(const std::string& arc_path, const std::string& out_path) {
    const ArcDocument doc = parse_arc_document(read_file(arc_path));
    if (!doc.arc.is_simple()) throw std::invalid_argument("replay needs a simple arc");
    const ReplayOutcome outcome = replay_contradiction(doc.arc);
    emit(replay_outcome_json(outcome), out_path);
    return kExitOk;
}

int cmd_render(const std::string& arc_path, const std::string& mode, const SectorFlags& flags,
               const std::string& out_path) {
    const ArcDocument doc = parse_arc_document(read_file(arc_path));
    std::string svg;
    if (mode == "placement") {
        const Sector s = flags.sector();
        const FitResult r = fit(doc.arc, s);
        if (!r.success) {
            std::cerr << "no placement found (violation " << r.best.violation << ")\n";
            return kExitAnalytic;
        }
        svg = render_placement(doc.arc, s, r.best.motion);
    } else if (mode == "certificates") {
        if (!doc.arc.is_simple()) throw std::invalid_argument("certificates need a simple arc");
        const CertificatePair pair = find_certificates(doc.arc, flags.sector().angle);
        svg = render_certificates(doc.arc, pair);
    } else if (mode == "unfolding") {
        if (!doc.arc.is_simple()) throw std::invalid_argument("unfolding needs a simple arc");
        const ReplayOutcome outcome = replay_contradiction(doc.arc);
        if (!outcome.certificate) {
            std::cerr << "no length certificate: " << outcome.reason << "\n";
            return kExitAnalytic;
        }
        svg = render_unfolding(doc.arc, *outcome.certificate);
    } else {
        throw std::invalid_argument("unknown render mode: " + mode);
    }
    emit(svg, out_path);
    return kExitOk;
}

int cmd_campaign(const std::string& config_path, const std::string& out_path) {
    const CampaignConfig cfg = parse_campaign_config(read_file(config_path));
    const CampaignReport rep = run_campaign(cfg);
    emit(campaign_report_json(rep, cfg), out_path);
    return rep.all_fit() ? kExitOk : kExitAnalytic;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"sector covers for unit arcs: fitting, length bounds, campaigns"};
    app.require_subcommand(1);

    std::string arc_path, out_path, mode = "placement", config_path;
    SectorFlags flags;

    auto* fit_cmd = app.add_subcommand("fit", "Fit an arc into a sector");
    fit_cmd->add_option("arc", arc_path, "Arc document (JSON)")->required();
    flags.attach(fit_cmd);
    fit_cmd->add_option("-o,--out", out_path, "Write the JSON result here");

    auto* replay_cmd = app.add_subcommand("replay", "Replay the length-bound machinery");
    replay_cmd->add_option("arc", arc_path, "Arc document (JSON)")->required();
    replay_cmd->add_option("-o,--out", out_path, "Write the JSON result here");

    auto* render_cmd = app.add_subcommand("render", "Render an SVG figure");
    render_cmd->add_option("arc", arc_path, "Arc document (JSON)")->required();
    render_cmd->add_option("--mode", mode, "placement | certificates | unfolding")
        ->check(CLI::IsMember({"placement", "certificates", "unfolding"}));
    flags.attach(render_cmd);
    render_cmd->add_option("-o,--out", out_path, "Write the SVG here");

    auto* campaign_cmd = app.add_subcommand("campaign", "Run a Monte Carlo fitting campaign");
    campaign_cmd->add_option("config", config_path, "Campaign config (JSON)")->required();
    campaign_cmd->add_option("-o,--out", out_path, "Write the JSON report here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInput;
    }

    try {
        if (fit_cmd->parsed()) return cmd_fit(arc_path, flags, out_path);
        if (replay_cmd->parsed()) return cmd_replay(arc_path, out_path);
        if (render_cmd->parsed()) return cmd_render(arc_path, mode, flags, out_path);
        if (campaign_cmd->parsed()) return cmd_campaign(config_path, out_path);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitAnalytic;
    }
    return kExitInput;
}
