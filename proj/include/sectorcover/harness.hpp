#pragma once
// Arc-family generators, the classical baseline sectors, and Monte Carlo
// fitting campaigns with deterministic aggregation.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "sectorcover/fitter.hpp"
#include "sectorcover/geometry.hpp"

namespace sectorcover {

enum class FamilyKind {
    segment,
    random_walk,
    circular_polyline,
    l_bracket,
    z_shape,
    spiral,
    zigzag,
    convex_arc,
};

const char* to_string(FamilyKind k);
FamilyKind family_from_string(const std::string& name);  // throws on unknown names

struct ArcFamily {
    FamilyKind kind{FamilyKind::random_walk};
    std::uint64_t seed{0};
    int vertices{12};       // target vertex count where the family is free-form
    double shape{1.0};      // family-specific: turn range, leg ratio, winding...
};

/// Deterministic, simple, unit-length arc for the family. Self-intersecting
/// draws are rejected and retried with a narrowing turn distribution (at most
/// 100 retries). Throws std::invalid_argument for infeasible parameters.
PolygonalArc generate(const ArcFamily& f);

enum class BaselineRule { half_csc_half, csc_two_theta };

/// Classical sector covers: rule 1 gives radius csc(theta/2)/2 for theta in
/// (0, 90] degrees; rule 2 gives radius csc(2 theta).
Sector baseline_sector(double theta, BaselineRule rule);

struct CampaignConfig {
    std::vector<ArcFamily> mix;  // cycled per trial; per-trial seeds derive from `seed`
    int trials{1000};
    std::uint64_t seed{0};
    Sector target{Point{0, 0}, Vec2{1, 0}, kPi / 6.0, 1.0};
    int threads{0};  // 0: default_thread_count()
};

struct HistogramBucket {
    double lo, hi;
    std::size_t count;
};

struct CampaignReport {
    std::size_t trials{0};
    std::size_t successes{0};
    std::size_t failures{0};
    double max_violation{0.0};
    std::vector<HistogramBucket> histogram;  // log buckets, 1e-12 to 1e0
    std::map<std::string, std::size_t> successes_by_kind;
    std::vector<std::size_t> failed_trials;  // trial indices
    double wall_ms{0.0};
    double mean_trial_ms{0.0};

    bool all_fit() const { return failures == 0 && trials > 0; }
};

/// Runs fit for `trials` generated arcs against the target sector. Trials are
/// independent and may run on any number of threads; everything except the
/// timing fields is a deterministic function of the config.
CampaignReport run_campaign(const CampaignConfig& cfg);

}  // namespace sectorcover
