#include "sectorcover/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <random>
#include <stdexcept>

#include "sectorcover/parallel.hpp"

namespace sectorcover {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

PolygonalArc normalize_unit(std::vector<Point> v) {
    auto arc = PolygonalArc::from_vertices(std::move(v));
    return arc.scaled(1.0 / arc.length());
}

PolygonalArc walk_family(std::mt19937_64& g, int n, double turn_range, bool monotone_turn) {
    if (n < 2) throw std::invalid_argument("generate: need at least 2 vertices");
    double range = turn_range;
    for (int attempt = 0; attempt < 100; ++attempt) {
        std::uniform_real_distribution<double> turn(-range, range);
        std::uniform_real_distribution<double> mono(0.1 * range, range);
        std::uniform_real_distribution<double> step(0.3, 1.0);
        std::uniform_real_distribution<double> head(0.0, 2.0 * kPi);
        std::vector<Point> v;
        double heading = head(g);
        Point p{0, 0};
        v.push_back(p);
        for (int i = 1; i < n; ++i) {
            if (i > 1) heading += monotone_turn ? mono(g) : turn(g);
            p = p + Vec2{std::cos(heading), std::sin(heading)} * step(g);
            v.push_back(p);
        }
        try {
            auto arc = PolygonalArc::from_vertices(v);
            if (arc.is_simple()) return normalize_unit(std::move(v));
        } catch (const std::invalid_argument&) {
        }
        range *= 0.9;  // narrow the step distribution and retry
    }
    throw std::runtime_error("generate: failed to draw a simple arc");
}

}  // namespace

const char* to_string(FamilyKind k) {
    switch (k) {
        case FamilyKind::segment: return "segment";
        case FamilyKind::random_walk: return "random-walk";
        case FamilyKind::circular_polyline: return "circular-polyline";
        case FamilyKind::l_bracket: return "L-bracket";
        case FamilyKind::z_shape: return "Z-shape";
        case FamilyKind::spiral: return "spiral";
        case FamilyKind::zigzag: return "zigzag";
        case FamilyKind::convex_arc: return "convex-arc";
    }
    return "unknown";
}

FamilyKind family_from_string(const std::string& name) {
    for (FamilyKind k :
         {FamilyKind::segment, FamilyKind::random_walk, FamilyKind::circular_polyline,
          FamilyKind::l_bracket, FamilyKind::z_shape, FamilyKind::spiral, FamilyKind::zigzag,
          FamilyKind::convex_arc}) {
        if (name == to_string(k)) return k;
    }
    throw std::invalid_argument("unknown arc family: " + name);
}

PolygonalArc generate(const ArcFamily& f) {
    if (f.vertices < 2) throw std::invalid_argument("generate: vertices must be >= 2");
    if (!(f.shape > 0.0) || !std::isfinite(f.shape))
        throw std::invalid_argument("generate: shape must be positive and finite");
    std::mt19937_64 g(splitmix64(f.seed));
    std::uniform_real_distribution<double> u01(0.0, 1.0);

    switch (f.kind) {
        case FamilyKind::segment:
            return PolygonalArc::from_vertices({{0, 0}, {1, 0}});

        case FamilyKind::random_walk:
            return walk_family(g, std::max(2, f.vertices), 2.2 * std::min(1.0, f.shape), false);

        case FamilyKind::circular_polyline: {
            const int n = std::max(3, f.vertices);
            const double sweep = std::clamp(f.shape, 0.05, 1.9) * kPi;  // total turning
            std::vector<Point> v;
            for (int i = 0; i < n; ++i) {
                const double t = sweep * i / (n - 1);
                v.push_back({std::cos(t), std::sin(t)});
            }
            return normalize_unit(std::move(v));
        }

        case FamilyKind::l_bracket: {
            const double ratio = std::clamp(f.shape, 0.1, 10.0);
            return normalize_unit({{0, 0}, {1, 0}, {1, ratio}});
        }

        case FamilyKind::z_shape: {
            const double r = std::clamp(f.shape, 0.1, 10.0);
            return normalize_unit({{0, 0}, {1, 0}, {1 - 0.6 * r, 0.45 * r}, {1.0, 0.45 * r + 0.7}});
        }

        case FamilyKind::spiral: {
            const int n = std::max(4, f.vertices);
            const double winding = std::clamp(f.shape, 0.25, 3.0);
            std::vector<Point> v;
            for (int i = 0; i < n; ++i) {
                const double t = winding * 2.0 * kPi * i / (n - 1);
                const double r = 1.0 - 0.8 * double(i) / n;
                v.push_back({r * std::cos(t), r * std::sin(t)});
            }
            auto arc = PolygonalArc::from_vertices(v);
            if (!arc.is_simple()) {
                ArcFamily tighter = f;
                tighter.kind = FamilyKind::random_walk;  // fall back to a rejected walk
                return generate(tighter);
            }
            return normalize_unit(std::move(v));
        }

        case FamilyKind::zigzag: {
            const int teeth = std::max(2, f.vertices / 2);
            const double amp = std::clamp(f.shape, 0.05, 2.0) * 0.4;
            std::vector<Point> v;
            for (int i = 0; i <= 2 * teeth; ++i)
                v.push_back({0.5 * i, (i % 2) ? amp : 0.0});
            return normalize_unit(std::move(v));
        }

        case FamilyKind::convex_arc: {
            const int n = std::max(3, f.vertices);
            const double total_turn = std::clamp(f.shape, 0.1, 0.95) * kPi;
            std::uniform_real_distribution<double> leg(0.2, 1.0);
            std::vector<double> turns(n - 2);
            double sum = 0.0;
            for (auto& t : turns) {
                t = 0.1 + u01(g);
                sum += t;
            }
            std::vector<Point> v{{0, 0}};
            double heading = 0.0;
            Point p{0, 0};
            p = p + Vec2{1, 0} * leg(g);
            v.push_back(p);
            for (int i = 0; i < n - 2; ++i) {
                heading += total_turn * turns[i] / sum;
                p = p + Vec2{std::cos(heading), std::sin(heading)} * leg(g);
                v.push_back(p);
            }
            return normalize_unit(std::move(v));
        }
    }
    throw std::invalid_argument("generate: unknown family");
}

Sector baseline_sector(double theta, BaselineRule rule) {
    if (rule == BaselineRule::half_csc_half) {
        if (!(theta > 0.0) || theta > kPi / 2.0 + 1e-15)
            throw std::invalid_argument("baseline rule 1 needs theta in (0, 90] degrees");
        return Sector::make({0, 0}, {1, 0}, theta, 0.5 / std::sin(theta / 2.0));
    }
    if (!(theta > 0.0) || theta >= kPi / 2.0 - 1e-12)
        throw std::invalid_argument("baseline rule 2 needs theta in (0, 90) degrees");
    return Sector::make({0, 0}, {1, 0}, theta, 1.0 / std::sin(2.0 * theta));
}

CampaignReport run_campaign(const CampaignConfig& cfg) {
    if (cfg.trials < 1) throw std::invalid_argument("run_campaign: trials must be >= 1");
    if (cfg.mix.empty()) throw std::invalid_argument("run_campaign: family mix is empty");

    struct TrialResult {
        bool success{false};
        double violation{0.0};
        CandidateKind kind{CandidateKind::refined};
    };
    std::vector<TrialResult> results(cfg.trials);

    const auto t0 = std::chrono::steady_clock::now();
    parallel_for(
        static_cast<std::size_t>(cfg.trials),
        [&](std::size_t i) {
            ArcFamily fam = cfg.mix[i % cfg.mix.size()];
            fam.seed = splitmix64(cfg.seed ^ (0x517cc1b727220a95ull * (i + 1)));
            const PolygonalArc arc = generate(fam);
            const FitResult r = fit(arc, cfg.target);
            results[i] = {r.success, r.best.violation, r.best.kind};
        },
        cfg.threads);
    const auto t1 = std::chrono::steady_clock::now();

    CampaignReport rep;
    rep.trials = static_cast<std::size_t>(cfg.trials);
    rep.wall_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    rep.mean_trial_ms = rep.wall_ms / cfg.trials;

    // Log-spaced violation buckets from 1e-12 to 1e0, with an underflow bin.
    rep.histogram.push_back({-std::numeric_limits<double>::infinity(), 1e-12, 0});
    for (int e = -12; e < 0; ++e)
        rep.histogram.push_back({std::pow(10.0, e), std::pow(10.0, e + 1), 0});
    rep.histogram.push_back({1.0, std::numeric_limits<double>::infinity(), 0});

    rep.max_violation = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < results.size(); ++i) {
        const auto& r = results[i];
        rep.max_violation = std::max(rep.max_violation, r.violation);
        if (r.success) {
            ++rep.successes;
            ++rep.successes_by_kind[to_string(r.kind)];
        } else {
            ++rep.failures;
            rep.failed_trials.push_back(i);
        }
        for (auto& b : rep.histogram) {
            if (r.violation > b.lo && r.violation <= b.hi) {
                ++b.count;
                break;
            }
        }
    }
    return rep;
}

}  // namespace sectorcover
