#include "ambc/sweep.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <map>
#include <memory>

#include "ambc/analytic.hpp"
#include "ambc/errors.hpp"
#include "ambc/montecarlo.hpp"
#include "ambc/parallel.hpp"

namespace ambc {

std::string to_string(SweepKind kind) {
    switch (kind) {
        case SweepKind::SnrSweep: return "SnrSweep";
        case SweepKind::AntennaSweep: return "AntennaSweep";
        case SweepKind::GridNK: return "GridNK";
        case SweepKind::Validate: return "Validate";
    }
    return "?";
}

std::optional<SweepKind> parse_sweep_kind(const std::string& text) {
    for (SweepKind k : {SweepKind::SnrSweep, SweepKind::AntennaSweep, SweepKind::GridNK, SweepKind::Validate}) {
        if (to_string(k) == text) return k;
    }
    return std::nullopt;
}

std::vector<double> Axis::grid(bool integer) const {
    std::vector<double> pts = values;
    if (pts.empty()) {
        if (points == 1) {
            pts.push_back(start);
        } else {
            for (int i = 0; i < points; ++i) {
                const double t = static_cast<double>(i) / (points - 1);
                pts.push_back(log_scale ? start * std::pow(stop / start, t) : start + t * (stop - start));
            }
            if (points > 1) pts.back() = stop;
        }
    }
    if (integer) {
        std::vector<double> out;
        for (double v : pts) {
            const double r = std::round(v);
            if (std::find(out.begin(), out.end(), r) == out.end()) out.push_back(r);
        }
        pts = std::move(out);
    }
    return pts;
}

SweepSpec default_spec(SweepKind kind) {
    SweepSpec spec;
    spec.kind = kind;
    spec.axis_k = Axis{1.0, 60.0, 60, false, {}};
    switch (kind) {
        case SweepKind::SnrSweep:
        case SweepKind::Validate:
            spec.axis = Axis{0.0, 30.0, 7, false, {}};
            break;
        case SweepKind::AntennaSweep:
            spec.axis = Axis{2.0, 32.0, 5, true, {}};
            break;
        case SweepKind::GridNK:
            spec.axis = Axis{2.0, 64.0, 32, false, {}};
            spec.monte_carlo = false;
            break;
    }
    return spec;
}

namespace {

void check_axis(const Axis& axis, const std::string& name, bool integer, double min_value) {
    if (axis.values.empty()) {
        if (axis.points < 2) {
            throw ConfigError(name + ".points = " + std::to_string(axis.points) + " violates points >= 2", 0,
                              name + ".points");
        }
        if (!std::isfinite(axis.start) || !std::isfinite(axis.stop)) {
            throw ConfigError(name + " bounds must be finite", 0, name + ".start");
        }
        if (axis.log_scale && (axis.start <= 0.0 || axis.stop <= 0.0)) {
            throw ConfigError(name + " log scale needs start > 0 and stop > 0", 0, name + ".scale");
        }
    } else if (axis.values.size() < 2) {
        throw ConfigError(name + ".values needs at least 2 entries", 0, name + ".values");
    }
    const auto pts = axis.grid(integer);
    if (pts.size() < 2) throw ConfigError(name + " has fewer than 2 distinct points", 0, name + ".points");
    for (double v : pts) {
        if (!std::isfinite(v) || v < min_value) {
            throw ConfigError(name + " point " + std::to_string(v) + " is out of range", 0,
                              name + (axis.values.empty() ? ".start" : ".values"));
        }
    }
}

}  // namespace

void validate(const SweepSpec& spec) {
    spec.base.validate();
    if (spec.base.M < 1) throw ConfigError("M must be >= 1", 0, "M");
    if (spec.base.N < 1) throw ConfigError("N must be >= 1", 0, "N");
    if (spec.base.K < 1) throw ConfigError("K must be >= 1", 0, "K");
    if (spec.workers < 1) throw ConfigError("workers must be >= 1", 0, "sweep.workers");
    if (spec.monte_carlo && spec.n_samples < 2) {
        throw ConfigError("samples must be >= 2 for Monte Carlo columns", 0, "sweep.samples");
    }
    switch (spec.kind) {
        case SweepKind::SnrSweep:
            check_axis(spec.axis, "axis", false, -std::numeric_limits<double>::infinity());
            break;
        case SweepKind::AntennaSweep:
            check_axis(spec.axis, "axis", true, 1.0);
            break;
        case SweepKind::GridNK:
            check_axis(spec.axis, "axis", true, 1.0);
            check_axis(spec.axis_k, "axis_k", true, 1.0);
            break;
        case SweepKind::Validate:
            break;
    }
}

std::size_t SweepResult::failed_rows() const {
    return static_cast<std::size_t>(std::count_if(rows.begin(), rows.end(), [](const SweepRow& r) { return !r.ok; }));
}

namespace {

struct Point {
    std::vector<double> axis_values;
    SystemConfig cfg;
};

std::vector<Point> expand_points(const SweepSpec& spec, std::vector<std::string>& names) {
    std::vector<Point> points;
    switch (spec.kind) {
        case SweepKind::SnrSweep:
        case SweepKind::Validate:
            names = {"snr_db"};
            for (double db : spec.axis.grid(false)) {
                SystemConfig cfg = spec.base;
                cfg.P = cfg.noise_var * std::pow(10.0, db / 10.0);
                points.push_back({{db}, cfg});
            }
            break;
        case SweepKind::AntennaSweep:
            names = {"N"};
            for (double n : spec.axis.grid(true)) {
                SystemConfig cfg = spec.base;
                cfg.N = static_cast<int>(n);
                points.push_back({{n}, cfg});
            }
            break;
        case SweepKind::GridNK:
            names = {"N", "K"};
            for (double n : spec.axis.grid(true)) {
                for (double k : spec.axis_k.grid(true)) {
                    SystemConfig cfg = spec.base;
                    cfg.N = static_cast<int>(n);
                    cfg.K = static_cast<int>(k);
                    points.push_back({{n, k}, cfg});
                }
            }
            break;
    }
    return points;
}

// Draw group of a point: in CRN mode all points with the same array geometry
// share one set of channel draws and the spec's seed; otherwise each point has
// its own stream family.
struct DrawGroup {
    SystemConfig cfg;
    SeedSpec seed;
    std::shared_ptr<GainDraws> draws;
    std::string error;
};

SeedSpec point_seed(SeedSpec base, std::size_t point) {
    return {splitmix64_mix(base.master_seed ^ ((point + 1) * 0x9E3779B97F4A7C15ULL)), base.stream_index};
}

bool same_geometry(const SystemConfig& a, const SystemConfig& b) {
    return a.M == b.M && a.N == b.N && a.var1 == b.var1 && a.varRB == b.varRB && a.varBC == b.varBC;
}

// Configurations that agree in everything but K share the primary-link columns.
bool same_primary(const SystemConfig& a, const SystemConfig& b) {
    SystemConfig x = a, y = b;
    x.K = y.K = 1;
    return x == y;
}

}  // namespace

SweepResult run_sweep(const SweepSpec& spec) {
    validate(spec);
    const auto t0 = std::chrono::steady_clock::now();

    SweepResult result;
    result.spec = spec;
    const std::vector<Point> points = expand_points(spec, result.axis_names);
    const std::size_t n_points = points.size();
    result.rows.resize(n_points);
    for (std::size_t i = 0; i < n_points; ++i) result.rows[i].axis_values = points[i].axis_values;

    // Monte Carlo: one GainDraws per group, groups evaluated in order.
    std::vector<DrawGroup> groups;
    std::vector<std::size_t> group_of(n_points, 0);
    if (spec.monte_carlo) {
        for (std::size_t i = 0; i < n_points; ++i) {
            std::size_t g = groups.size();
            if (spec.crn) {
                for (std::size_t j = 0; j < groups.size(); ++j) {
                    if (same_geometry(groups[j].cfg, points[i].cfg)) g = j;
                }
            }
            if (g == groups.size()) {
                groups.push_back({points[i].cfg, spec.crn ? spec.seed : point_seed(spec.seed, i), nullptr, {}});
            }
            group_of[i] = g;
        }
        for (DrawGroup& g : groups) {
            try {
                g.draws = std::make_shared<GainDraws>(draw_gains(g.cfg, spec.n_samples, g.seed, spec.workers));
                result.skipped_draws += g.draws->skipped;
            } catch (const std::exception& e) {
                g.error = e.what();
            }
        }
    }

    // Primary-link analytic columns do not depend on K.
    std::vector<std::size_t> primary_source(n_points);
    for (std::size_t i = 0; i < n_points; ++i) {
        primary_source[i] = i;
        for (std::size_t j = 0; j < i; ++j) {
            if (primary_source[j] == j && same_primary(points[j].cfg, points[i].cfg)) {
                primary_source[i] = j;
                break;
            }
        }
    }

    struct PrimaryColumns {
        double lemma = 0.0, bar = 0.0;
        std::string error;
    };
    std::vector<PrimaryColumns> primary(n_points);
    parallel_for(n_points, spec.workers, [&](std::size_t i) {
        if (primary_source[i] != i) return;
        try {
            primary[i].lemma = r1_lemma_bound(points[i].cfg);
            primary[i].bar = r1_theorem_bound(points[i].cfg);
        } catch (const std::exception& e) {
            primary[i].error = e.what();
        }
    });

    const double nan = std::numeric_limits<double>::quiet_NaN();
    parallel_for(n_points, spec.workers, [&](std::size_t i) {
        SweepRow& row = result.rows[i];
        const SystemConfig& cfg = points[i].cfg;
        try {
            const PrimaryColumns& p = primary[primary_source[i]];
            if (!p.error.empty()) throw Error(p.error);
            row.r1_lemma = p.lemma;
            row.r1_bar = p.bar;
            row.r2_exact = r2_exact(cfg);
            row.r2_bar = r2_theorem_bound(cfg);
            if (spec.monte_carlo) {
                const DrawGroup& g = groups[group_of[i]];
                if (!g.draws) throw Error(g.error);
                const RateEstimate r1 = r1_from_gains(cfg, *g.draws);
                const RateEstimate r2 = r2_from_gains(cfg, *g.draws);
                row.r1_mc = r1.mean_bps_hz;
                row.r1_stderr = r1.std_error;
                row.r2_mc = r2.mean_bps_hz;
                row.r2_stderr = r2.std_error;
            } else {
                row.r1_mc = row.r1_stderr = row.r2_mc = row.r2_stderr = nan;
            }
            for (double v : {row.r1_lemma, row.r2_exact, row.r1_bar, row.r2_bar}) {
                if (!std::isfinite(v)) throw AccuracyError("non-finite analytic column", v, nan);
            }
        } catch (const std::exception& e) {
            row.ok = false;
            row.error = e.what();
        }
    });

    result.wall_time_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return result;
}

std::vector<ContourPoint> iso_contour_k(const SweepResult& grid, double level) {
    if (grid.axis_names.size() != 2) throw DimensionError("iso_contour_k: need an (N, K) grid result");
    std::map<double, std::vector<std::pair<double, double>>> by_n;
    for (const SweepRow& r : grid.rows) {
        if (r.ok) by_n[r.axis_values[0]].emplace_back(r.axis_values[1], r.r2_bar);
    }
    std::vector<ContourPoint> out;
    for (auto& [n, curve] : by_n) {
        std::sort(curve.begin(), curve.end());
        for (std::size_t j = 0; j + 1 < curve.size(); ++j) {
            const auto [k0, v0] = curve[j];
            const auto [k1, v1] = curve[j + 1];
            if ((v0 - level) * (v1 - level) <= 0.0 && v0 != v1) {
                out.push_back({n, k0 + (level - v0) * (k1 - k0) / (v1 - v0)});
                break;
            }
        }
    }
    return out;
}

}  // namespace ambc
