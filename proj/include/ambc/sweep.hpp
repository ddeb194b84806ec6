#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "ambc/channel.hpp"
#include "ambc/random.hpp"

namespace ambc {

enum class SweepKind { SnrSweep, AntennaSweep, GridNK, Validate };

std::string to_string(SweepKind kind);
std::optional<SweepKind> parse_sweep_kind(const std::string& text);

struct Axis {
    double start = 0.0;
    double stop = 0.0;
    int points = 2;
    bool log_scale = false;
    // Explicit point list; overrides start/stop/points when non-empty.
    std::vector<double> values;

    // Axis points in order. Integer axes are rounded and de-duplicated.
    std::vector<double> grid(bool integer) const;

    bool operator==(const Axis&) const = default;
};

struct SweepSpec {
    SweepKind kind = SweepKind::SnrSweep;
    SystemConfig base;
    Axis axis;    // snr_db (SnrSweep) or N (AntennaSweep, GridNK)
    Axis axis_k;  // K (GridNK only)
    std::size_t n_samples = 1000;
    SeedSpec seed{1, 0};
    bool crn = true;
    bool monte_carlo = true;
    // Execution only; results do not depend on it.
    std::size_t workers = 1;

    bool operator==(const SweepSpec&) const = default;
};

// Defaults for a sweep kind: the base system, axes and Monte Carlo switch.
SweepSpec default_spec(SweepKind kind);

// Throws ConfigError naming the offending field.
void validate(const SweepSpec& spec);

struct SweepRow {
    std::vector<double> axis_values;
    double r1_mc = 0.0;
    double r1_stderr = 0.0;
    double r2_mc = 0.0;
    double r2_stderr = 0.0;
    double r1_lemma = 0.0;
    double r2_exact = 0.0;
    double r1_bar = 0.0;
    double r2_bar = 0.0;
    bool ok = true;
    std::string error;
};

struct SweepResult {
    SweepSpec spec;
    std::vector<std::string> axis_names;
    std::vector<SweepRow> rows;
    std::size_t skipped_draws = 0;
    double wall_time_s = 0.0;

    std::size_t failed_rows() const;
};

// Fills Monte Carlo and analytic columns for every axis point. A row whose
// evaluation throws is marked failed and the sweep continues. In CRN mode one
// set of channel draws per array geometry is shared by all points.
SweepResult run_sweep(const SweepSpec& spec);

// For a GridNK result: the K (linearly interpolated between grid points) at
// which r2_bar crosses `level`, for every N whose K range brackets it.
struct ContourPoint {
    double N;
    double K;
};
std::vector<ContourPoint> iso_contour_k(const SweepResult& grid, double level);

}  // namespace ambc
