// Command-line driver: rate sweeps to CSV and the validation suite.

#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include "ambc/config.hpp"
#include "ambc/csv.hpp"
#include "ambc/errors.hpp"
#include "ambc/sweep.hpp"
#include "ambc/validation.hpp"

namespace {

enum ExitCode { kOk = 0, kValidationFailed = 1, kConfigError = 2, kRowsFailed = 3 };

struct SweepOptions {
    std::string config;
    std::optional<std::uint64_t> seed;
    std::optional<std::size_t> samples;
    std::optional<std::size_t> workers;
    std::string out;
    bool crn = true;
    CLI::Option* crn_flag = nullptr;
};

void add_sweep_options(CLI::App& cmd, SweepOptions& o) {
    cmd.add_option("--config", o.config, "Config file")->check(CLI::ExistingFile);
    cmd.add_option("--seed", o.seed, "Master seed");
    cmd.add_option("--samples", o.samples, "Channel realizations per point");
    cmd.add_option("--workers", o.workers, "Worker threads (results do not depend on it)");
    cmd.add_option("--out", o.out, "CSV output path; a .manifest file is written next to it");
    o.crn_flag = cmd.add_flag("--crn,!--independent", o.crn, "Share channel draws across sweep points (default)");
}

int run_sweep_command(ambc::SweepKind kind, const SweepOptions& o) {
    ambc::SweepSpec spec;
    try {
        spec = o.config.empty() ? ambc::default_spec(kind) : ambc::parse_config(o.config, kind);
        if (spec.kind != kind) {
            throw ambc::ConfigError("config kind " + ambc::to_string(spec.kind) + " does not match this subcommand (" +
                                    ambc::to_string(kind) + ")");
        }
        if (o.seed) spec.seed.master_seed = *o.seed;
        if (o.samples) spec.n_samples = *o.samples;
        if (o.workers) spec.workers = *o.workers;
        if (o.crn_flag->count() > 0) spec.crn = o.crn;
        ambc::validate(spec);
    } catch (const ambc::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kConfigError;
    }

    const ambc::SweepResult result = ambc::run_sweep(spec);
    try {
        if (o.out.empty()) {
            std::cout << ambc::format_csv(result);
        } else {
            ambc::emit_csv(result, o.out);
        }
    } catch (const ambc::Error& e) {
        std::cerr << "output error: " << e.what() << "\n";
        return kConfigError;
    }
    for (const auto& row : result.rows) {
        if (!row.ok) std::cerr << "row failed: " << row.error << "\n";
    }
    return result.failed_rows() > 0 ? kRowsFailed : kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Ergodic rate sweeps for a cooperative ambient backscatter link"};
    app.require_subcommand(1);

    SweepOptions snr_opts, n_opts, grid_opts;
    auto* snr = app.add_subcommand("sweep-snr", "Rates versus SNR in dB");
    add_sweep_options(*snr, snr_opts);
    auto* sweep_n = app.add_subcommand("sweep-n", "Rates versus receive antennas N");
    add_sweep_options(*sweep_n, n_opts);
    auto* grid = app.add_subcommand("grid-nk", "Secondary rate bound over an (N, K) grid");
    add_sweep_options(*grid, grid_opts);

    auto* validate = app.add_subcommand("validate", "Run the invariant and acceptance checks");
    std::uint64_t validate_seed = 1;
    std::size_t validate_workers = 1;
    validate->add_option("--seed", validate_seed, "Master seed");
    validate->add_option("--workers", validate_workers, "Worker threads");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kConfigError;
    }

    try {
        if (*snr) return run_sweep_command(ambc::SweepKind::SnrSweep, snr_opts);
        if (*sweep_n) return run_sweep_command(ambc::SweepKind::AntennaSweep, n_opts);
        if (*grid) return run_sweep_command(ambc::SweepKind::GridNK, grid_opts);
        if (*validate) {
            const auto checks = ambc::run_validation({{validate_seed, 0}, std::max<std::size_t>(validate_workers, 1)});
            std::cout << ambc::format_check_table(checks);
            for (const auto& c : checks) {
                if (!c.passed) return kValidationFailed;
            }
            return kOk;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kRowsFailed;
    }
    return kOk;
}
