#include "ambc/csv.hpp"

#include <fstream>
#include <sstream>

#include "ambc/config.hpp"
#include "ambc/errors.hpp"

#ifndef AMBC_VERSION
#define AMBC_VERSION "unknown"
#endif

namespace ambc {

std::string format_csv(const SweepResult& result) {
    std::ostringstream out;
    out << "# rates in bit/s/Hz; *_stderr is the Monte Carlo standard error of the mean\n";
    out << "# snr_db = 10*log10(P/noise_var); nan marks columns that were not computed\n";
    for (std::size_t i = 0; i < result.axis_names.size(); ++i) out << (i ? "," : "") << result.axis_names[i];
    out << ",r1_mc,r1_stderr,r2_mc,r2_stderr,r1_lemma,r2_exact,r1_bar,r2_bar\n";
    for (const SweepRow& r : result.rows) {
        if (!r.ok) continue;
        for (std::size_t i = 0; i < r.axis_values.size(); ++i) out << (i ? "," : "") << format_double(r.axis_values[i]);
        for (double v : {r.r1_mc, r.r1_stderr, r.r2_mc, r.r2_stderr, r.r1_lemma, r.r2_exact, r.r1_bar, r.r2_bar}) {
            out << "," << format_double(v);
        }
        out << "\n";
    }
    return out.str();
}

std::string format_manifest(const SweepResult& result) {
    std::ostringstream out;
    out << format_spec(result.spec);
    out << "\n# version = " << AMBC_VERSION << "\n";
    out << "# wall_time_s = " << format_double(result.wall_time_s) << "\n";
    out << "# rows = " << result.rows.size() << "\n";
    out << "# skipped_draws = " << result.skipped_draws << "\n";
    out << "# failed_rows = " << result.failed_rows() << "\n";
    for (const SweepRow& r : result.rows) {
        if (r.ok) continue;
        out << "# failed:";
        for (std::size_t i = 0; i < r.axis_values.size(); ++i) {
            out << " " << result.axis_names[i] << "=" << format_double(r.axis_values[i]);
        }
        out << " : " << r.error << "\n";
    }
    return out.str();
}

std::filesystem::path manifest_path(const std::filesystem::path& csv_path) {
    return std::filesystem::path(csv_path.string() + ".manifest");
}

namespace {

void write_file(const std::filesystem::path& path, const std::string& text) {
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) throw Error("cannot open " + path.string() + " for writing");
    f << text;
    f.close();
    if (!f) throw Error("write to " + path.string() + " failed");
}

}  // namespace

void emit_csv(const SweepResult& result, const std::filesystem::path& path) {
    write_file(path, format_csv(result));
    write_file(manifest_path(path), format_manifest(result));
}

}  // namespace ambc
