#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "ambc/config.hpp"
#include "ambc/csv.hpp"
#include "ambc/errors.hpp"
#include "ambc/sweep.hpp"

using namespace ambc;

namespace {

std::string read_file(const std::filesystem::path& p) {
    std::ifstream f(p, std::ios::binary);
    std::stringstream s;
    s << f.rdbuf();
    return s.str();
}

std::vector<std::string> data_lines(const std::string& csv) {
    std::vector<std::string> out;
    std::istringstream in(csv);
    std::string line;
    while (std::getline(in, line))
        if (!line.empty() && line[0] != '#') out.push_back(line);
    return out;
}

ConfigError config_error(const std::string& text) {
    try {
        parse_config_text(text);
    } catch (const ConfigError& e) {
        return e;
    }
    FAIL("expected ConfigError for: " << text);
    return ConfigError("unreachable");
}

}  // namespace

TEST_CASE("minimal config takes the defaults") {
    const SweepSpec s = parse_config_text("kind = SnrSweep\n");
    CHECK(s == default_spec(SweepKind::SnrSweep));
    CHECK(s.base.M == 64);
    CHECK(s.base.K == 15);
    CHECK(s.base.alpha == 0.5);
    CHECK(s.n_samples == 1000);
    const std::string text = format_spec(s);
    CHECK(text.find("M = 64") != std::string::npos);
    CHECK(text.find("alpha = 0.5") != std::string::npos);
    CHECK(parse_config_text("# only a comment\n", SweepKind::GridNK) == default_spec(SweepKind::GridNK));
}

TEST_CASE("config errors carry line and field") {
    const ConfigError alpha = config_error("kind = SnrSweep\n[system]\nalpha = 1.5\n");
    CHECK(alpha.line() == 3);
    CHECK(alpha.field() == "system.alpha");
    CHECK(std::string(alpha.what()).find("(0,1]") != std::string::npos);

    const ConfigError unknown = config_error("[system]\nMM = 3\n");
    CHECK(unknown.line() == 2);
    CHECK(std::string(unknown.what()).find("MM") != std::string::npos);

    CHECK(config_error("samples = 10\nsamples = 20\n").line() == 2);
    CHECK(config_error("\n\nseed = abc\n").line() == 3);
    CHECK(config_error("[nonsense]\n").line() == 1);
    CHECK(config_error("kind = Spiral\n").field() == "sweep.kind");
    CHECK(config_error("just words\n").line() == 1);
    CHECK(config_error("crn = maybe\n").field() == "sweep.crn");
    CHECK(config_error("[axis]\npoints = 1\n").field() == "axis.points");
    CHECK(config_error("[axis]\nscale = log\nstart = 0\n").field() == "axis.scale");
    CHECK_THROWS_AS(parse_config("/nonexistent/dir/cfg.ini"), ConfigError);
}

TEST_CASE("spec text round-trips") {
    SweepSpec s = default_spec(SweepKind::AntennaSweep);
    s.base.alpha = 0.123456789012345;
    s.base.P = 1.0 / 3.0;
    s.base.varBC = 2.5e-7;
    s.seed = {18446744073709551615ULL, 42};
    s.crn = false;
    s.workers = 3;
    s.axis.values = {2, 3, 5, 7};
    CHECK(parse_config_text(format_spec(s)) == s);
    for (SweepKind k : {SweepKind::SnrSweep, SweepKind::GridNK, SweepKind::Validate})
        CHECK(parse_config_text(format_spec(default_spec(k))) == default_spec(k));
}

TEST_CASE("manifest re-parses to the run's spec") {
    SweepSpec s = default_spec(SweepKind::SnrSweep);
    s.n_samples = 20;
    const SweepResult r = run_sweep(s);
    CHECK(parse_config_text(format_manifest(r)) == s);
    CHECK(format_manifest(r).find("# skipped_draws = 0") != std::string::npos);
}

TEST_CASE("axis grids") {
    CHECK(Axis{0, 30, 7, false, {}}.grid(false) == std::vector<double>{0, 5, 10, 15, 20, 25, 30});
    CHECK(Axis{2, 32, 5, true, {}}.grid(true) == std::vector<double>{2, 4, 8, 16, 32});
    CHECK(Axis{1, 3, 9, false, {}}.grid(true) == std::vector<double>{1, 2, 3});
    CHECK(Axis{0, 1, 2, false, {5, 1, 5}}.grid(true) == std::vector<double>{5, 1});
}

TEST_CASE("CSV schema") {
    SweepSpec snr = default_spec(SweepKind::SnrSweep);
    snr.n_samples = 30;
    SweepSpec grid = default_spec(SweepKind::GridNK);
    grid.axis = {2, 4, 2, false, {}};
    grid.axis_k = {1, 3, 3, false, {}};
    for (const SweepSpec& s : {snr, grid}) {
        const SweepResult r = run_sweep(s);
        const auto lines = data_lines(format_csv(r));
        REQUIRE(lines.size() == r.rows.size() + 1);
        for (const std::string& l : lines)
            CHECK(static_cast<std::size_t>(std::count(l.begin(), l.end(), ',')) + 1 ==
                  r.axis_names.size() + kResultColumns);
    }
    CHECK(data_lines(format_csv(run_sweep(snr)))[0] ==
          "snr_db,r1_mc,r1_stderr,r2_mc,r2_stderr,r1_lemma,r2_exact,r1_bar,r2_bar");
    CHECK(data_lines(format_csv(run_sweep(grid)))[0] ==
          "N,K,r1_mc,r1_stderr,r2_mc,r2_stderr,r1_lemma,r2_exact,r1_bar,r2_bar");
}

TEST_CASE("failed rows are left out of the CSV and listed in the manifest") {
    SweepResult r;
    r.spec = default_spec(SweepKind::AntennaSweep);
    r.axis_names = {"N"};
    r.rows.resize(2);
    r.rows[0].axis_values = {2};
    r.rows[1].axis_values = {4};
    for (auto& row : r.rows) {
        row.ok = false;
        row.error = "quadrature did not converge";
    }
    const auto lines = data_lines(format_csv(r));
    REQUIRE(lines.size() == 1);
    CHECK(lines[0].rfind("N,", 0) == 0);
    CHECK(r.failed_rows() == 2);
    const std::string manifest = format_manifest(r);
    CHECK(manifest.find("# failed: N=4 : quadrature did not converge") != std::string::npos);
}

TEST_CASE("emitted files are byte-identical across runs and worker counts") {
    const auto dir = std::filesystem::temp_directory_path() / "ambc_sweep_test";
    std::filesystem::create_directories(dir);
    SweepSpec s = default_spec(SweepKind::AntennaSweep);
    s.n_samples = 200;
    emit_csv(run_sweep(s), dir / "a.csv");
    emit_csv(run_sweep(s), dir / "b.csv");
    s.workers = 4;
    emit_csv(run_sweep(s), dir / "c.csv");
    CHECK(read_file(dir / "a.csv") == read_file(dir / "b.csv"));
    CHECK(read_file(dir / "a.csv") == read_file(dir / "c.csv"));
    CHECK(std::filesystem::exists(manifest_path(dir / "a.csv")));
    CHECK_THROWS_AS(emit_csv(run_sweep(s), dir / "missing" / "x.csv"), Error);
    std::filesystem::remove_all(dir);
}

TEST_CASE("SNR sweep with common random numbers is monotone") {
    SweepSpec s = default_spec(SweepKind::SnrSweep);
    s.axis = {0, 30, 16, false, {}};
    const SweepResult r = run_sweep(s);
    REQUIRE(r.failed_rows() == 0);
    for (std::size_t i = 1; i < r.rows.size(); ++i) {
        CHECK(r.rows[i].r1_mc >= r.rows[i - 1].r1_mc);
        CHECK(r.rows[i].r1_lemma >= r.rows[i - 1].r1_lemma);
    }
}

TEST_CASE("antenna sweep: Monte Carlo secondary rate matches the exact expression") {
    const SweepResult r = run_sweep(default_spec(SweepKind::AntennaSweep));
    REQUIRE(r.rows.size() == 5);
    for (const SweepRow& row : r.rows) {
        CAPTURE(row.axis_values[0]);
        CHECK(std::abs(row.r2_mc - row.r2_exact) <= 3.0 * row.r2_stderr);
        CHECK(row.r2_exact <= row.r2_bar);
    }
}

TEST_CASE("independent streams differ from common random numbers") {
    SweepSpec s = default_spec(SweepKind::SnrSweep);
    s.n_samples = 50;
    const SweepResult crn = run_sweep(s);
    s.crn = false;
    const SweepResult ind = run_sweep(s);
    for (std::size_t i = 0; i < crn.rows.size(); ++i) {
        CHECK(crn.rows[i].r1_mc != ind.rows[i].r1_mc);
        CHECK(crn.rows[i].r2_exact == ind.rows[i].r2_exact);
    }
}

TEST_CASE("iso-contours of the secondary bound move to larger K as N grows") {
    SweepSpec s = default_spec(SweepKind::GridNK);
    s.axis = {2, 64, 12, false, {}};
    s.axis_k = {1, 60, 30, false, {}};
    const SweepResult r = run_sweep(s);
    REQUIRE(r.failed_rows() == 0);
    for (const SweepRow& row : r.rows) CHECK(std::isnan(row.r1_mc));
    for (double level : {0.2, 0.3, 0.5, 1.0}) {
        const auto c = iso_contour_k(r, level);
        CAPTURE(level);
        CHECK(c.size() >= 2);
        for (std::size_t j = 1; j < c.size(); ++j) {
            CHECK(c[j].N > c[j - 1].N);
            CHECK(c[j].K >= c[j - 1].K);
        }
    }
}
