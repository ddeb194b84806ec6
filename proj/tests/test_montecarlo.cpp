#include <doctest.h>

#include <Eigen/SVD>
#include <cmath>
#include <limits>
#include <vector>

#include "ambc/analytic.hpp"
#include "ambc/errors.hpp"
#include "ambc/montecarlo.hpp"
#include "ambc/quadrature.hpp"
#include "ambc/specfun.hpp"
#include "ambc/stats.hpp"

using namespace ambc;

namespace {

SystemConfig at_db(double db) {
    SystemConfig cfg;
    cfg.P = std::pow(10.0, db / 10.0);
    return cfg;
}

// Primary rate without a backscatter path, from an independent SVD.
std::vector<double> direct_only_rates(const SystemConfig& cfg, SeedSpec seed, std::size_t n) {
    std::vector<double> out;
    for (std::size_t i = 0; i < n; ++i) {
        const ChannelRealization ch = sample_channels(cfg, {seed.master_seed, seed.stream_index + i});
        Eigen::MatrixXcd m(ch.H1.rows(), ch.H1.cols());
        for (std::size_t r = 0; r < ch.H1.rows(); ++r)
            for (std::size_t c = 0; c < ch.H1.cols(); ++c) m(r, c) = ch.H1(r, c);
        const double s = Eigen::JacobiSVD<Eigen::MatrixXcd>(m).singularValues()(0);
        out.push_back(std::log2(1.0 + cfg.P * s * s / cfg.noise_var));
    }
    return out;
}

}  // namespace

TEST_CASE("summary statistics") {
    const std::vector<double> v{1.0, 2.0, 4.0, 8.0};
    const RateEstimate e = summarize(v, {3, 4}, 2);
    CHECK(e.mean_bps_hz == doctest::Approx(3.75).epsilon(1e-15));
    CHECK(e.std_error == doctest::Approx(std::sqrt(sample_variance(v) / 4.0)).epsilon(1e-12));
    CHECK(e.n_samples == 4);
    CHECK(e.skipped == 2);
    CHECK(e.seed == SeedSpec{3, 4});
    CHECK_THROWS_AS(estimate_r1(SystemConfig{}, 1, {1, 0}), DomainError);
}

TEST_CASE("zero power gives zero rates") {
    SystemConfig cfg;
    cfg.P = 0.0;
    const RateEstimate r1 = estimate_r1(cfg, 50, {1, 0});
    const RateEstimate r2 = estimate_r2(cfg, 50, {1, 0});
    CHECK(r1.mean_bps_hz == 0.0);
    CHECK(r1.std_error == 0.0);
    CHECK(r2.mean_bps_hz == 0.0);
}

TEST_CASE("without a backscatter path the primary rate is the plain MIMO rate") {
    SystemConfig cfg = at_db(10.0);
    cfg.varBC = 0.0;
    const RateEstimate est = estimate_r1(cfg, 2000, {1, 0});
    const std::vector<double> oracle = direct_only_rates(cfg, {99, 0}, 2000);
    const double se = std::sqrt(est.std_error * est.std_error + sample_variance(oracle) / oracle.size());
    CHECK(std::abs(est.mean_bps_hz - sample_mean(oracle)) <= 3.0 * se);
    CHECK(estimate_r2(cfg, 200, {1, 0}).mean_bps_hz == 0.0);
}

TEST_CASE("Monte Carlo primary rate stays below the closed-form bounds") {
    const GainDraws draws = draw_gains(SystemConfig{}, 1000, {1, 0});
    double previous = -1.0;
    for (double db = 0.0; db <= 30.0; db += 5.0) {
        const SystemConfig cfg = at_db(db);
        const RateEstimate r1 = r1_from_gains(cfg, draws);
        CHECK(r1.mean_bps_hz <= r1_theorem_bound(cfg) + 3.0 * r1.std_error);
        CHECK(r1.mean_bps_hz <= r1_lemma_bound(cfg) + 3.0 * r1.std_error);
        // Common random numbers: every draw's rate grows with P.
        CHECK(r1.mean_bps_hz >= previous);
        previous = r1.mean_bps_hz;
    }
}

TEST_CASE("Monte Carlo secondary rate matches the exact expression") {
    const SystemConfig cfg;
    const RateEstimate r2 = estimate_r2(cfg, 1000, {1, 0});
    CHECK(std::abs(r2.mean_bps_hz - r2_exact(cfg)) <= 3.0 * r2.std_error);
    CHECK(std::abs(r2.mean_bps_hz - r2_quadrature_oracle(cfg)) <= 3.0 * r2.std_error);
}

TEST_CASE("per-draw rates respond monotonically to K and alpha") {
    const SystemConfig base;
    const GainDraws draws = draw_gains(base, 500, {2, 0});
    for (const LinkGains& g : draws.gains) {
        double last = std::numeric_limits<double>::infinity();
        for (int K : {1, 2, 4, 15, 60}) {
            SystemConfig cfg = base;
            cfg.K = K;
            const double rate = std::log2(1.0 + snr_secondary(cfg, g)) / K;
            CHECK(rate <= last);
            last = rate;
        }
        double power = -1.0;
        for (double alpha : {0.0, 0.1, 0.5, 1.0}) {
            // c-averaged received primary power
            const double p = base.P / base.noise_var *
                             (g.sigma1m * g.sigma1m + alpha * alpha * std::norm(g.bc_gain) * std::norm(g.rb_gain));
            CHECK(p >= power);
            power = p;
        }
    }
}

TEST_CASE("estimates do not depend on the worker count") {
    const SystemConfig cfg;
    const RateEstimate a = estimate_r1(cfg, 300, {5, 7}, 1);
    const RateEstimate b = estimate_r1(cfg, 300, {5, 7}, 3);
    CHECK(a.mean_bps_hz == b.mean_bps_hz);
    CHECK(a.std_error == b.std_error);
    const auto za = sample_statistic(cfg, {5, 7}, Statistic::A, 300, 1);
    const auto zb = sample_statistic(cfg, {5, 7}, Statistic::A, 300, 4);
    CHECK(za == zb);
}

TEST_CASE("sampled statistics have the expected means") {
    const SystemConfig cfg;
    const auto z = sample_statistic(cfg, {1, 0}, Statistic::Z, 100000);
    CHECK(std::abs(sample_mean(z) - 2.0) <= 0.03);

    const auto a = sample_statistic(cfg, {1, 0}, Statistic::A, 100000);
    const double oracle_mean =
        integrate_pieces([](double t) { return t > 0 ? t * t * t * bessel_k(0.0, t) : 0.0; },
                         {0.0, 2.0, 20.0, std::numeric_limits<double>::infinity()})
            .value;
    CHECK(oracle_mean == doctest::Approx(4.0).epsilon(1e-10));
    CHECK(std::abs(sample_mean(a) - oracle_mean) <= 0.2);

    // 2||hBC||^2 / varBC is chi-square with 2N degrees of freedom, mean 2N;
    // independent of the unit-mean-2 factor.
    const auto s = sample_statistic(cfg, {1, 0}, Statistic::SecondaryProduct, 20000);
    CHECK(std::abs(sample_mean(s) - 2.0 * cfg.N * 2.0) <= 0.45);
}

TEST_CASE("sampled Z and A pass goodness-of-fit tests") {
    const SystemConfig cfg;
    const auto z = sample_statistic(cfg, {1, 0}, Statistic::Z, 10000);
    CHECK(ks_one_sample(z, [](double x) { return x <= 0 ? 0.0 : -std::expm1(-0.5 * x); }).p_value > 0.01);

    std::vector<double> edges{0.0};
    for (int k = 1; k < 10; ++k) edges.push_back(-2.0 * std::log1p(-k / 10.0));
    edges.push_back(std::numeric_limits<double>::infinity());
    const TestResult chi = chi_square_gof(z, edges, [](double x) {
        return std::isinf(x) ? 1.0 : (x <= 0 ? 0.0 : -std::expm1(-0.5 * x));
    });
    CHECK(chi.p_value > 0.01);

    const auto a = sample_statistic(cfg, {1, 0}, Statistic::A, 10000);
    CHECK(ks_one_sample(a, [](double x) { return x <= 0 ? 0.0 : cdf_A(x); }).p_value > 0.01);
}

TEST_CASE("invalid inputs to the samplers") {
    SystemConfig cfg;
    cfg.varBC = 0.0;
    CHECK_THROWS_AS(sample_statistic(cfg, {1, 0}, Statistic::Z, 10), DomainError);
    SystemConfig silent;
    silent.var1 = 0.0;
    // Every re-keyed draw is a zero matrix, so the retries run out.
    CHECK_THROWS_AS(draw_gains(silent, 4, {1, 0}), DegenerateInputError);
}
