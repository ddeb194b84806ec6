#include <doctest.h>

#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include "ambc/analytic.hpp"
#include "ambc/errors.hpp"
#include "ambc/meijer.hpp"
#include "ambc/quadrature.hpp"
#include "ambc/specfun.hpp"
#include "test_support.hpp"

using namespace ambc;
using ambc::testing::rel_diff;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

SystemConfig cfg_at(int M, int N, double P) {
    SystemConfig cfg;
    cfg.M = M;
    cfg.N = N;
    cfg.P = P;
    return cfg;
}

SystemConfig random_cfg(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> m(1, 256), n(1, 32), k(1, 60);
    std::uniform_real_distribution<double> alpha(0.05, 1.0), db(-10.0, 30.0), var(0.2, 3.0);
    SystemConfig cfg;
    cfg.M = m(rng);
    cfg.N = n(rng);
    cfg.K = k(rng);
    cfg.alpha = alpha(rng);
    cfg.P = std::pow(10.0, db(rng) / 10.0);
    cfg.varBC = var(rng);
    cfg.varRB = var(rng);
    cfg.noise_var = var(rng);
    return cfg;
}

}  // namespace

TEST_CASE("exponential density of Z") {
    CHECK(pdf_Z(0.0) == 0.5);
    CHECK(pdf_Z(2.0) == doctest::Approx(0.5 * std::exp(-1.0)).epsilon(1e-15));
    CHECK(integrate_pieces(pdf_Z, {0.0, 10.0, kInf}).value == doctest::Approx(1.0).epsilon(1e-12));
    CHECK_THROWS_AS(pdf_Z(-1.0), DomainError);
}

TEST_CASE("density of A") {
    CHECK(pdf_A(1.0) == doctest::Approx(0.5 * bessel_k(0.0, 1.0)).epsilon(1e-15));
    CHECK_THROWS_AS(pdf_A(0.0), DomainError);
    CHECK(std::abs(cdf_A(1e6) - 1.0) <= 1e-8);
    CHECK(cdf_A(0.0) == 0.0);
    // A is the product of two independent Z variables.
    for (double a : {0.5, 2.0, 10.0}) {
        const auto integrand = [a](double z) { return z > 0 ? pdf_Z(a / z) * pdf_Z(z) / z : 0.0; };
        const double conv = integrate_pieces(integrand, {0.0, 0.1, 1.0, 10.0, 100.0, kInf}).value;
        CHECK(rel_diff(pdf_A(a), conv) <= 1e-8);
    }
    // Closed form of the CDF: 1 - sqrt(a) K1(sqrt(a)).
    for (double a : {1e-8, 1e-3, 0.3, 1.0, 7.0, 60.0, 400.0}) {
        const double r = std::sqrt(a);
        CAPTURE(a);
        CHECK(std::abs(cdf_A(a) - (1.0 - r * bessel_k(1.0, r))) <= 1e-12);
    }
}

TEST_CASE("parameter definitions") {
    const SystemConfig cfg = cfg_at(64, 4, 10.0);
    CHECK(sigma1m_asymptote(64, 64) == doctest::Approx(256.0).epsilon(1e-15));
    CHECK(sigma1m_asymptote(64, 4) == doctest::Approx(100.0).epsilon(1e-15));
    CHECK_THROWS_AS(sigma1m_asymptote(0, 4), DomainError);
    CHECK(beta_parameter(cfg) == doctest::Approx(10.0 * 0.25 / (1.0 + 10.0 * 100.0)).epsilon(1e-15));
    CHECK(gamma_parameter(cfg) == doctest::Approx(10.0 * 15 * 0.25).epsilon(1e-15));
}

TEST_CASE("primary log term equals the array-gain form") {
    std::mt19937_64 rng(101);
    for (int i = 0; i < 30; ++i) {
        const SystemConfig cfg = random_cfg(rng);
        const double s = std::sqrt(double(cfg.M)) + std::sqrt(double(cfg.N));
        CHECK(rel_diff(r1_lemma_log_term(cfg), std::log2(1.0 + cfg.P * s * s / cfg.noise_var)) <= 1e-12);
    }
    SystemConfig dark;
    dark.alpha = 0.0;
    CHECK_THROWS_AS(r1_lemma_log_term(dark), DomainError);
}

TEST_CASE("closed-form rates against high-precision references") {
    // 17-digit references from an independent arbitrary-precision evaluation
    // of the same Meijer G expressions; unit variances, alpha = 0.5, K = 15.
    struct R2 {
        int N;
        double P, value;
    };
    const R2 r2_refs[] = {
        {2, 1, 0.15774173767017817},  {2, 10, 0.34303209652865198}, {2, 100, 0.5566852117358893},
        {4, 1, 0.21686822237756446},  {4, 10, 0.41816195873399038}, {4, 100, 0.63596851845180913},
        {8, 1, 0.27905487237281811},  {8, 10, 0.48910938003964696}, {8, 100, 0.70869844568340893},
    };
    for (const R2& r : r2_refs) {
        CAPTURE(r.N);
        CAPTURE(r.P);
        CHECK(rel_diff(r2_exact(cfg_at(64, r.N, r.P)), r.value) <= 1e-10);
    }
    struct R1 {
        int M, N;
        double P, value;
    };
    const R1 r1_refs[] = {
        {64, 4, 1, 6.6617650868389286},   {64, 4, 100, 13.29144525141348},
        {16, 1, 1, 4.7140588997277535},   {16, 1, 100, 11.302437758091261},
        {256, 16, 1, 8.6483567449390151}, {256, 16, 100, 15.288648985479519},
    };
    for (const R1& r : r1_refs) {
        CAPTURE(r.M);
        CAPTURE(r.P);
        CHECK(rel_diff(r1_lemma_bound(cfg_at(r.M, r.N, r.P)), r.value) <= 1e-12);
    }
}

TEST_CASE("Meijer forms agree with direct quadrature") {
    std::mt19937_64 rng(202);
    for (int i = 0; i < 5; ++i) {
        const SystemConfig cfg = random_cfg(rng);
        CAPTURE(cfg.M);
        CAPTURE(cfg.N);
        CAPTURE(cfg.P);
        const double log_term = r1_lemma_log_term(cfg);
        const double meijer_term =
            std::numbers::log2e * meijer_g_detailed(r1_lemma_meijer_spec(cfg), -std::log(beta_parameter(cfg))).value;
        CHECK(rel_diff(meijer_term, r1_quadrature_oracle(cfg) - log_term) <= 1e-6);
        CHECK(rel_diff(r1_lemma_bound(cfg), r1_quadrature_oracle(cfg)) <= 1e-6);
        CHECK(rel_diff(r2_exact(cfg), r2_quadrature_oracle(cfg)) <= 1e-6);
    }
    for (double db : {0.0, 10.0, 20.0}) {
        const SystemConfig cfg = cfg_at(64, 4, std::pow(10.0, db / 10.0));
        CHECK(rel_diff(r2_exact(cfg), r2_quadrature_oracle(cfg)) <= 1e-6);
    }
}

TEST_CASE("single-antenna secondary oracle in the original variable") {
    SystemConfig cfg = cfg_at(64, 1, 10.0);
    const double g = gamma_parameter(cfg);
    // (1/(2K)) int_0^inf log2(1 + g b/4) K0(sqrt b) db, log-singular at b = 0.
    const auto f = [g](double b) { return b > 0 ? std::log2(1.0 + 0.25 * g * b) * bessel_k(0.0, std::sqrt(b)) : 0.0; };
    const double direct = integrate_pieces(f, {0.0, 1.0, 25.0, 400.0, 3600.0, kInf}).value / (2.0 * cfg.K);
    CHECK(rel_diff(r2_quadrature_oracle(cfg), direct) <= 1e-8);
    CHECK(rel_diff(r2_exact(cfg), direct) <= 1e-8);
}

TEST_CASE("vanishing power and reflection") {
    SystemConfig cfg = cfg_at(64, 4, 1e-8);
    CHECK(r2_exact(cfg) < 1e-6);
    CHECK(r2_exact(cfg) >= 0.0);
    cfg.P = 0.0;
    CHECK(r2_exact(cfg) == 0.0);
    CHECK(r2_quadrature_oracle(cfg) == 0.0);
    CHECK(r1_lemma_bound(cfg) == 0.0);

    SystemConfig dark = cfg_at(64, 4, 10.0);
    dark.alpha = 0.0;
    CHECK(r2_theorem_bound(dark) == 0.0);
    CHECK(r1_theorem_bound(dark) == doctest::Approx(std::log2(1.0 + 10.0 * 100.0)).epsilon(1e-15));
    dark.alpha = 1e-9;
    CHECK(r2_theorem_bound(dark) < 1e-15);
}

TEST_CASE("closed-form bounds") {
    std::mt19937_64 rng(303);
    for (int i = 0; i < 20; ++i) {
        const SystemConfig cfg = random_cfg(rng);
        const AnalyticRates a = analytic_rates(cfg);
        CHECK(a.r2_exact <= a.r2_theorem_bound);
        CHECK(std::isfinite(a.r1_lemma_bound));
        CHECK(std::isfinite(a.r1_theorem_bound));
        CHECK(a.beta == beta_parameter(cfg));
        CHECK(a.gamma_par == gamma_parameter(cfg));
    }
    const double diff = r1_theorem_bound(cfg_at(256, 16, 100.0)) - r1_theorem_bound(cfg_at(64, 4, 100.0));
    CHECK(std::abs(diff - 2.0) <= 0.05);

    double lo = kInf, hi = 0.0;
    for (auto [K, N] : {std::pair{4, 16}, std::pair{8, 8}, std::pair{16, 4}}) {
        SystemConfig cfg = cfg_at(64, N, 1000.0);
        cfg.K = K;
        lo = std::min(lo, K * r2_theorem_bound(cfg));
        hi = std::max(hi, K * r2_theorem_bound(cfg));
    }
    CHECK((hi - lo) / lo < 0.10);
}

TEST_CASE("closed-form rates grow with power") {
    double r1_prev = -1.0, r2_prev = -1.0;
    for (int i = 0; i < 10; ++i) {
        const SystemConfig cfg = cfg_at(64, 4, std::pow(10.0, -1.0 + 0.4 * i));
        const double r1 = r1_lemma_bound(cfg);
        const double r2 = r2_exact(cfg);
        CHECK(r1 >= r1_prev);
        CHECK(r2 >= r2_prev);
        r1_prev = r1;
        r2_prev = r2;
    }
}
