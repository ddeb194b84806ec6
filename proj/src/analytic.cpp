#include "ambc/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "ambc/errors.hpp"
#include "ambc/quadrature.hpp"
#include "ambc/specfun.hpp"

namespace ambc {

namespace {

using std::numbers::log2e;

double log2_1p(double x) { return std::log1p(x) * log2e; }

double array_gain(const SystemConfig& cfg) { return sigma1m_asymptote(cfg.M, cfg.N); }

}  // namespace

double pdf_Z(double z) {
    if (!(z >= 0.0)) throw DomainError("pdf_Z: z must be nonnegative, got " + std::to_string(z));
    return 0.5 * std::exp(-0.5 * z);
}

double pdf_A(double a) {
    if (!(a > 0.0)) throw DomainError("pdf_A: a must be positive, got " + std::to_string(a));
    return 0.5 * bessel_k(0.0, std::sqrt(a));
}

double cdf_A(double a) {
    if (!(a > 0.0)) return 0.0;
    if (std::isinf(a)) return 1.0;
    // With a = t^2 the density becomes t K0(t): no endpoint singularity.
    const auto f = [](double t) { return t > 0.0 ? t * bessel_k(0.0, t) : 0.0; };
    return std::min(1.0, integrate(f, 0.0, std::sqrt(a)).value);
}

double beta_parameter(const SystemConfig& cfg) {
    return cfg.P * cfg.alpha * cfg.alpha * cfg.varBC * cfg.varRB / (cfg.noise_var + cfg.P * array_gain(cfg));
}

double gamma_parameter(const SystemConfig& cfg) {
    return cfg.P * cfg.K * cfg.alpha * cfg.alpha * cfg.varBC * cfg.varRB / cfg.noise_var;
}

double sigma1m_asymptote(int M, int N) {
    if (M < 1 || N < 1) throw DomainError("sigma1m_asymptote: M and N must be at least 1");
    const double s = std::sqrt(static_cast<double>(M)) + std::sqrt(static_cast<double>(N));
    return s * s;
}

MeijerSpec r1_lemma_meijer_spec(const SystemConfig& cfg) {
    return {4, 1, 2, 4, {-1.0, 0.0}, {0.0, 0.0, -1.0, -1.0}, 1.0 / beta_parameter(cfg)};
}

MeijerSpec r2_exact_meijer_spec(const SystemConfig& cfg) {
    const double lo = -(cfg.N + 1) / 2.0;
    const double hi = -(cfg.N - 1) / 2.0;
    return {4, 1, 2, 4, {lo, hi}, {-hi, hi, lo, lo}, 1.0 / gamma_parameter(cfg)};
}

double r1_lemma_log_term(const SystemConfig& cfg) {
    cfg.validate_limits();
    const double beta = beta_parameter(cfg);
    if (!(beta > 0.0)) throw DomainError("r1_lemma_log_term: beta vanishes for this configuration");
    const double num = cfg.P * cfg.alpha * cfg.alpha * cfg.varBC * cfg.varRB;
    return std::log2(num / (beta * cfg.noise_var));
}

double r1_lemma_bound(const SystemConfig& cfg) {
    cfg.validate_limits();
    const double direct = log2_1p(cfg.P * array_gain(cfg) / cfg.noise_var);
    const double beta = beta_parameter(cfg);
    if (!(beta > 0.0)) return direct;
    const MeijerValue g = meijer_g_detailed(r1_lemma_meijer_spec(cfg), -std::log(beta));
    return direct + log2e * g.value;
}

double r2_exact(const SystemConfig& cfg) {
    cfg.validate_limits();
    const double gamma = gamma_parameter(cfg);
    if (!(gamma > 0.0)) return 0.0;
    const double log_prefactor = -log_gamma(static_cast<double>(cfg.N)) - 0.5 * (cfg.N + 1) * std::log(gamma);
    const MeijerValue g = meijer_g_detailed(r2_exact_meijer_spec(cfg), log_prefactor);
    return log2e / cfg.K * g.value;
}

double r1_quadrature_oracle(const SystemConfig& cfg) {
    cfg.validate_limits();
    const double direct = log2_1p(cfg.P * array_gain(cfg) / cfg.noise_var);
    const double beta = beta_parameter(cfg);
    if (!(beta > 0.0)) return direct;
    const auto f = [beta](double t) {
        if (!(t > 0.0)) return 0.0;
        const double weight = t * bessel_k(0.0, t);
        return weight == 0.0 ? 0.0 : std::log1p(0.25 * beta * t * t) * weight;
    };
    const double integral = integrate_pieces(f, {0.0, 1.0, 5.0, 20.0, 60.0, INFINITY}).value;
    return direct + log2e * integral;
}

double r2_quadrature_oracle(const SystemConfig& cfg) {
    cfg.validate_limits();
    const double gamma = gamma_parameter(cfg);
    if (!(gamma > 0.0)) return 0.0;
    const double n = cfg.N;
    const double log_norm = std::log(2.0) - n * std::log(2.0) - log_gamma(n);
    const auto f = [=](double t) {
        if (!(t > 0.0)) return 0.0;
        const double weight = std::exp(n * std::log(t) + log_bessel_k(n - 1.0, t) + log_norm);
        return weight == 0.0 ? 0.0 : std::log1p(0.25 * gamma * t * t) * weight;
    };
    const double integral =
        integrate_pieces(f, {0.0, 1.0, std::max(2.0, n / 2.0), n + 1.0, 2.0 * n + 10.0, 4.0 * n + 40.0, INFINITY})
            .value;
    return log2e * integral / cfg.K;
}

double r1_theorem_bound(const SystemConfig& cfg) {
    cfg.validate_limits();
    const double backscatter = cfg.alpha * cfg.alpha * cfg.varBC * cfg.varRB;
    return log2_1p(cfg.P / cfg.noise_var * (array_gain(cfg) + backscatter));
}

double r2_theorem_bound(const SystemConfig& cfg) {
    cfg.validate_limits();
    const double snr = cfg.P * cfg.varBC * cfg.varRB / cfg.noise_var * cfg.K * cfg.N * cfg.alpha * cfg.alpha;
    return log2_1p(snr) / cfg.K;
}

AnalyticRates analytic_rates(const SystemConfig& cfg) {
    AnalyticRates r;
    r.beta = beta_parameter(cfg);
    r.gamma_par = gamma_parameter(cfg);
    r.r1_lemma_bound = r1_lemma_bound(cfg);
    r.r2_exact = r2_exact(cfg);
    r.r1_theorem_bound = r1_theorem_bound(cfg);
    r.r2_theorem_bound = r2_theorem_bound(cfg);
    return r;
}

}  // namespace ambc
