#include "ambc/stats.hpp"

#include <algorithm>
#include <boost/math/special_functions/gamma.hpp>
#include <cmath>

#include "ambc/errors.hpp"

namespace ambc {

double sample_mean(std::span<const double> x) {
    if (x.empty()) throw DomainError("sample_mean: empty sample");
    double s = 0.0;
    for (double v : x) s += v;
    return s / static_cast<double>(x.size());
}

double sample_variance(std::span<const double> x) {
    if (x.size() < 2) throw DomainError("sample_variance: need at least 2 values");
    const double m = sample_mean(x);
    double ss = 0.0;
    for (double v : x) ss += (v - m) * (v - m);
    return ss / static_cast<double>(x.size() - 1);
}

double pearson_correlation(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size() || x.size() < 2) throw DimensionError("pearson_correlation: size mismatch");
    const double mx = sample_mean(x);
    const double my = sample_mean(y);
    double sxy = 0.0, sxx = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sxy += (x[i] - mx) * (y[i] - my);
        sxx += (x[i] - mx) * (x[i] - mx);
        syy += (y[i] - my) * (y[i] - my);
    }
    return sxy / std::sqrt(sxx * syy);
}

double kolmogorov_survival(double lambda) {
    if (lambda < 0.2) return 1.0;
    double sum = 0.0;
    double sign = 1.0;
    for (int k = 1; k <= 100; ++k) {
        const double term = sign * std::exp(-2.0 * k * k * lambda * lambda);
        sum += term;
        if (std::abs(term) < 1e-16 * std::abs(sum)) break;
        sign = -sign;
    }
    return std::clamp(2.0 * sum, 0.0, 1.0);
}

namespace {

double ks_p_value(double d, double n_eff) {
    const double root = std::sqrt(n_eff);
    return kolmogorov_survival((root + 0.12 + 0.11 / root) * d);
}

}  // namespace

TestResult ks_one_sample(std::vector<double> samples, const std::function<double(double)>& cdf) {
    if (samples.empty()) throw DomainError("ks_one_sample: empty sample");
    std::sort(samples.begin(), samples.end());
    const double n = static_cast<double>(samples.size());
    double d = 0.0;
    for (std::size_t i = 0; i < samples.size(); ++i) {
        const double f = cdf(samples[i]);
        d = std::max({d, (i + 1) / n - f, f - i / n});
    }
    return {d, ks_p_value(d, n)};
}

TestResult ks_two_sample(std::vector<double> a, std::vector<double> b) {
    if (a.empty() || b.empty()) throw DomainError("ks_two_sample: empty sample");
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    const double na = static_cast<double>(a.size());
    const double nb = static_cast<double>(b.size());
    std::size_t i = 0, j = 0;
    double d = 0.0;
    while (i < a.size() && j < b.size()) {
        const double x = std::min(a[i], b[j]);
        while (i < a.size() && a[i] <= x) ++i;
        while (j < b.size() && b[j] <= x) ++j;
        d = std::max(d, std::abs(i / na - j / nb));
    }
    return {d, ks_p_value(d, na * nb / (na + nb))};
}

TestResult chi_square_gof(std::span<const double> samples, std::span<const double> edges,
                          const std::function<double(double)>& cdf) {
    if (edges.size() < 3) throw DomainError("chi_square_gof: need at least two bins");
    const std::size_t bins = edges.size() - 1;
    std::vector<double> observed(bins, 0.0);
    for (double s : samples) {
        const auto it = std::upper_bound(edges.begin(), edges.end(), s);
        if (it == edges.begin() || it == edges.end()) continue;
        observed[static_cast<std::size_t>(it - edges.begin()) - 1] += 1.0;
    }
    const double n = static_cast<double>(samples.size());
    double chi2 = 0.0;
    for (std::size_t k = 0; k < bins; ++k) {
        const double expected = n * (cdf(edges[k + 1]) - cdf(edges[k]));
        chi2 += (observed[k] - expected) * (observed[k] - expected) / expected;
    }
    const double dof = static_cast<double>(bins - 1);
    return {chi2, boost::math::gamma_q(0.5 * dof, 0.5 * chi2)};
}

}  // namespace ambc
