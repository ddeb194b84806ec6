#pragma once

#include <functional>
#include <span>
#include <vector>

namespace ambc {

double sample_mean(std::span<const double> x);
// Unbiased (n - 1) sample variance.
double sample_variance(std::span<const double> x);
double pearson_correlation(std::span<const double> x, std::span<const double> y);

struct TestResult {
    double statistic = 0.0;
    double p_value = 0.0;
};

// Asymptotic Kolmogorov survival function Q(lambda) = 2 sum (-1)^(k-1) exp(-2 k^2 lambda^2).
double kolmogorov_survival(double lambda);

// One-sample Kolmogorov-Smirnov test, Stephens' small-sample correction.
TestResult ks_one_sample(std::vector<double> samples, const std::function<double(double)>& cdf);

TestResult ks_two_sample(std::vector<double> a, std::vector<double> b);

// Pearson chi-square goodness of fit over the bins given by `edges`;
// expected counts from the model CDF. Degrees of freedom =
// bins - 1.
TestResult chi_square_gof(std::span<const double> samples, std::span<const double> edges,
                          const std::function<double(double)>& cdf);

}  // namespace ambc
