#pragma once

#include "ambc/channel.hpp"
#include "ambc/meijer.hpp"

namespace ambc {

// Density of Z = |sqrt(2)/sigma_BC u1m^H hBC|^2: exponential with rate 1/2.
double pdf_Z(double z);

// Density of A = product of two independent Z-type variables: K0(sqrt(a)) / 2.
double pdf_A(double a);

// CDF of A by quadrature of pdf_A after the substitution a = t^2.
double cdf_A(double a);

// beta = P alpha^2 varBC varRB / (noise_var + P (sqrt M + sqrt N)^2)
double beta_parameter(const SystemConfig& cfg);
// gamma = P K alpha^2 varBC varRB / noise_var
double gamma_parameter(const SystemConfig& cfg);

// (sqrt M + sqrt N)^2, the large-array limit of the mean squared top singular value.
double sigma1m_asymptote(int M, int N);

// Meijer G arguments of the two closed-form rate expressions.
MeijerSpec r1_lemma_meijer_spec(const SystemConfig& cfg);
MeijerSpec r2_exact_meijer_spec(const SystemConfig& cfg);

// log2(P alpha^2 varBC varRB / (beta noise_var)), exactly as it appears in
// the primary-link bound. Equals log2(1 + P (sqrt M + sqrt N)^2 / noise_var).
double r1_lemma_log_term(const SystemConfig& cfg);

// Primary-link upper bound with the Meijer G correction term.
double r1_lemma_bound(const SystemConfig& cfg);
// Exact secondary-link ergodic rate in Meijer G form.
double r2_exact(const SystemConfig& cfg);

// Direct-quadrature counterparts, independent of the Meijer G path:
//   log term + log2(e) * int_0^inf ln(1 + beta t^2/4) t K0(t) dt
double r1_quadrature_oracle(const SystemConfig& cfg);
//   2 / (2^N K Gamma(N)) * int_0^inf log2(1 + gamma t^2/4) t^N K_{N-1}(t) dt
double r2_quadrature_oracle(const SystemConfig& cfg);

// Closed-form Jensen bounds.
double r1_theorem_bound(const SystemConfig& cfg);
double r2_theorem_bound(const SystemConfig& cfg);

struct AnalyticRates {
    double r1_lemma_bound = 0.0;
    double r2_exact = 0.0;
    double r1_theorem_bound = 0.0;
    double r2_theorem_bound = 0.0;
    double beta = 0.0;
    double gamma_par = 0.0;
};

AnalyticRates analytic_rates(const SystemConfig& cfg);

}  // namespace ambc
