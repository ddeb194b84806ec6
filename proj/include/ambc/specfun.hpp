#pragma once

#include <complex>

namespace ambc {

// Gamma function for x > 0. Lanczos approximation (g = 7, 9 terms),
// about 15 significant digits; overflows to +inf above x ~ 171.6.
double gamma_fn(double x);

// ln Gamma(x) for x > 0.
double log_gamma(double x);

// A branch of ln Gamma(z) for complex z off the poles. The imaginary part may
// differ from the principal branch by a multiple of 2 pi, which is harmless
// once exponentiated. Uses reflection for Re z < 1/2.
std::complex<double> log_gamma(std::complex<double> z);

// ln sin(pi z), stable for large |Im z|.
std::complex<double> log_sin_pi(std::complex<double> z);

// Modified Bessel function of the second kind K_nu(x), x > 0.
// Temme's series for x <= 2, Steed's continued fraction above, upward
// recurrence in the order. Underflows to 0 for x beyond ~705.
double bessel_k(double nu, double x);

// ln K_nu(x), x > 0, without overflow for large orders at small x or
// underflow at large x.
double log_bessel_k(double nu, double x);

}  // namespace ambc
