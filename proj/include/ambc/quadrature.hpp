#pragma once

#include <functional>
#include <initializer_list>

namespace ambc {

struct QuadratureResult {
    double value = 0.0;
    double error = 0.0;
};

// Tanh-sinh on finite [a, b], adaptive Gauss-Kronrod (61 points) when b is
// +infinity.
// Throws AccuracyError when the error estimate exceeds 1e3 * rel_tol times the
// L1 norm of the integrand.
QuadratureResult integrate(const std::function<double(double)>& f, double a, double b, double rel_tol = 1e-13);

// Sum of integrals over consecutive breakpoints; the last may be +infinity.
QuadratureResult integrate_pieces(const std::function<double(double)>& f, std::initializer_list<double> breakpoints,
                                  double rel_tol = 1e-13);

}  // namespace ambc
