#pragma once

#include <vector>

namespace ambc {

// G^{m,n}_{p,q}[ z | a_1..a_p ; b_1..b_q ] for real z > 0.
// Only the index classes (1,2,2,2), (2,0,0,2) and (4,1,2,4) are accepted.
struct MeijerSpec {
    int m = 0;
    int n = 0;
    int p = 0;
    int q = 0;
    std::vector<double> a;
    std::vector<double> b;
    double z = 1.0;
};

struct MeijerValue {
    double value = 0.0;
    double error_bound = 0.0;  // absolute, same scale as value
    double contour = 0.0;      // Re(s) of the vertical integration line
    int evaluations = 0;
};

// Mellin-Barnes integral along Re(s) = contour, evaluated by the trapezoidal
// rule with step halving. The contour sits strictly between the poles of
// Gamma(b_j - s), j <= m, and those of Gamma(1 - a_j + s), j <= n, at the point
// where the integrand modulus on the real axis is smallest.
//
// The result is exp(log_prefactor) * G, with the prefactor folded into the
// integrand so large powers of z never overflow separately.
//
// Throws UnsupportedClassError for other index classes or when the pole
// sequences overlap, DomainError for z <= 0, and AccuracyError when the
// achieved relative error exceeds 1e-8.
MeijerValue meijer_g_detailed(const MeijerSpec& spec, double log_prefactor = 0.0);

double meijer_g(const MeijerSpec& spec);

}  // namespace ambc
