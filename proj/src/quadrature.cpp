#include "ambc/quadrature.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>
#include <cmath>
#include <string>
#include <vector>

#include "ambc/errors.hpp"

namespace ambc {

QuadratureResult integrate(const std::function<double(double)>& f, double a, double b, double rel_tol) {
    double error = 0.0;
    double l1 = 0.0;
    double value = 0.0;
    if (std::isfinite(b)) {
        // Double-exponential nodes cluster at the endpoints, which absorbs
        // logarithmic endpoint behaviour such as t ln t.
        thread_local boost::math::quadrature::tanh_sinh<double> ts(15);
        std::size_t levels = 0;
        value = ts.integrate(f, a, b, rel_tol, &error, &l1, &levels);
    } else {
        value = boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, a, b, 15, rel_tol, &error, &l1);
    }
    if (!std::isfinite(value) || error > 1e3 * rel_tol * l1 + 1e-300) {
        throw AccuracyError("integrate: error estimate " + std::to_string(error) + " on [" + std::to_string(a) +
                                ", " + std::to_string(b) + "]",
                            value, error);
    }
    return {value, error};
}

QuadratureResult integrate_pieces(const std::function<double(double)>& f, std::initializer_list<double> breakpoints,
                                  double rel_tol) {
    const std::vector<double> pts(breakpoints);
    QuadratureResult total;
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
        if (!(pts[i + 1] > pts[i])) continue;
        const QuadratureResult piece = integrate(f, pts[i], pts[i + 1], rel_tol);
        total.value += piece.value;
        total.error += piece.error;
    }
    return total;
}

}  // namespace ambc
