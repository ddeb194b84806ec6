#include "ambc/meijer.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <string>

#include "ambc/errors.hpp"
#include "ambc/specfun.hpp"

namespace ambc {

namespace {

using cplx = std::complex<double>;

constexpr double kTargetRelError = 1e-8;
constexpr double kConvergedRelError = 1e-12;
// Truncate the contour once |F| drops below exp(-kTailLog) of its peak.
constexpr double kTailLog = 41.5;
constexpr double kMaxT = 5000.0;
constexpr int kMaxLevels = 11;

bool supported_class(const MeijerSpec& s) {
    const auto is = [&](int m, int n, int p, int q) { return s.m == m && s.n == n && s.p == p && s.q == q; };
    return is(1, 2, 2, 2) || is(2, 0, 0, 2) || is(4, 1, 2, 4);
}

class Integrand {
public:
    Integrand(const MeijerSpec& spec, double log_prefactor)
        : spec_(spec), log_z_(std::log(spec.z)), log_prefactor_(log_prefactor) {}

    cplx log_value(cplx s) const {
        cplx acc = s * log_z_ + log_prefactor_;
        for (int j = 0; j < spec_.m; ++j) acc += log_gamma(spec_.b[j] - s);
        for (int j = 0; j < spec_.n; ++j) acc += log_gamma(1.0 - spec_.a[j] + s);
        for (int j = spec_.m; j < spec_.q; ++j) acc -= log_gamma(1.0 - spec_.b[j] + s);
        for (int j = spec_.n; j < spec_.p; ++j) acc -= log_gamma(spec_.a[j] - s);
        return acc;
    }

private:
    const MeijerSpec& spec_;
    double log_z_;
    double log_prefactor_;
};

// Golden-section minimisation of the real integrand log-modulus on [lo, hi].
double choose_contour(const Integrand& f, double lo, double hi) {
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    const auto g = [&](double c) { return f.log_value(cplx(c, 0.0)).real(); };
    double x1 = hi - inv_phi * (hi - lo);
    double x2 = lo + inv_phi * (hi - lo);
    double g1 = g(x1);
    double g2 = g(x2);
    for (int it = 0; it < 60 && hi - lo > 1e-6; ++it) {
        if (g1 < g2) {
            hi = x2;
            x2 = x1;
            g2 = g1;
            x1 = hi - inv_phi * (hi - lo);
            g1 = g(x1);
        } else {
            lo = x1;
            x1 = x2;
            g1 = g2;
            x2 = lo + inv_phi * (hi - lo);
            g2 = g(x2);
        }
    }
    return 0.5 * (lo + hi);
}

}  // namespace

MeijerValue meijer_g_detailed(const MeijerSpec& spec, double log_prefactor) {
    if (!supported_class(spec)) {
        throw UnsupportedClassError("meijer_g: unsupported index class (" + std::to_string(spec.m) + "," +
                                    std::to_string(spec.n) + "," + std::to_string(spec.p) + "," +
                                    std::to_string(spec.q) + ")");
    }
    if (spec.a.size() != static_cast<std::size_t>(spec.p) || spec.b.size() != static_cast<std::size_t>(spec.q)) {
        throw UnsupportedClassError("meijer_g: parameter lists do not match p, q");
    }
    if (!(spec.z > 0.0) || !std::isfinite(spec.z)) {
        throw DomainError("meijer_g: z must be positive and finite, got " + std::to_string(spec.z));
    }

    // Poles of Gamma(b_j - s) lie at s >= upper, those of Gamma(1 - a_j + s) at s <= lower.
    double upper = std::numeric_limits<double>::infinity();
    for (int j = 0; j < spec.m; ++j) upper = std::min(upper, spec.b[j]);
    double lower = -std::numeric_limits<double>::infinity();
    for (int j = 0; j < spec.n; ++j) lower = std::max(lower, spec.a[j] - 1.0);
    if (!(lower < upper)) {
        throw UnsupportedClassError("meijer_g: pole sequences overlap, no separating vertical contour");
    }
    const double lo_search = std::isfinite(lower) ? lower : upper - 30.0;
    const double margin = std::min(0.25, 0.25 * (upper - lo_search));

    const Integrand f(spec, log_prefactor);
    MeijerValue out;
    out.contour = choose_contour(f, lo_search + margin, upper - margin);
    const double c = out.contour;

    const double log_ref = f.log_value(cplx(c, 0.0)).real();
    const auto eval = [&](double t) {
        ++out.evaluations;
        return std::exp(f.log_value(cplx(c, t)) - log_ref);
    };

    // Truncation point from a coarse outward scan.
    double peak = 0.0;
    double t_end = 0.0;
    for (double t = 0.0;; t += 0.5) {
        if (t > kMaxT) {
            throw AccuracyError("meijer_g: integrand did not decay along the contour", 0.0,
                                std::numeric_limits<double>::infinity());
        }
        const double lg = f.log_value(cplx(c, t)).real() - log_ref;
        peak = std::max(peak, lg);
        if (t >= 1.0 && lg < peak - kTailLog) {
            t_end = t;
            break;
        }
    }

    // Trapezoidal sums with h halving; conjugate symmetry F(c - it) = conj F(c + it).
    double h = 0.25;
    double sum = 0.5 * eval(0.0).real();
    double abs_sum = std::abs(sum);
    for (double t = h; t <= t_end; t += h) {
        const cplx v = eval(t);
        sum += v.real();
        abs_sum += std::abs(v);
    }
    double estimate = sum * h / std::numbers::pi;
    double diff = std::numeric_limits<double>::infinity();
    double roundoff = 0.0;
    for (int level = 1; level <= kMaxLevels; ++level) {
        const double h_new = 0.5 * h;
        for (double t = h_new; t <= t_end; t += h) {
            const cplx v = eval(t);
            sum += v.real();
            abs_sum += std::abs(v);
        }
        h = h_new;
        const double refined = sum * h / std::numbers::pi;
        diff = std::abs(refined - estimate);
        estimate = refined;
        roundoff = 16.0 * std::numeric_limits<double>::epsilon() * abs_sum * h / std::numbers::pi;
        if (diff <= std::max(kConvergedRelError * std::abs(estimate), 4.0 * roundoff)) break;
    }

    const double scale = std::exp(log_ref);
    out.value = estimate * scale;
    out.error_bound = (diff + roundoff) * scale;
    if (!(diff + roundoff <= kTargetRelError * std::abs(estimate))) {
        throw AccuracyError("meijer_g: relative error bound " + std::to_string((diff + roundoff) / std::abs(estimate)) +
                                " exceeds target",
                            out.value, out.error_bound);
    }
    return out;
}

double meijer_g(const MeijerSpec& spec) { return meijer_g_detailed(spec).value; }

}  // namespace ambc
