#include "ambc/specfun.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "ambc/errors.hpp"

namespace ambc {

namespace {

using std::numbers::pi;

constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
    771.32342877765313,   -176.61502916214059,   12.507343278686905,
    -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7,
};

// Coefficients of 1/Gamma(z) = sum_k c_k z^k, k = 1..26 (Abramowitz & Stegun 6.1.34).
constexpr std::array<double, 26> kRecipGamma = {
    1.0000000000000000,  0.5772156649015329,  -0.6558780715202538, -0.0420026350340952,
    0.1665386113822915,  -0.0421977345555443, -0.0096219715278770, 0.0072189432466630,
    -0.0011651675918591, -0.0002152416741149, 0.0001280502823882,  -0.0000201348547807,
    -0.0000012504934821, 0.0000011330272320,  -0.0000002056338417, 0.0000000061160950,
    0.0000000050020075,  -0.0000000011812746, 0.0000000001043427,  0.0000000000077823,
    -0.0000000000036968, 0.0000000000005100,  -0.0000000000000206, -0.0000000000000054,
    0.0000000000000014,  0.0000000000000001,
};

template <typename T>
T lanczos_sum(T zm1) {
    T x = kLanczos[0];
    for (std::size_t i = 1; i < kLanczos.size(); ++i) x += kLanczos[i] / (zm1 + static_cast<double>(i));
    return x;
}

void require_positive(double x, const char* fn) {
    if (!(x > 0.0)) throw DomainError(std::string(fn) + ": argument must be positive, got " + std::to_string(x));
}

// Temme's auxiliary functions for |mu| <= 1/2:
// gam1 = (1/Gamma(1-mu) - 1/Gamma(1+mu)) / (2 mu), gam2 = (1/Gamma(1-mu) + 1/Gamma(1+mu)) / 2.
struct TemmeGammas {
    double gam1, gam2, gampl, gammi;
};

TemmeGammas temme_gammas(double mu) {
    double even = 0.0;  // sum over k even of c_k mu^(k-2)
    double odd = 0.0;   // sum over k odd of c_k mu^(k-1)
    const double mu2 = mu * mu;
    double pw = 1.0;
    for (std::size_t j = 0; j < kRecipGamma.size(); j += 2) {
        odd += kRecipGamma[j] * pw;
        even += kRecipGamma[j + 1] * pw;
        pw *= mu2;
    }
    return {-even, odd, odd + mu * even, odd - mu * even};
}

// e^x K_mu(x) and e^x K_{mu+1}(x) for |mu| <= 1/2.
struct ScaledPair {
    double k_mu;
    double k_mu1;
};

ScaledPair scaled_k_pair(double mu, double x) {
    constexpr double eps = 1e-16;
    constexpr int max_iter = 100000;
    const double mu2 = mu * mu;
    if (x <= 2.0) {
        const double x2 = 0.5 * x;
        const double pimu = pi * mu;
        const double fact = std::abs(pimu) < eps ? 1.0 : pimu / std::sin(pimu);
        double d = -std::log(x2);
        double e = mu * d;
        const double fact2 = std::abs(e) < eps ? 1.0 : std::sinh(e) / e;
        const TemmeGammas tg = temme_gammas(mu);
        double ff = fact * (tg.gam1 * std::cosh(e) + tg.gam2 * fact2 * d);
        double sum = ff;
        e = std::exp(e);
        double p = 0.5 * e / tg.gampl;
        double q = 0.5 / (e * tg.gammi);
        double c = 1.0;
        d = x2 * x2;
        double sum1 = p;
        for (int i = 1; i <= max_iter; ++i) {
            const double di = i;
            ff = (di * ff + p + q) / (di * di - mu2);
            c *= d / di;
            p /= di - mu;
            q /= di + mu;
            const double del = c * ff;
            sum += del;
            sum1 += c * (p - di * ff);
            if (std::abs(del) < std::abs(sum) * eps) break;
        }
        const double scale = std::exp(x);
        return {sum * scale, sum1 * (2.0 / x) * scale};
    }
    double b = 2.0 * (1.0 + x);
    double d = 1.0 / b;
    double h = d;
    double delh = d;
    double q1 = 0.0;
    double q2 = 1.0;
    const double a1 = 0.25 - mu2;
    double q = a1;
    double c = a1;
    double a = -a1;
    double s = 1.0 + q * delh;
    for (int i = 2; i <= max_iter; ++i) {
        a -= 2.0 * (i - 1);
        c = -a * c / i;
        const double qnew = (q1 - b * q2) / a;
        q1 = q2;
        q2 = qnew;
        q += c * qnew;
        b += 2.0;
        d = 1.0 / (b + a * d);
        delh = (b * d - 1.0) * delh;
        h += delh;
        const double dels = q * delh;
        s += dels;
        if (std::abs(dels / s) < eps) break;
    }
    h *= a1;
    const double k_mu = std::sqrt(pi / (2.0 * x)) / s;
    return {k_mu, k_mu * (mu + x + 0.5 - h) / x};
}

}  // namespace

double gamma_fn(double x) {
    require_positive(x, "gamma_fn");
    if (x < 0.5) return pi / (std::sin(pi * x) * gamma_fn(1.0 - x));
    const double z = x - 1.0;
    const double t = z + kLanczosG + 0.5;
    const double half_pow = std::pow(t, 0.5 * (z + 0.5));
    return std::sqrt(2.0 * pi) * half_pow * std::exp(-t) * half_pow * lanczos_sum(z);
}

double log_gamma(double x) {
    require_positive(x, "log_gamma");
    if (x < 0.5) return std::log(pi / std::sin(pi * x)) - log_gamma(1.0 - x);
    const double z = x - 1.0;
    const double t = z + kLanczosG + 0.5;
    return 0.5 * std::log(2.0 * pi) + (z + 0.5) * std::log(t) - t + std::log(lanczos_sum(z));
}

std::complex<double> log_sin_pi(std::complex<double> z) {
    constexpr std::complex<double> i{0.0, 1.0};
    const double y = z.imag();
    if (y > 20.0) return -std::numbers::ln2 + i * (0.5 * pi) - i * pi * z;
    if (y < -20.0) return -std::numbers::ln2 - i * (0.5 * pi) + i * pi * z;
    return std::log(std::sin(pi * z));
}

std::complex<double> log_gamma(std::complex<double> z) {
    if (z.real() < 0.5) return std::log(pi) - log_sin_pi(z) - log_gamma(1.0 - z);
    const std::complex<double> zm1 = z - 1.0;
    const std::complex<double> t = zm1 + kLanczosG + 0.5;
    return 0.5 * std::log(2.0 * pi) + (zm1 + 0.5) * std::log(t) - t + std::log(lanczos_sum(zm1));
}

double log_bessel_k(double nu, double x) {
    require_positive(x, "log_bessel_k");
    nu = std::abs(nu);
    const double nl = std::floor(nu + 0.5);
    const double mu = nu - nl;
    const ScaledPair pr = scaled_k_pair(mu, x);
    double log_k = std::log(pr.k_mu) - x;
    double ratio = pr.k_mu1 / pr.k_mu;  // K_{mu+1} / K_mu
    for (int i = 0; i < static_cast<int>(nl); ++i) {
        log_k += std::log(ratio);
        ratio = 2.0 * (mu + i + 1) / x + 1.0 / ratio;
    }
    return log_k;
}

double bessel_k(double nu, double x) {
    require_positive(x, "bessel_k");
    nu = std::abs(nu);
    const double nl = std::floor(nu + 0.5);
    const double mu = nu - nl;
    const ScaledPair pr = scaled_k_pair(mu, x);
    double km = pr.k_mu;
    double k1 = pr.k_mu1;
    for (int i = 1; i <= static_cast<int>(nl); ++i) {
        const double next = 2.0 * (mu + i) / x * k1 + km;
        km = k1;
        k1 = next;
        if (!std::isfinite(k1)) return std::exp(log_bessel_k(nu, x));
    }
    if (x < 700.0) return km * std::exp(-x);
    return std::exp(std::log(km) - x);
}

}  // namespace ambc
