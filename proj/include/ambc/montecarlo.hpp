#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "ambc/channel.hpp"
#include "ambc/link.hpp"
#include "ambc/random.hpp"

namespace ambc {

struct RateEstimate {
    double mean_bps_hz = 0.0;
    double std_error = 0.0;  // sample std (n-1) / sqrt(n)
    std::size_t n_samples = 0;
    SeedSpec seed;
    // Draws that failed (singular-vector non-convergence, zero H1) and were
    // regenerated from a re-keyed stream.
    std::size_t skipped = 0;
};

// Per-draw link gains for n channel blocks. Draw i uses stream
// seed.stream_index + i; only M, N and the channel variances of cfg matter.
struct GainDraws {
    std::vector<LinkGains> gains;
    SeedSpec seed;
    std::size_t skipped = 0;
};

GainDraws draw_gains(const SystemConfig& cfg, std::size_t n, SeedSpec seed, std::size_t workers = 1);

// Exact two-point average over c in {+1,-1}, sample mean over fading.
RateEstimate r1_from_gains(const SystemConfig& cfg, const GainDraws& draws);
RateEstimate r2_from_gains(const SystemConfig& cfg, const GainDraws& draws);

RateEstimate estimate_r1(const SystemConfig& cfg, std::size_t n, SeedSpec seed, std::size_t workers = 1);
RateEstimate estimate_r2(const SystemConfig& cfg, std::size_t n, SeedSpec seed, std::size_t workers = 1);

// Mean and standard error of an ordered sample, summed in index order.
RateEstimate summarize(std::span<const double> values, SeedSpec seed, std::size_t skipped = 0);

enum class Statistic {
    Z,                 // |sqrt(2)/sigma_BC u1m^H hBC|^2            ~ Exp(mean 2)
    A,                 // Z * |sqrt(2)/sigma_RB hRB^H v1m|^2        density K0(sqrt a)/2
    Sigma1mSq,         // largest eigenvalue of H1 H1^H
    SecondaryProduct,  // (2/sigma_BC^2)||hBC||^2 (2/sigma_RB^2)|hRB^H v1m|^2
};

std::vector<double> sample_statistic(const SystemConfig& cfg, SeedSpec seed, Statistic which, std::size_t n,
                                     std::size_t workers = 1);

}  // namespace ambc
