#pragma once

#include <string>

#include "ambc/linalg.hpp"
#include "ambc/random.hpp"

namespace ambc {

// Scalar parameters of the cooperative backscatter link.
struct SystemConfig {
    int M = 64;              // RF source antennas
    int N = 4;               // receiver antennas
    int K = 15;              // BTx symbol period in RF source symbols
    double alpha = 0.5;      // reflection coefficient
    double P = 10.0;         // transmit power, E|s|^2
    double noise_var = 1.0;  // sigma^2
    double var1 = 1.0;       // per-entry variance of H1
    double varRB = 1.0;      // RF source -> BTx
    double varBC = 1.0;      // BTx -> receiver

    // Strict construction-time constraints: alpha in (0,1], P, variances > 0.
    // Throws ConfigError naming the offending field.
    void validate() const;

    // Relaxed constraints accepted by the numerical routines, which also
    // evaluate the closed limits alpha = 0, P = 0 and zero channel variances.
    void validate_limits() const;

    bool operator==(const SystemConfig&) const = default;
};

double snr_db(const SystemConfig& cfg);

struct ChannelRealization {
    CMatrix H1;  // N x M
    CVector hRB;  // M
    CVector hBC;  // N
};

// One block of i.i.d. Rayleigh fading, generated in the order H1 (row-major),
// hRB, hBC from the Channel-domain stream of `seed`.
ChannelRealization sample_channels(const SystemConfig& cfg, SeedSpec seed);

// BPSK backscatter symbol, +1 or -1 with equal probability.
double sample_btx_symbol(SeedSpec seed);

}  // namespace ambc
