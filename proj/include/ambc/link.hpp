#pragma once

#include "ambc/channel.hpp"
#include "ambc/linalg.hpp"

namespace ambc {

// Matched transmit beamformer and receive combiners for one block.
struct BeamformingSolution {
    double sigma1m = 0.0;
    CVector u1m{1};
    CVector v1m{1};
    CVector w{1};   // = v1m
    CVector vs{1};  // = u1m
    // hBC / ||hBC||. Left as the zero vector when hBC = 0, which only
    // happens for a zero BTx->receiver variance; vc_defined is then false.
    CVector vc{1};
    bool vc_defined = false;
    bool degenerate = false;  // top singular value of H1 (near-)repeated
};

struct SnrPair {
    double snr1_pos = 0.0;  // SNR1 given c = +1
    double snr1_neg = 0.0;  // SNR1 given c = -1
    double snr2 = 0.0;
};

// Scalar channel gains that fully determine both SNRs for any (P, alpha, K,
// noise_var). Lets Monte Carlo reuse one set of draws across sweep points.
struct LinkGains {
    double sigma1m = 0.0;
    Complex bc_gain;          // vs^H hBC
    Complex rb_gain;          // hRB^H w
    double hbc_norm_sq = 0.0; // ||hBC||^2
};

BeamformingSolution solve_beamforming(const SystemConfig& cfg, const ChannelRealization& ch);

// H1 + alpha c hBC hRB^H
CMatrix equivalent_channel(const ChannelRealization& ch, double alpha, double c);

LinkGains link_gains(const ChannelRealization& ch, const BeamformingSolution& bf);

double snr_primary_given_c(const SystemConfig& cfg, const LinkGains& g, double c);
double snr_primary_given_c(const SystemConfig& cfg, const ChannelRealization& ch, const BeamformingSolution& bf,
                           double c);

double snr_secondary(const SystemConfig& cfg, const LinkGains& g);
double snr_secondary(const SystemConfig& cfg, const ChannelRealization& ch, const BeamformingSolution& bf);

SnrPair snr_pair(const SystemConfig& cfg, const LinkGains& g);

}  // namespace ambc
