#include "ambc/link.hpp"

#include <cmath>

#include "ambc/errors.hpp"

namespace ambc {

namespace {

void check_dimensions(const SystemConfig& cfg, const ChannelRealization& ch) {
    const auto m = static_cast<std::size_t>(cfg.M);
    const auto n = static_cast<std::size_t>(cfg.N);
    if (ch.H1.rows() != n || ch.H1.cols() != m || ch.hRB.size() != m || ch.hBC.size() != n) {
        throw DimensionError("channel realization does not match M = " + std::to_string(cfg.M) +
                             ", N = " + std::to_string(cfg.N));
    }
}

}  // namespace

BeamformingSolution solve_beamforming(const SystemConfig& cfg, const ChannelRealization& ch) {
    check_dimensions(cfg, ch);
    const SingularTriplet top = dominant_singular_triplet(ch.H1);

    BeamformingSolution bf;
    bf.sigma1m = top.sigma;
    bf.u1m = top.left;
    bf.v1m = top.right;
    bf.w = top.right;
    bf.vs = top.left;
    bf.degenerate = top.degenerate;

    const double hbc_norm = ch.hBC.norm();
    bf.vc = CVector(ch.hBC.size());
    if (hbc_norm > 0.0) {
        bf.vc = (1.0 / hbc_norm) * ch.hBC;
        bf.vc_defined = true;
    }
    return bf;
}

CMatrix equivalent_channel(const ChannelRealization& ch, double alpha, double c) {
    if (ch.H1.rows() != ch.hBC.size() || ch.H1.cols() != ch.hRB.size()) {
        throw DimensionError("equivalent_channel: H1 is " + std::to_string(ch.H1.rows()) + "x" +
                             std::to_string(ch.H1.cols()) + " but hBC, hRB have lengths " +
                             std::to_string(ch.hBC.size()) + ", " + std::to_string(ch.hRB.size()));
    }
    CMatrix h = ch.H1;
    const double scale = alpha * c;
    if (scale == 0.0) return h;
    for (std::size_t r = 0; r < h.rows(); ++r)
        for (std::size_t col = 0; col < h.cols(); ++col) h(r, col) += scale * ch.hBC[r] * std::conj(ch.hRB[col]);
    return h;
}

LinkGains link_gains(const ChannelRealization& ch, const BeamformingSolution& bf) {
    return {bf.sigma1m, inner(bf.vs, ch.hBC), inner(ch.hRB, bf.w), ch.hBC.squared_norm()};
}

double snr_primary_given_c(const SystemConfig& cfg, const LinkGains& g, double c) {
    // vs^H H1 w = sigma1m for the matched pair.
    const Complex eff = g.sigma1m + cfg.alpha * c * g.bc_gain * g.rb_gain;
    return cfg.P * std::norm(eff) / cfg.noise_var;
}

double snr_primary_given_c(const SystemConfig& cfg, const ChannelRealization& ch, const BeamformingSolution& bf,
                           double c) {
    return snr_primary_given_c(cfg, link_gains(ch, bf), c);
}

double snr_secondary(const SystemConfig& cfg, const LinkGains& g) {
    return cfg.K * cfg.P * cfg.alpha * cfg.alpha * g.hbc_norm_sq * std::norm(g.rb_gain) / cfg.noise_var;
}

double snr_secondary(const SystemConfig& cfg, const ChannelRealization& ch, const BeamformingSolution& bf) {
    return snr_secondary(cfg, link_gains(ch, bf));
}

SnrPair snr_pair(const SystemConfig& cfg, const LinkGains& g) {
    return {snr_primary_given_c(cfg, g, 1.0), snr_primary_given_c(cfg, g, -1.0), snr_secondary(cfg, g)};
}

}  // namespace ambc
