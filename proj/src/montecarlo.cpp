#include "ambc/montecarlo.hpp"

#include <cmath>
#include <numbers>

#include "ambc/errors.hpp"
#include "ambc/parallel.hpp"

namespace ambc {

namespace {

constexpr int kMaxAttempts = 8;

SeedSpec rekey(SeedSpec seed, int attempt) {
    if (attempt == 0) return seed;
    return {splitmix64_mix(seed.master_seed ^ (static_cast<std::uint64_t>(attempt) * 0x632be59bd9b4e019ULL)),
            seed.stream_index};
}

double log2_1p(double x) { return std::log1p(x) * std::numbers::log2e; }

}  // namespace

GainDraws draw_gains(const SystemConfig& cfg, std::size_t n, SeedSpec seed, std::size_t workers) {
    cfg.validate_limits();
    GainDraws out;
    out.seed = seed;
    out.gains.resize(n);
    std::vector<int> retries(n, 0);
    parallel_for(n, workers, [&](std::size_t i) {
        const SeedSpec base{seed.master_seed, seed.stream_index + i};
        for (int attempt = 0;; ++attempt) {
            try {
                const ChannelRealization ch = sample_channels(cfg, rekey(base, attempt));
                const BeamformingSolution bf = solve_beamforming(cfg, ch);
                out.gains[i] = link_gains(ch, bf);
                retries[i] = attempt;
                return;
            } catch (const ConvergenceError&) {
                if (attempt + 1 >= kMaxAttempts) throw;
            } catch (const DegenerateInputError&) {
                if (attempt + 1 >= kMaxAttempts) throw;
            }
        }
    });
    for (int r : retries) out.skipped += static_cast<std::size_t>(r);
    return out;
}

RateEstimate summarize(std::span<const double> values, SeedSpec seed, std::size_t skipped) {
    RateEstimate est;
    est.seed = seed;
    est.skipped = skipped;
    est.n_samples = values.size();
    if (values.empty()) return est;
    double sum = 0.0;
    for (double v : values) sum += v;
    const double mean = sum / static_cast<double>(values.size());
    double ss = 0.0;
    for (double v : values) ss += (v - mean) * (v - mean);
    est.mean_bps_hz = mean;
    if (values.size() >= 2) {
        const double sd = std::sqrt(ss / static_cast<double>(values.size() - 1));
        est.std_error = sd / std::sqrt(static_cast<double>(values.size()));
    }
    return est;
}

RateEstimate r1_from_gains(const SystemConfig& cfg, const GainDraws& draws) {
    cfg.validate_limits();
    std::vector<double> per_draw(draws.gains.size());
    for (std::size_t i = 0; i < per_draw.size(); ++i) {
        const SnrPair s = snr_pair(cfg, draws.gains[i]);
        per_draw[i] = 0.5 * (log2_1p(s.snr1_pos) + log2_1p(s.snr1_neg));
    }
    return summarize(per_draw, draws.seed, draws.skipped);
}

RateEstimate r2_from_gains(const SystemConfig& cfg, const GainDraws& draws) {
    cfg.validate_limits();
    std::vector<double> per_draw(draws.gains.size());
    for (std::size_t i = 0; i < per_draw.size(); ++i)
        per_draw[i] = log2_1p(snr_secondary(cfg, draws.gains[i])) / cfg.K;
    return summarize(per_draw, draws.seed, draws.skipped);
}

RateEstimate estimate_r1(const SystemConfig& cfg, std::size_t n, SeedSpec seed, std::size_t workers) {
    if (n < 2) throw DomainError("estimate_r1: need at least 2 samples");
    return r1_from_gains(cfg, draw_gains(cfg, n, seed, workers));
}

RateEstimate estimate_r2(const SystemConfig& cfg, std::size_t n, SeedSpec seed, std::size_t workers) {
    if (n < 2) throw DomainError("estimate_r2: need at least 2 samples");
    return r2_from_gains(cfg, draw_gains(cfg, n, seed, workers));
}

std::vector<double> sample_statistic(const SystemConfig& cfg, SeedSpec seed, Statistic which, std::size_t n,
                                     std::size_t workers) {
    if (n < 1) throw DomainError("sample_statistic: need at least 1 sample");
    if (!(cfg.varBC > 0.0) || !(cfg.varRB > 0.0))
        throw DomainError("sample_statistic: normalised statistics need positive var_bc and var_rb");
    const GainDraws draws = draw_gains(cfg, n, seed, workers);
    std::vector<double> out(n);
    for (std::size_t i = 0; i < n; ++i) {
        const LinkGains& g = draws.gains[i];
        const double z_bc = 2.0 * std::norm(g.bc_gain) / cfg.varBC;
        const double z_rb = 2.0 * std::norm(g.rb_gain) / cfg.varRB;
        switch (which) {
            case Statistic::Z: out[i] = z_bc; break;
            case Statistic::A: out[i] = z_bc * z_rb; break;
            case Statistic::Sigma1mSq: out[i] = g.sigma1m * g.sigma1m; break;
            case Statistic::SecondaryProduct: out[i] = 2.0 * g.hbc_norm_sq / cfg.varBC * z_rb; break;
        }
    }
    return out;
}

}  // namespace ambc
