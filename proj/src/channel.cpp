#include "ambc/channel.hpp"

#include <cmath>
#include <vector>

#include "ambc/errors.hpp"

namespace ambc {

namespace {

void require(bool ok, const char* field, const std::string& constraint, double value) {
    if (!ok) {
        throw ConfigError(std::string(field) + " = " + std::to_string(value) + " violates " + constraint, 0,
                          field);
    }
}

void validate_dimensions(const SystemConfig& cfg) {
    require(cfg.M >= 1, "M", "M >= 1", cfg.M);
    require(cfg.N >= 1, "N", "N >= 1", cfg.N);
    require(cfg.K >= 1, "K", "K >= 1", cfg.K);
}

}  // namespace

void SystemConfig::validate() const {
    validate_dimensions(*this);
    require(alpha > 0.0 && alpha <= 1.0, "alpha", "alpha in (0,1]", alpha);
    require(P > 0.0 && std::isfinite(P), "P", "P > 0", P);
    require(noise_var > 0.0 && std::isfinite(noise_var), "noise_var", "noise_var > 0", noise_var);
    require(var1 > 0.0 && std::isfinite(var1), "var1", "var1 > 0", var1);
    require(varRB > 0.0 && std::isfinite(varRB), "var_rb", "var_rb > 0", varRB);
    require(varBC > 0.0 && std::isfinite(varBC), "var_bc", "var_bc > 0", varBC);
}

void SystemConfig::validate_limits() const {
    validate_dimensions(*this);
    require(alpha >= 0.0 && alpha <= 1.0, "alpha", "alpha in [0,1]", alpha);
    require(P >= 0.0 && std::isfinite(P), "P", "P >= 0", P);
    require(noise_var > 0.0 && std::isfinite(noise_var), "noise_var", "noise_var > 0", noise_var);
    require(var1 >= 0.0 && std::isfinite(var1), "var1", "var1 >= 0", var1);
    require(varRB >= 0.0 && std::isfinite(varRB), "var_rb", "var_rb >= 0", varRB);
    require(varBC >= 0.0 && std::isfinite(varBC), "var_bc", "var_bc >= 0", varBC);
}

double snr_db(const SystemConfig& cfg) { return 10.0 * std::log10(cfg.P / cfg.noise_var); }

ChannelRealization sample_channels(const SystemConfig& cfg, SeedSpec seed) {
    cfg.validate_limits();
    const auto m = static_cast<std::size_t>(cfg.M);
    const auto n = static_cast<std::size_t>(cfg.N);
    CounterRng rng(seed, RngDomain::Channel);

    std::vector<Complex> h1(n * m);
    for (auto& z : h1) z = rng.complex_normal(cfg.var1);
    CVector hrb(m);
    for (std::size_t i = 0; i < m; ++i) hrb[i] = rng.complex_normal(cfg.varRB);
    CVector hbc(n);
    for (std::size_t i = 0; i < n; ++i) hbc[i] = rng.complex_normal(cfg.varBC);

    return {CMatrix(n, m, std::move(h1)), std::move(hrb), std::move(hbc)};
}

double sample_btx_symbol(SeedSpec seed) {
    CounterRng rng(seed, RngDomain::BtxSymbol);
    return (rng.next_u64() >> 63) != 0 ? 1.0 : -1.0;
}

}  // namespace ambc
