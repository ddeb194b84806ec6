#pragma once

#include <complex>
#include <cstdint>

namespace ambc {

struct SeedSpec {
    std::uint64_t master_seed = 0;
    std::uint64_t stream_index = 0;

    bool operator==(const SeedSpec&) const = default;
};

// Separates the random streams that consume the same SeedSpec.
enum class RngDomain : std::uint64_t {
    Channel = 1,
    BtxSymbol = 2,
};

std::uint64_t splitmix64_mix(std::uint64_t z) noexcept;

// Counter-based generator: draw i of stream (master, index, domain) is a pure
// function of those four values, so any partition of draws over workers
// reproduces the same numbers.
class CounterRng {
public:
    explicit CounterRng(SeedSpec seed, RngDomain domain = RngDomain::Channel) noexcept;

    std::uint64_t next_u64() noexcept;
    // Uniform on the open interval (0, 1).
    double uniform() noexcept;
    // Circularly-symmetric complex Gaussian, E|z|^2 = variance.
    std::complex<double> complex_normal(double variance) noexcept;

    std::uint64_t counter() const noexcept { return counter_; }

private:
    std::uint64_t key_;
    std::uint64_t counter_ = 0;
};

}  // namespace ambc
