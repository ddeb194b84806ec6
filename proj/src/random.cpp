#include "ambc/random.hpp"

#include <cmath>
#include <numbers>

namespace ambc {

namespace {
constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;
}

std::uint64_t splitmix64_mix(std::uint64_t z) noexcept {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

CounterRng::CounterRng(SeedSpec seed, RngDomain domain) noexcept {
    std::uint64_t k = splitmix64_mix(seed.master_seed + kGolden);
    k = splitmix64_mix(k ^ (seed.stream_index * 0xd1b54a32d192ed03ULL + 1));
    key_ = splitmix64_mix(k ^ static_cast<std::uint64_t>(domain) * 0xaef17502108ef2d9ULL);
}

std::uint64_t CounterRng::next_u64() noexcept {
    ++counter_;
    return splitmix64_mix(key_ + counter_ * kGolden);
}

double CounterRng::uniform() noexcept {
    return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
}

std::complex<double> CounterRng::complex_normal(double variance) noexcept {
    // Box-Muller; real and imaginary parts each carry variance/2.
    const double u1 = uniform();
    const double u2 = uniform();
    const double r = std::sqrt(-variance * std::log(u1));
    const double theta = 2.0 * std::numbers::pi * u2;
    return {r * std::cos(theta), r * std::sin(theta)};
}

}  // namespace ambc
