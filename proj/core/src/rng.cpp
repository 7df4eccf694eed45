#include "redsim/rng.hpp"

#include <cmath>
#include <stdexcept>

namespace redsim {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

RngStream::RngStream(std::uint64_t seed)
    : seed_(seed), engine_(splitmix64(seed)) {}

double RngStream::uniform01() {
    // 53 mantissa bits, shifted into the open interval.
    const std::uint64_t bits = engine_() >> 11;
    return (static_cast<double>(bits) + 0.5) * (1.0 / 9007199254740992.0);
}

double RngStream::exponential(double rate) {
    if (!(rate > 0.0))
        throw std::invalid_argument("exponential: rate must be positive");
    return -std::log(uniform01()) / rate;
}

std::uint64_t RngStream::uniform_below(std::uint64_t n) {
    if (n == 0)
        throw std::invalid_argument("uniform_below: empty range");
    // Rejection against the largest multiple of n, unbiased.
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t x;
    do {
        x = engine_();
    } while (x >= limit);
    return x % n;
}

std::uint64_t RngStream::next_u64() { return engine_(); }

RngStream RngStream::split(std::uint64_t index) const {
    return RngStream(splitmix64(seed_ ^ splitmix64(index + 0x51AFD64FULL)));
}

} // namespace redsim
