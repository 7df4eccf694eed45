#ifndef REDSIM_RNG_HPP
#define REDSIM_RNG_HPP

#include <cstdint>
#include <random>

namespace redsim {

/// Seedable random stream. One stream per simulation replication; split()
/// derives statistically independent child streams so that replication
/// seeds never collide with the parent sequence.
class RngStream {
public:
    explicit RngStream(std::uint64_t seed);

    /// Uniform on the open interval (0,1). Never returns 0 or 1, so
    /// log(u) is always finite.
    double uniform01();

    /// Inverse-CDF exponential draw, -log(u)/rate. Throws std::invalid_argument
    /// for rate <= 0.
    double exponential(double rate);

    /// Uniform integer in [0, n).
    std::uint64_t uniform_below(std::uint64_t n);

    std::uint64_t next_u64();

    /// Independent child stream for replication `index`. Deterministic in
    /// (seed, index).
    RngStream split(std::uint64_t index) const;

    std::uint64_t seed() const { return seed_; }

private:
    std::uint64_t seed_;
    std::mt19937_64 engine_;
};

/// SplitMix64 finalizer, used for seed derivation.
std::uint64_t splitmix64(std::uint64_t x);

} // namespace redsim

#endif
