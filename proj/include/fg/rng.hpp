#pragma once

#include <cstdint>

namespace fg {

/// Stateless splitmix64 finalizer. Used for seed derivation.
std::uint64_t mix64(std::uint64_t x);

/// Seed for item `index` of a run rooted at `root`. Depends only on the
/// two arguments, so parallel workers can derive their own streams.
std::uint64_t derive_seed(std::uint64_t root, std::uint64_t index);

/// Deterministic 64-bit generator: xoshiro256++ with its state expanded
/// from the seed through splitmix64. The same seed yields the same
/// stream on every platform; all draws below consume only next_u64().
class Rng {
public:
    explicit Rng(std::uint64_t seed);

    std::uint64_t next_u64();

    /// Uniform real in [lo, hi). 53-bit resolution.
    double uniform(double lo, double hi);

    /// Uniform integer in [lo, hi], both ends inclusive. Unbiased
    /// (masked rejection).
    std::int64_t uniform_int(std::int64_t lo, std::int64_t hi);

private:
    std::uint64_t state_[4];
};

} // namespace fg
