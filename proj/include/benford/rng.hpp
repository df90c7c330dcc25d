#pragma once

#include <cstdint>

namespace benford {

/// Master or stream seed; any 64-bit value is admissible.
struct Seed {
    std::uint64_t value = 0;
};

/// SplitMix64 finalizer of (master + index * 0x9E3779B97F4A7C15), mod 2^64.
/// Bit-exact across platforms; used to derive per-stream and per-replica
/// seeds from a master seed.
Seed derive_seed(Seed master, std::uint64_t index);

/// xoshiro256++ with the four state words seeded from derive_seed(seed, 0..3).
/// Single-consumer; copying forks the sequence deterministically.
class Xoshiro256pp {
  public:
    explicit Xoshiro256pp(Seed seed);

    std::uint64_t next_u64();

    /// Uniform double in [0,1), 53 random bits.
    double next_unit();

    /// Uniform double in (0,1); rejects exact zeros.
    double next_unit_open();

    /// Standard normal via the Marsaglia polar method (second variate cached).
    double next_normal();

  private:
    std::uint64_t state_[4];
    double spare_ = 0.0;
    bool has_spare_ = false;
};

}  // namespace benford
