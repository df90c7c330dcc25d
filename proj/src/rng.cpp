#include "benford/rng.hpp"

#include <cmath>

namespace benford {

namespace {

inline std::uint64_t rotl(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
}

inline std::uint64_t splitmix64_finalize(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

}  // namespace

Seed derive_seed(Seed master, std::uint64_t index) {
    return {splitmix64_finalize(master.value + index * 0x9E3779B97F4A7C15ULL)};
}

Xoshiro256pp::Xoshiro256pp(Seed seed) {
    for (std::uint64_t i = 0; i < 4; ++i)
        state_[i] = derive_seed(seed, i).value;
    // All-zero state is unreachable: the finalizer maps at most one of the
    // four distinct inputs to zero.
}

std::uint64_t Xoshiro256pp::next_u64() {
    const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
}

double Xoshiro256pp::next_unit() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double Xoshiro256pp::next_unit_open() {
    double u;
    do {
        u = next_unit();
    } while (u == 0.0);
    return u;
}

double Xoshiro256pp::next_normal() {
    if (has_spare_) {
        has_spare_ = false;
        return spare_;
    }
    double u, v, s;
    do {
        u = 2.0 * next_unit() - 1.0;
        v = 2.0 * next_unit() - 1.0;
        s = u * u + v * v;
    } while (s >= 1.0 || s == 0.0);
    const double f = std::sqrt(-2.0 * std::log(s) / s);
    spare_ = v * f;
    has_spare_ = true;
    return u * f;
}

}  // namespace benford
