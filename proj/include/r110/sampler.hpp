#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "r110/weights.hpp"

namespace r110 {

/// SplitMix64 (Steele, Lea & Flood; the java.util.SplittableRandom
/// finalizer). Chosen over std::mt19937_64 because its output is fully
/// pinned down by three multiply-xorshift lines, so sequences can be
/// reproduced byte-for-byte from the documentation alone.
class SplitMix64 {
public:
    explicit SplitMix64(uint64_t seed) : state_(seed) {}

    uint64_t next() {
        uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, 1): the top 53 bits scaled by 2^-53.
    double next_double() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

private:
    uint64_t state_ = 0;
};

/// Seed for parallel task k: the (k+1)-th raw output of SplitMix64(seed).
uint64_t child_seed(uint64_t seed, int k);

/// n inverse-CDF draws over the fixed event order of d; identical
/// (d, seed, n) give identical sequences on every platform.
std::vector<ErrorEvent> sample(const ModifiedDistribution& d, uint64_t seed, int n);

/// Header "event", then one site label per draw.
std::string samples_csv(const ErrorModel& m, const std::vector<ErrorEvent>& events);

}  // namespace r110
