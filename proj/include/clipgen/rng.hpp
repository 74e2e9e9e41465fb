#pragma once

#include <cmath>
#include <cstdint>

namespace clipgen {

// Counter-based deterministic generator: every draw is a pure function of
// (seed, stream, counter), so results are reproducible across platforms and
// independent of call-site interleaving as long as the counters line up.
// The mixer is the splitmix64 finalizer over a Weyl sequence.
class CounterRng {
public:
    explicit CounterRng(uint64_t seed, uint64_t stream = 0)
        : key_(mix64(seed ^ (0x9E3779B97F4A7C15ULL * (stream + 1)))) {}

    uint64_t next_u64() {
        uint64_t z = key_ + counter_ * 0x9E3779B97F4A7C15ULL;
        counter_ += 1;
        return mix64(z);
    }

    // uniform in [0, 1)
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    // uniform integer in [0, n)
    uint64_t uniform_int(uint64_t n) { return next_u64() % n; }

    // standard normal via Box-Muller (no cached spare, keeps counters simple)
    double normal() {
        double u1 = uniform();
        double u2 = uniform();
        // avoid log(0)
        if (u1 <= 0.0) u1 = 0x1.0p-53;
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586477 * u2);
    }

    double normal(double mean, double stddev) { return mean + stddev * normal(); }

private:
    static uint64_t mix64(uint64_t z) {
        z ^= z >> 30;
        z *= 0xBF58476D1CE4E5B9ULL;
        z ^= z >> 27;
        z *= 0x94D049BB133111EBULL;
        z ^= z >> 31;
        return z;
    }

    uint64_t key_;
    uint64_t counter_ = 0;
};

// Fixed stream ids so independent consumers never collide on a seed.
namespace rng_stream {
constexpr uint64_t kDataSplit = 1;
constexpr uint64_t kClipInit = 2;
constexpr uint64_t kClipBatch = 3;
constexpr uint64_t kVqInit = 4;
constexpr uint64_t kVqBatch = 5;
constexpr uint64_t kGenInit = 6;
constexpr uint64_t kGenBatch = 7;
constexpr uint64_t kSample = 8;
constexpr uint64_t kGradCheck = 9;
constexpr uint64_t kRevive = 10;
constexpr uint64_t kEval = 11;
}  // namespace rng_stream

}  // namespace clipgen
