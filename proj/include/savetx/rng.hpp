#pragma once

#include <cstdint>
#include <limits>
#include <random>

namespace savetx {

// splitmix64 finalizer, used to whiten seed material.
constexpr std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Independent sub-streams within one trial. Changing how many draws one
// stream consumes must not perturb the others.
enum class Stream : std::uint64_t {
    generic = 0,
    arrivals = 1,
    codebook = 2,
    noise = 3,
    fallback = 4,
    message = 5,
};

// Counter-based seeding: the stream for trial t is a pure function of
// (root seed, t, tag), so serial and concurrent runs draw identical values.
constexpr std::uint64_t derive_seed(std::uint64_t root, std::uint64_t trial,
                                    Stream tag = Stream::generic) {
    std::uint64_t s = splitmix64(root ^ 0x8f1bbcdcbfa53e0bULL);
    s = splitmix64(s ^ trial);
    s = splitmix64(s ^ static_cast<std::uint64_t>(tag) * 0xd2b74407b1ce6e93ULL);
    return s;
}

// Deterministic stream of doubles on top of mt19937_64. The transformations
// below are spelled out instead of using std::*_distribution so that a given
// seed reproduces the same values on every standard library.
class RandomStream {
public:
    explicit RandomStream(std::uint64_t seed) : engine_(seed) {}

    // Uniform on [0, 1) with 53 random bits.
    double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    // Uniform on (0, 1]; safe as a log() argument.
    double uniform_positive() {
        return static_cast<double>((engine_() >> 11) + 1) * 0x1.0p-53;
    }

    // Standard normal via Box-Muller; the second variate of each pair is cached.
    double normal() {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        const double r = std::sqrt(-2.0 * std::log(uniform_positive()));
        const double theta = 6.283185307179586476925286766559 * uniform01();
        spare_ = r * std::sin(theta);
        has_spare_ = true;
        return r * std::cos(theta);
    }

    double normal(double mean, double stddev) { return mean + stddev * normal(); }

    double exponential(double mean) { return -mean * std::log(uniform_positive()); }

    // Unbiased integer in [0, bound) by rejection.
    std::uint64_t next_index(std::uint64_t bound) {
        const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
        const std::uint64_t limit = max - max % bound;
        std::uint64_t v = engine_();
        while (v >= limit) v = engine_();
        return v % bound;
    }

private:
    std::mt19937_64 engine_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

}  // namespace savetx
