#pragma once

#include <cstdint>
#include <random>

namespace dircx {

// Seedable, portable generator. mt19937_64 output is fully specified by the
// standard, so streams are bit-identical across platforms given the same seed.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next() { return gen_(); }

    // Uniform in [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

    // Uniform integer in [0, n). Modulo bias is negligible for the small n
    // used here and keeps the draw count per call fixed.
    std::uint64_t uniform_int(std::uint64_t n) { return gen_() % n; }

    // Derive an independent per-task seed from a root seed and a task index
    // (splitmix64 finalizer).
    static std::uint64_t derive(std::uint64_t root, std::uint64_t index) {
        std::uint64_t z = root + 0x9e3779b97f4a7c15ULL * (index + 1);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

private:
    std::mt19937_64 gen_;
};

} // namespace dircx
