#ifndef DPC_RNG_HPP
#define DPC_RNG_HPP

#include <cstdint>
#include <string_view>
#include <vector>

namespace dpc {

// Self-contained PRNG stack. The standard <random> distributions are
// implementation-defined, so every draw here is spelled out explicitly:
// identical seeds give identical streams on every platform.

// Seed expander (Steele et al.), also used as the sub-seed mixer.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

private:
    std::uint64_t state_;
};

// xoshiro256++ seeded through SplitMix64.
class Rng {
public:
    explicit Rng(std::uint64_t seed);

    std::uint64_t next_u64();

    // Uniform on [0, 1), 53-bit resolution.
    double uniform01();

    // Uniform integer on [0, bound); bound must be > 0. Rejection sampling,
    // no modulo bias.
    std::uint64_t uniform_int(std::uint64_t bound);

    double uniform(double lo, double hi);

    // Standard normal via Box-Muller. Consumes two uniforms per call.
    double normal();
    double normal(double mean, double stddev);

    // Fisher-Yates. Deterministic for a given seed and input size.
    template <typename T>
    void shuffle(std::vector<T>& v) {
        if (v.size() < 2) return;
        for (std::size_t i = v.size() - 1; i > 0; --i) {
            std::size_t j = static_cast<std::size_t>(uniform_int(i + 1));
            std::swap(v[i], v[j]);
        }
    }

    // k distinct indices from [0, n), in draw order (partial Fisher-Yates).
    std::vector<std::size_t> sample_indices(std::size_t n, std::size_t k);

private:
    std::uint64_t s_[4];
};

// Stable sub-seed derivation: FNV-1a over the purpose string folded into the
// base seed, finalized through SplitMix64. Documented in the README so run
// manifests can be audited.
std::uint64_t derive_seed(std::uint64_t base_seed, std::string_view purpose);

}  // namespace dpc

#endif  // DPC_RNG_HPP
