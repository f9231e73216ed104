#pragma once

#include <cstdint>
#include <limits>
#include <string_view>

namespace codeloop {

/// Counter-based generator: output k is a fixed mix of (seed + k * golden ratio).
/// Satisfies UniformRandomBitGenerator.
class SplitMix64 {
public:
    using result_type = std::uint64_t;

    explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

    static constexpr result_type min() noexcept { return 0; }
    static constexpr result_type max() noexcept { return std::numeric_limits<result_type>::max(); }

    result_type operator()() noexcept {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, bound); bound > 0. Rejection sampling, so unbiased.
    std::uint64_t below(std::uint64_t bound) noexcept {
        const std::uint64_t limit = max() - max() % bound;
        std::uint64_t r;
        do r = (*this)(); while (r >= limit);
        return r % bound;
    }

    /// `bits` uniformly random low bits (bits <= 64).
    std::uint64_t bits(unsigned bits) noexcept {
        if (bits == 0) return 0;
        const std::uint64_t r = (*this)();
        return bits >= 64 ? r : r & ((std::uint64_t{1} << bits) - 1);
    }

private:
    std::uint64_t state_;
};

/// Stable per-suite seed from a run seed and a suite name (FNV-1a, then mixed).
[[nodiscard]] constexpr std::uint64_t derive_seed(std::uint64_t seed, std::string_view name) noexcept {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (char c : name) {
        h ^= static_cast<unsigned char>(c);
        h *= 0x100000001b3ULL;
    }
    std::uint64_t z = seed ^ h;
    z = (z ^ (z >> 33)) * 0xff51afd7ed558ccdULL;
    z = (z ^ (z >> 33)) * 0xc4ceb9fe1a85ec53ULL;
    return z ^ (z >> 33);
}

}  // namespace codeloop
