#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace svpkg {

/// Mixes 64-bit words into a well-distributed key (splitmix64 finalizer).
inline std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

inline std::uint64_t mix64(std::uint64_t a, std::uint64_t b) {
    return mix64(mix64(a) ^ (b + 0x9e3779b97f4a7c15ull));
}

/// Deterministic substream RNG. Streams are addressed by a root seed plus a
/// small tuple of indices, so parallel workers can derive identical draws
/// regardless of scheduling. Gaussian variates use hand-rolled Box-Muller on
/// top of mt19937_64 to keep the byte-level output independent of the
/// standard library's distribution implementations.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed ? seed : 0x6a09e667f3bcc909ull) {}

    static Rng substream(std::uint64_t seed, std::uint64_t a,
                         std::uint64_t b = 0, std::uint64_t c = 0,
                         std::uint64_t d = 0) {
        std::uint64_t key = mix64(seed, a);
        key = mix64(key, b);
        key = mix64(key, c);
        key = mix64(key, d);
        return Rng(key);
    }

    /// Uniform in [0, 1) on the 2^-53 grid.
    double uniform() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    /// Uniform in (0, 1): zero remapped to the smallest positive grid value.
    double uniform_open() {
        double u = uniform();
        return u > 0.0 ? u : 0x1.0p-53;
    }

    double normal() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1 = uniform_open();
        double u2 = uniform();
        double r = std::sqrt(-2.0 * std::log(u1));
        double a = 6.283185307179586476925286766559 * u2;
        spare_ = r * std::sin(a);
        have_spare_ = true;
        return r * std::cos(a);
    }

    /// Uniform integer in [0, bound) by rejection; bound > 0.
    std::uint64_t below(std::uint64_t bound) {
        std::uint64_t threshold = (0 - bound) % bound;
        for (;;) {
            std::uint64_t r = engine_();
            if (r >= threshold) return r % bound;
        }
    }

    std::uint64_t next_u64() { return engine_(); }

  private:
    std::mt19937_64 engine_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

} // namespace svpkg
