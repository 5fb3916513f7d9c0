#ifndef MOR_RNG_HPP
#define MOR_RNG_HPP

#include <cstdint>

#include "mor/bigint.hpp"

namespace mor {

/// Seeded splitmix64 generator. The update formula is part of the file-format
/// contract (see README): identical seeds must reproduce identical keys and
/// ciphertexts across implementations, so no platform RNG is ever used.
///
///   state += 0x9e3779b97f4a7c15
///   z = state
///   z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9
///   z = (z ^ (z >> 27)) * 0x94d049bb133111eb
///   output = z ^ (z >> 31)
///
/// State is always passed explicitly; there is no global generator.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Unbiased uniform draw from [0, bound) by rejection. bound > 0.
    std::uint64_t below(std::uint64_t bound) {
        // limit = 2^64 - (2^64 mod bound), computed without overflow
        std::uint64_t limit = bound * ((0 - bound) / bound) + bound;  // == 0 when bound divides 2^64
        for (;;) {
            std::uint64_t v = next();
            if (limit == 0 || v < limit) return v % bound;
        }
    }

    /// Uniform BigInt in [0, bound), rejection over fixed-width draws
    /// (64-bit words most-significant first, top word masked to bit length).
    BigInt below_big(const BigInt& bound) {
        if (bound <= 1) return 0;
        std::size_t bits = bit_length(bound - 1);
        std::size_t words = (bits + 63) / 64;
        std::size_t top_bits = bits - (words - 1) * 64;
        std::uint64_t mask = top_bits == 64 ? ~0ULL : ((1ULL << top_bits) - 1);
        for (;;) {
            BigInt v = 0;
            for (std::size_t w = 0; w < words; ++w) {
                std::uint64_t draw = next();
                if (w == 0) draw &= mask;
                v = (v << 64) | draw;
            }
            if (v < bound) return v;
        }
    }

    /// Derive an independent child stream (used to give each sub-procedure
    /// its own deterministic seed).
    Rng fork() { return Rng(next()); }

  private:
    std::uint64_t state_;
};

}  // namespace mor

#endif
