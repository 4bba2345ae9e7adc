#pragma once

#include <cstdint>
#include <random>

namespace backbone {

// All randomness flows through std::mt19937_64 with explicit mappings, so a
// (parameters, seed) pair reproduces bit-for-bit on every platform. The
// standard distributions are deliberately avoided: their output is
// implementation-defined.
inline std::mt19937_64 seeded_rng(std::uint64_t seed) {
  return std::mt19937_64{seed};
}

// Uniform double in [0, 1) from the top 53 bits.
inline double unit_real(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Uniform-enough integer in [0, n). Plain modulo; the tiny bias is
// irrelevant for instance generation and keeps the mapping trivially
// reproducible.
inline std::uint64_t below(std::mt19937_64& rng, std::uint64_t n) {
  return rng() % n;
}

}  // namespace backbone
