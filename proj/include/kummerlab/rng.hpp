#pragma once

#include <array>
#include <cstdint>
#include <random>

#include "kummerlab/torus.hpp"

namespace kummerlab {

/// splitmix64 step; used to derive independent streams from one seed.
inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

/// Deterministic generator for (seed, stream) pairs. Every randomized
/// computation in the library draws from one of these, so identical
/// (config, seed) inputs give identical outputs regardless of --jobs.
inline std::mt19937_64 make_rng(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t s = seed ^ (0x9e3779b97f4a7c15ull * (stream + 1));
  std::uint64_t a = splitmix64(s);
  std::uint64_t b = splitmix64(s);
  std::seed_seq seq{static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(a >> 32),
                    static_cast<std::uint32_t>(b), static_cast<std::uint32_t>(b >> 32)};
  return std::mt19937_64(seq);
}

inline double uniform01(std::mt19937_64& g) {
  return std::uniform_real_distribution<double>(0.0, 1.0)(g);
}

/// Low-discrepancy points on T^4 (additive Weyl/R4 sequence). Index-addressable,
/// so ensembles can be sampled in parallel without shared state.
class WeylSequence4 {
 public:
  explicit WeylSequence4(std::uint64_t seed = 0) {
    // generalized-golden-ratio increments; x^5 = x + 1
    const double phi = 1.1673039782614187;
    double a = 1.0;
    for (int i = 0; i < 4; ++i) {
      a /= phi;
      alpha_[i] = a;
    }
    std::uint64_t s = seed;
    for (int i = 0; i < 4; ++i) offset_[i] = (splitmix64(s) >> 11) * 0x1.0p-53;
  }

  Torus4 operator()(std::uint64_t n) const {
    Torus4 p;
    for (int i = 0; i < 4; ++i) p[i] = mod1(offset_[i] + alpha_[i] * static_cast<double>(n + 1));
    return p;
  }

 private:
  std::array<double, 4> alpha_{};
  std::array<double, 4> offset_{};
};

}  // namespace kummerlab
