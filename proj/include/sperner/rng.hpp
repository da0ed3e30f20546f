#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <span>

namespace sperner {

/// SplitMix64 finalizer; used to spread user seeds and derive independent
/// per-block streams.
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

/// Uniform double in [0, 1) with 53 random bits. Hand-rolled (rather than
/// std::uniform_real_distribution) so streams are identical across standard
/// library implementations.
inline double uniform01(std::mt19937_64& g) {
  return static_cast<double>(g() >> 11) * 0x1.0p-53;
}

/// Exponential(1) variate; log1p keeps precision near u = 0.
inline double exponential1(std::mt19937_64& g) {
  return -std::log1p(-uniform01(g));
}

/// Uniform integer in [0, n). Modulo reduction: the bias for the small n
/// used here (n <= k) is far below anything observable, and the stream is
/// implementation-independent.
inline std::uint32_t uniform_below(std::mt19937_64& g, std::uint32_t n) {
  return static_cast<std::uint32_t>(g() % n);
}

/// Uniform point of the (k-1)-dimensional standard simplex (x >= 0,
/// sum x = 1): normalized i.i.d. exponentials.
inline void sample_simplex(std::mt19937_64& g, std::span<double> x) {
  double sum = 0.0;
  do {
    sum = 0.0;
    for (double& xi : x) {
      xi = exponential1(g);
      sum += xi;
    }
  } while (sum <= 0.0); // probability ~2^-53 per coordinate; never in practice
  for (double& xi : x) xi /= sum;
}

} // namespace sperner
