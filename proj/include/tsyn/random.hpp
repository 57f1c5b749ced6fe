#pragma once

// Seeded randomness helpers. All draws go through these instead of the
// std distributions so that runs are reproducible across standard
// library implementations, not just across runs.

#include <cstdint>
#include <random>
#include <vector>

namespace tsyn {

using Rng = std::mt19937_64;

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Independent stream derived from a base seed and a purpose tag.
inline Rng make_rng(std::uint64_t seed, std::uint64_t stream) {
  return Rng(splitmix64(splitmix64(seed) ^ stream));
}

// Uniform in [0, n), unbiased via rejection.
inline std::uint64_t rng_below(Rng& rng, std::uint64_t n) {
  if (n == 0) return 0;
  const std::uint64_t limit = std::uint64_t(-1) - std::uint64_t(-1) % n;
  std::uint64_t r;
  do {
    r = rng();
  } while (r >= limit);
  return r % n;
}

// Uniform integer in [lo, hi] inclusive.
inline long rng_int(Rng& rng, long lo, long hi) {
  return lo + long(rng_below(rng, std::uint64_t(hi - lo + 1)));
}

// Uniform double in [0, 1).
inline double rng_real01(Rng& rng) {
  return double(rng() >> 11) * 0x1.0p-53;
}

// Fisher-Yates; std::shuffle is implementation-defined, this is not.
template <class T>
void rng_shuffle(Rng& rng, std::vector<T>& v) {
  for (std::size_t i = v.size(); i > 1; --i) {
    std::size_t j = std::size_t(rng_below(rng, i));
    std::swap(v[i - 1], v[j]);
  }
}

// Index drawn proportionally to the given non-negative weights.
inline std::size_t rng_weighted(Rng& rng, const std::vector<double>& weights) {
  double total = 0;
  for (double w : weights) total += w;
  double r = rng_real01(rng) * total;
  double acc = 0;
  std::size_t last = 0;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (weights[i] <= 0) continue;
    acc += weights[i];
    last = i;
    if (r < acc) return i;
  }
  return last;
}

}  // namespace tsyn
