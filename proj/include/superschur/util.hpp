#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <thread>
#include <vector>

namespace superschur {

inline std::uint64_t hash_mix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::uint64_t hash_combine(std::uint64_t h, std::uint64_t v) {
  return hash_mix(h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2)));
}

using Rng = std::mt19937_64;

inline int rand_int(Rng& rng, int lo, int hi) {  // inclusive
  return int(std::uniform_int_distribution<long>(lo, hi)(rng));
}

/// Runs fn(i) for i in [0, count) on up to max_threads workers and waits.
/// fn must only touch disjoint state per index; results are merged by the caller.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn,
                  unsigned max_threads = 0);

}  // namespace superschur
