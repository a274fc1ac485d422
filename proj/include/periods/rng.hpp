#pragma once

#include <cstdint>
#include <string_view>

namespace periods {

// Deterministic across platforms and standard-library versions, unlike
// std::hash / std distributions. All randomized components derive from this.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Uniform in [lo, hi], inclusive; rejection sampling to avoid modulo bias.
  long long uniform(long long lo, long long hi) {
    std::uint64_t range = static_cast<std::uint64_t>(hi - lo) + 1;
    if (range == 0) return static_cast<long long>(next());  // full 64-bit span
    std::uint64_t limit = UINT64_MAX - UINT64_MAX % range;
    std::uint64_t v;
    do {
      v = next();
    } while (v >= limit);
    return lo + static_cast<long long>(v % range);
  }

 private:
  std::uint64_t state_;
};

// FNV-1a, fixed parameters; used to derive per-task seeds from a master seed.
inline std::uint64_t stable_hash(std::string_view s) {
  std::uint64_t h = 0xCBF29CE484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001B3ULL;
  }
  return h;
}

inline std::uint64_t derive_seed(std::uint64_t master, std::string_view task) {
  SplitMix64 mix(master ^ stable_hash(task));
  return mix.next();
}

}  // namespace periods
