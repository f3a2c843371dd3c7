#pragma once

#include <cstdint>

namespace sepinv {

// Deterministic 64-bit linear congruential generator (Knuth's MMIX
// multiplier). All randomized reports in the library draw from this scheme so
// results are reproducible bit-for-bit across platforms; see the README.
class Lcg64 {
 public:
  explicit Lcg64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    state_ = state_ * 6364136223846793005ull + 1442695040888963407ull;
    return state_ >> 16;  // drop the weakest low bits
  }

  // Uniform-ish value in [0, bound); bound must be positive.
  std::uint64_t next_below(std::uint64_t bound) { return next() % bound; }

  int next_int(int lo, int hi) {  // inclusive range
    return lo + static_cast<int>(next_below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

 private:
  std::uint64_t state_;
};

}  // namespace sepinv
