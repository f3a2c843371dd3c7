#pragma once

#include <array>
#include <cstdint>
#include <vector>

namespace sepinv {

// Fixed-capacity bitset over group element indices. Groups are capped at
// order 200, so four 64-bit words always suffice.
struct ElemSet {
  static constexpr int kWords = 4;
  static constexpr int kMaxBits = kWords * 64;

  std::array<std::uint64_t, kWords> w{};

  static ElemSet full(int n) {
    ElemSet s;
    for (int i = 0; i < n; ++i) s.set(i);
    return s;
  }
  static ElemSet single(int i) {
    ElemSet s;
    s.set(i);
    return s;
  }

  void set(int i) { w[i >> 6] |= 1ull << (i & 63); }
  void reset(int i) { w[i >> 6] &= ~(1ull << (i & 63)); }
  bool test(int i) const { return (w[i >> 6] >> (i & 63)) & 1; }

  bool empty() const { return !(w[0] | w[1] | w[2] | w[3]); }
  int count() const {
    return __builtin_popcountll(w[0]) + __builtin_popcountll(w[1]) + __builtin_popcountll(w[2]) +
           __builtin_popcountll(w[3]);
  }

  friend ElemSet operator&(const ElemSet& a, const ElemSet& b) {
    ElemSet r;
    for (int i = 0; i < kWords; ++i) r.w[i] = a.w[i] & b.w[i];
    return r;
  }
  friend ElemSet operator|(const ElemSet& a, const ElemSet& b) {
    ElemSet r;
    for (int i = 0; i < kWords; ++i) r.w[i] = a.w[i] | b.w[i];
    return r;
  }
  ElemSet& operator&=(const ElemSet& o) {
    for (int i = 0; i < kWords; ++i) w[i] &= o.w[i];
    return *this;
  }
  ElemSet& operator|=(const ElemSet& o) {
    for (int i = 0; i < kWords; ++i) w[i] |= o.w[i];
    return *this;
  }

  bool operator==(const ElemSet& o) const { return w == o.w; }
  bool operator!=(const ElemSet& o) const { return w != o.w; }

  bool subset_of(const ElemSet& o) const {
    for (int i = 0; i < kWords; ++i)
      if (w[i] & ~o.w[i]) return false;
    return true;
  }

  // Numeric order with bit i as the 2^i digit; used as the lattice tiebreak.
  bool numeric_less(const ElemSet& o) const {
    for (int i = kWords; i-- > 0;)
      if (w[i] != o.w[i]) return w[i] < o.w[i];
    return false;
  }

  int min_element() const {
    for (int i = 0; i < kWords; ++i)
      if (w[i]) return i * 64 + __builtin_ctzll(w[i]);
    return -1;
  }

  // Next set bit strictly after `after` (pass -1 to start), or -1.
  int next(int after) const {
    for (int i = after + 1; i < kMaxBits;) {
      std::uint64_t word = w[i >> 6] >> (i & 63);
      if (word) return i + __builtin_ctzll(word);
      i = ((i >> 6) + 1) << 6;
    }
    return -1;
  }

  std::vector<int> elements() const {
    std::vector<int> out;
    for (int i = next(-1); i >= 0; i = next(i)) out.push_back(i);
    return out;
  }
};

}  // namespace sepinv
