#pragma once

#include <array>
#include <bit>
#include <cstdint>

namespace platykit {

/// Fixed-width vertex set of W 64-bit words. W = 1 is the common case and
/// compiles down to plain word operations.
template <int W>
struct Bits {
  std::array<std::uint64_t, W> w{};

  static constexpr int kCapacity = 64 * W;

  constexpr void set(int i) noexcept { w[i >> 6] |= std::uint64_t{1} << (i & 63); }
  constexpr void reset(int i) noexcept { w[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  constexpr bool test(int i) const noexcept { return (w[i >> 6] >> (i & 63)) & 1U; }

  constexpr int count() const noexcept {
    int c = 0;
    for (int k = 0; k < W; ++k) c += std::popcount(w[k]);
    return c;
  }
  constexpr bool any() const noexcept {
    for (int k = 0; k < W; ++k)
      if (w[k]) return true;
    return false;
  }
  constexpr bool none() const noexcept { return !any(); }

  /// Lowest member, or -1 when empty.
  constexpr int first() const noexcept {
    for (int k = 0; k < W; ++k)
      if (w[k]) return 64 * k + std::countr_zero(w[k]);
    return -1;
  }
  /// Lowest member strictly greater than i, or -1.
  constexpr int next(int i) const noexcept {
    ++i;
    int k = i >> 6;
    if (k >= W) return -1;
    std::uint64_t cur = w[k] & (~std::uint64_t{0} << (i & 63));
    while (true) {
      if (cur) return 64 * k + std::countr_zero(cur);
      if (++k >= W) return -1;
      cur = w[k];
    }
  }

  /// Set with members 0..n-1.
  static constexpr Bits prefix(int n) noexcept {
    Bits b;
    for (int k = 0; k < W; ++k) {
      int lo = 64 * k;
      if (n >= lo + 64) b.w[k] = ~std::uint64_t{0};
      else if (n > lo) b.w[k] = (std::uint64_t{1} << (n - lo)) - 1;
    }
    return b;
  }
  static constexpr Bits single(int i) noexcept {
    Bits b;
    b.set(i);
    return b;
  }

  constexpr Bits& operator&=(const Bits& o) noexcept {
    for (int k = 0; k < W; ++k) w[k] &= o.w[k];
    return *this;
  }
  constexpr Bits& operator|=(const Bits& o) noexcept {
    for (int k = 0; k < W; ++k) w[k] |= o.w[k];
    return *this;
  }
  constexpr Bits& operator^=(const Bits& o) noexcept {
    for (int k = 0; k < W; ++k) w[k] ^= o.w[k];
    return *this;
  }
  /// Remove members of o.
  constexpr Bits& operator-=(const Bits& o) noexcept {
    for (int k = 0; k < W; ++k) w[k] &= ~o.w[k];
    return *this;
  }
  friend constexpr Bits operator&(Bits a, const Bits& b) noexcept { return a &= b; }
  friend constexpr Bits operator|(Bits a, const Bits& b) noexcept { return a |= b; }
  friend constexpr Bits operator^(Bits a, const Bits& b) noexcept { return a ^= b; }
  friend constexpr Bits operator-(Bits a, const Bits& b) noexcept { return a -= b; }
  friend constexpr bool operator==(const Bits&, const Bits&) noexcept = default;

  /// Lexicographic order on the word array, most significant word last.
  friend constexpr bool operator<(const Bits& a, const Bits& b) noexcept {
    for (int k = 0; k < W; ++k)
      if (a.w[k] != b.w[k]) return a.w[k] < b.w[k];
    return false;
  }

  template <class F>
  constexpr void for_each(F&& f) const {
    for (int k = 0; k < W; ++k) {
      std::uint64_t cur = w[k];
      while (cur) {
        f(64 * k + std::countr_zero(cur));
        cur &= cur - 1;
      }
    }
  }
};

/// Number of words needed for n vertices.
constexpr int words_for(int n) noexcept { return (n + 63) / 64; }

}  // namespace platykit
