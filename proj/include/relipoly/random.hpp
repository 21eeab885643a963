#pragma once

#include <array>
#include <cstdint>

namespace relipoly {

/// Philox4x32-10 counter-based generator (Salmon, Moraes, Dror, Shaw 2011).
/// Multipliers 0xD2511F53 / 0xCD9E8D57, Weyl key increments 0x9E3779B9 /
/// 0xBB67AE85, ten rounds.
struct Philox4x32 {
  using Counter = std::array<std::uint32_t, 4>;
  using Key = std::array<std::uint32_t, 2>;

  static constexpr Counter apply(Counter c, Key k) {
    for (int round = 0; round < 10; ++round) {
      const std::uint64_t p0 = std::uint64_t{0xD2511F53U} * c[0];
      const std::uint64_t p1 = std::uint64_t{0xCD9E8D57U} * c[2];
      c = {static_cast<std::uint32_t>(p1 >> 32) ^ c[1] ^ k[0], static_cast<std::uint32_t>(p1),
           static_cast<std::uint32_t>(p0 >> 32) ^ c[3] ^ k[1], static_cast<std::uint32_t>(p0)};
      k[0] += 0x9E3779B9U;
      k[1] += 0xBB67AE85U;
    }
    return c;
  }
};

/// An independent stream of 32-bit draws identified by (seed, a, b). The
/// counter's low two words enumerate blocks of four outputs; the high two
/// words carry the stream ids.
class PhiloxStream {
 public:
  PhiloxStream(std::uint64_t seed, std::uint32_t a, std::uint32_t b)
      : key_{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)}, a_(a), b_(b) {}

  std::uint32_t next() {
    if (pos_ == 4) {
      block_ = Philox4x32::apply(
          {static_cast<std::uint32_t>(index_), static_cast<std::uint32_t>(index_ >> 32), a_, b_}, key_);
      ++index_;
      pos_ = 0;
    }
    return block_[pos_++];
  }

  /// Uniform integer in [0, n) by Lemire's multiply-and-reject method.
  std::uint32_t bounded(std::uint32_t n) {
    std::uint64_t m = std::uint64_t{next()} * n;
    auto low = static_cast<std::uint32_t>(m);
    if (low < n) {
      const std::uint32_t threshold = static_cast<std::uint32_t>(-n) % n;
      while (low < threshold) {
        m = std::uint64_t{next()} * n;
        low = static_cast<std::uint32_t>(m);
      }
    }
    return static_cast<std::uint32_t>(m >> 32);
  }

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform() {
    const std::uint64_t hi = next() >> 5;
    const std::uint64_t lo = next() >> 6;
    return static_cast<double>((hi << 26) | lo) * 0x1.0p-53;
  }

 private:
  Philox4x32::Key key_;
  std::uint32_t a_;
  std::uint32_t b_;
  std::uint64_t index_ = 0;
  Philox4x32::Counter block_{};
  int pos_ = 4;
};

}  // namespace relipoly
