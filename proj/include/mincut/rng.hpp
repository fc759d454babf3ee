#pragma once

#include <bit>
#include <cstdint>

namespace mincut {

// splitmix64 finaliser.
constexpr std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

constexpr std::uint64_t counter_hash(std::uint64_t seed, std::uint64_t stream,
                                     std::uint64_t counter) {
  return mix64(mix64(mix64(seed) ^ stream) + counter);
}

// Counter-based stream: word i of stream (seed, stream) is a pure function of
// the triple, so draws never depend on scheduling.
class Rng {
 public:
  constexpr Rng(std::uint64_t seed, std::uint64_t stream = 0)
      : seed_(seed), stream_(stream) {}

  std::uint64_t next_u64() { return counter_hash(seed_, stream_, counter_++); }
  bool next_bit() {
    if (bits_left_ == 0) {
      bit_buffer_ = next_u64();
      bits_left_ = 64;
    }
    bool b = bit_buffer_ & 1;
    bit_buffer_ >>= 1;
    --bits_left_;
    return b;
  }
  // Uniform in (0, 1].
  double next_open01() {
    return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;
  }
  std::uint64_t below(std::uint64_t bound) {
    // Lemire's multiply-shift with rejection.
    unsigned __int128 m = static_cast<unsigned __int128>(next_u64()) * bound;
    auto low = static_cast<std::uint64_t>(m);
    if (low < bound) {
      std::uint64_t threshold = -bound % bound;
      while (low < threshold) {
        m = static_cast<unsigned __int128>(next_u64()) * bound;
        low = static_cast<std::uint64_t>(m);
      }
    }
    return static_cast<std::uint64_t>(m >> 64);
  }

  // Independent child stream.
  Rng fork(std::uint64_t stream) const {
    return Rng(seed_, mix64(stream_ * 0x2545f4914f6cdd1dULL + stream + 1));
  }

  std::uint64_t seed() const { return seed_; }
  std::uint64_t stream() const { return stream_; }

 private:
  std::uint64_t seed_;
  std::uint64_t stream_;
  std::uint64_t counter_ = 0;
  std::uint64_t bit_buffer_ = 0;
  int bits_left_ = 0;
};

}  // namespace mincut
