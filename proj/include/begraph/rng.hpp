#pragma once

#include <array>
#include <cmath>
#include <cstdint>

namespace begraph {

// Philox4x32-10 counter-based generator (Salmon et al., "Parallel Random
// Numbers: As Easy as 1, 2, 3"). A draw is addressed by (seed, stream, counter),
// so parallel producers agree bit-for-bit with a serial run by construction.
class Philox {
 public:
  Philox(std::uint64_t seed, std::uint64_t stream) : seed_(seed), stream_(stream) {}

  std::array<std::uint32_t, 4> block(std::uint64_t counter) const {
    std::uint32_t c0 = std::uint32_t(counter);
    std::uint32_t c1 = std::uint32_t(counter >> 32);
    std::uint32_t c2 = std::uint32_t(stream_);
    std::uint32_t c3 = std::uint32_t(stream_ >> 32);
    std::uint32_t k0 = std::uint32_t(seed_);
    std::uint32_t k1 = std::uint32_t(seed_ >> 32);
    for (int round = 0; round < 10; ++round) {
      const std::uint64_t p0 = std::uint64_t(kMul0) * c0;
      const std::uint64_t p1 = std::uint64_t(kMul1) * c2;
      const std::uint32_t hi0 = std::uint32_t(p0 >> 32), lo0 = std::uint32_t(p0);
      const std::uint32_t hi1 = std::uint32_t(p1 >> 32), lo1 = std::uint32_t(p1);
      const std::uint32_t n0 = hi1 ^ c1 ^ k0;
      const std::uint32_t n1 = lo1;
      const std::uint32_t n2 = hi0 ^ c3 ^ k1;
      const std::uint32_t n3 = lo0;
      c0 = n0;
      c1 = n1;
      c2 = n2;
      c3 = n3;
      k0 += kWeyl0;
      k1 += kWeyl1;
    }
    return {c0, c1, c2, c3};
  }

  // Two 64-bit words per counter tick.
  std::array<std::uint64_t, 2> words64(std::uint64_t counter) const {
    const auto b = block(counter);
    return {(std::uint64_t(b[1]) << 32) | b[0], (std::uint64_t(b[3]) << 32) | b[2]};
  }

 private:
  static constexpr std::uint32_t kMul0 = 0xD2511F53u;
  static constexpr std::uint32_t kMul1 = 0xCD9E8D57u;
  static constexpr std::uint32_t kWeyl0 = 0x9E3779B9u;
  static constexpr std::uint32_t kWeyl1 = 0xBB67AE85u;

  std::uint64_t seed_;
  std::uint64_t stream_;
};

inline double u64_to_unit(std::uint64_t w) {
  // 53-bit mantissa in [0,1)
  return double(w >> 11) * 0x1.0p-53;
}

// Sequential view over one (seed, stream) substream. Stateless apart from the
// cursor: values depend only on (seed, stream, position).
class SubstreamRng {
 public:
  SubstreamRng(std::uint64_t seed, std::uint64_t stream) : gen_(seed, stream) {}

  std::uint64_t next_u64() {
    if (have_ == 0) {
      cache_ = gen_.words64(counter_++);
      have_ = 2;
    }
    return cache_[2 - have_--];
  }

  double next_unit() { return u64_to_unit(next_u64()); }

  // Box-Muller pair; the spare is cached so a substream's gaussian sequence is
  // a pure function of its position.
  double next_gaussian() {
    if (have_gauss_) {
      have_gauss_ = false;
      return spare_;
    }
    const double u1 = (double(next_u64() >> 11) + 0.5) * 0x1.0p-53;  // in (0,1)
    const double u2 = next_unit();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 6.283185307179586476925287 * u2;
    spare_ = r * std::sin(a);
    have_gauss_ = true;
    return r * std::cos(a);
  }

 private:
  Philox gen_;
  std::uint64_t counter_ = 0;
  std::array<std::uint64_t, 2> cache_{};
  int have_ = 0;
  bool have_gauss_ = false;
  double spare_ = 0.0;
};

}  // namespace begraph
