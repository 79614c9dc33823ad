#ifndef SPHBM_RNG_HPP
#define SPHBM_RNG_HPP

#include <cmath>
#include <cstdint>

namespace sphbm {

/// Seedable, splittable random stream (PCG64 XSL-RR 128/64).
///
/// A stream is identified by (seed, stream_id). Identical pairs replay the
/// same sequence bit for bit on every platform; distinct stream ids select
/// distinct LCG increments, giving statistically independent sequences from
/// one seed. Streams are cheap values: create one per task and move it.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed, std::uint64_t stream_id = 0)
      : seed_(seed), stream_id_(stream_id) {
    const u128 initstate = (u128(mix(seed)) << 64) | mix(seed ^ 0x5851f42d4c957f2dULL);
    const u128 initseq = (u128(mix(stream_id)) << 64) | mix(stream_id ^ 0x9e3779b97f4a7c15ULL);
    state_ = 0;
    inc_ = (initseq << 1) | 1;
    advance();
    state_ += initstate;
    advance();
  }

  /// Derived stream, independent of this one and of other child ids.
  RngStream substream(std::uint64_t child_id) const {
    return RngStream(seed_, mix(stream_id_ + 0x9e3779b97f4a7c15ULL * (child_id + 1)));
  }

  std::uint64_t seed() const { return seed_; }
  std::uint64_t stream_id() const { return stream_id_; }

  std::uint64_t next_u64() {
    const u128 old = state_;
    advance();
    const std::uint64_t xored = static_cast<std::uint64_t>((old >> 64) ^ old);
    const unsigned rot = static_cast<unsigned>(old >> 122);
    return (xored >> rot) | (xored << ((64u - rot) & 63u));
  }

  /// Uniform on [0, 1), 53-bit resolution.
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  /// Uniform on the open interval (0, 1); safe under log().
  double uniform_open() {
    return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
  }

  /// Standard normal via the Marsaglia polar method (pairs cached).
  double normal() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    double u, v, s;
    do {
      u = 2.0 * uniform() - 1.0;
      v = 2.0 * uniform() - 1.0;
      s = u * u + v * v;
    } while (s >= 1.0 || s == 0.0);
    const double f = std::sqrt(-2.0 * std::log(s) / s);
    spare_ = v * f;
    has_spare_ = true;
    return u * f;
  }

  /// Exponential with the given rate (> 0).
  double exponential(double rate) { return -std::log(uniform_open()) / rate; }

 private:
  using u128 = unsigned __int128;

  void advance() { state_ = state_ * kMult + inc_; }

  // splitmix64 finalizer; decorrelates adjacent seeds / stream ids.
  static std::uint64_t mix(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
  }

  static constexpr u128 kMult = (u128(2549297995355413924ULL) << 64) | 4865540595714422341ULL;

  std::uint64_t seed_;
  std::uint64_t stream_id_;
  u128 state_{};
  u128 inc_{};
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace sphbm

#endif
