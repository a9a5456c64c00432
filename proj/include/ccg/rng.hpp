#pragma once

#include <array>
#include <bit>
#include <cstdint>

namespace ccg {

class Rng;

namespace detail {

// Ziggurat tables over a decreasing density kernel on [0, inf) with 256
// equal-area regions; see rng.cpp for the construction.
struct ZigTable {
  static constexpr int kLayers = 256;
  double X[kLayers];
  double F[kLayers];
  double ratio[kLayers];
  double base_scale = 0.0;
  double r = 0.0;
};

// Built once at program start; referenced directly from the inline fast
// paths below.
extern const ZigTable kNormalZig;
extern const ZigTable kExpZig;

double normal_slow(Rng& rng, uint64_t bits);
double exponential_slow(Rng& rng, uint64_t bits);

}  // namespace detail

// xoshiro256++ with splitmix64 seeding. Replicate streams are derived from
// (master seed, stream index), so parallel replicates never share state and
// a fixed (seed, replicate) pair reproduces the same draws.
class Rng {
 public:
  explicit Rng(uint64_t seed) : Rng(seed, 0) {}
  Rng(uint64_t seed, uint64_t stream);

  uint64_t next_u64() {
    const uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
    const uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
  }

  // Uniform on [0, 1), 53 random bits.
  double uniform01() { return (next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double a, double b) { return a + (b - a) * uniform01(); }

  // Standard normal via 256-layer ziggurat; only the rectangle-interior
  // accept stays inline.
  double normal() {
    const auto& t = detail::kNormalZig;
    const uint64_t bits = next_u64();
    const int k = static_cast<int>(bits & 0xFF);
    if (k > 0) {
      const double u =
          static_cast<double>(static_cast<int64_t>(bits >> 11)) * 0x1.0p-53;
      if (u < t.ratio[k - 1]) {
        const double x = u * t.X[k - 1];
        // branchless sign flip from bit 8
        const uint64_t sign = (bits & 0x100) << 55;
        return std::bit_cast<double>(std::bit_cast<uint64_t>(x) ^ sign);
      }
    }
    return detail::normal_slow(*this, bits);
  }

  // Block generation; substantially faster than repeated single draws
  // because the generator state stays in registers for the whole block.
  void fill_normal(double* out, int64_t count);
  void fill_exponential(double* out, int64_t count);

  // Exp(1) via the same scheme.
  double exponential() {
    const auto& t = detail::kExpZig;
    const uint64_t bits = next_u64();
    const int k = static_cast<int>(bits & 0xFF);
    if (k > 0) {
      const double u =
          static_cast<double>(static_cast<int64_t>(bits >> 11)) * 0x1.0p-53;
      if (u < t.ratio[k - 1]) return u * t.X[k - 1];
    }
    return detail::exponential_slow(*this, bits);
  }

 private:
  static uint64_t rotl(uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }
  std::array<uint64_t, 4> s_;
};

}  // namespace ccg
