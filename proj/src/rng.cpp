#include "ccg/rng.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

namespace ccg {

namespace detail {

namespace {

uint64_t splitmix64(uint64_t& state) {
  uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

// Regions 0..255 all have area V: region 0 is the base rectangle
// [0,R] x [0,f(R)] plus the tail, region k >= 1 is the slab
// y in [F[k-1], F[k]], x in [0, X[k-1]], with X decreasing and X[255] = 0.
// R is solved at init from the closure condition F[255] = 1, so no baked-in
// constants are needed.
template <typename F1, typename Finv, typename Tail>
ZigTable build_table(F1 fk, Finv finv, Tail tail_area) {
  constexpr int L = ZigTable::kLayers;
  auto closure = [&](double R) {
    const double v = R * fk(R) + tail_area(R);
    double xi = R;
    for (int k = 1; k <= L - 2; ++k) {
      const double height = v / xi + fk(xi);
      if (height >= 1.0) return height - 1.0;  // overshoot: R too small
      xi = finv(height);
    }
    return v / xi + fk(xi) - 1.0;
  };
  double lo = 1.0, hi = 10.0;
  if (!(closure(lo) > 0.0 && closure(hi) < 0.0)) {
    throw std::logic_error("ziggurat closure not bracketed");
  }
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    (closure(mid) > 0.0 ? lo : hi) = mid;
  }
  ZigTable t;
  t.r = 0.5 * (lo + hi);
  const double v = t.r * fk(t.r) + tail_area(t.r);
  t.X[0] = t.r;
  t.F[0] = fk(t.r);
  for (int k = 1; k <= L - 2; ++k) {
    t.F[k] = v / t.X[k - 1] + t.F[k - 1];
    t.X[k] = finv(t.F[k]);
  }
  t.X[L - 1] = 0.0;
  t.F[L - 1] = 1.0;
  t.ratio[0] = 0.0;  // unused
  for (int k = 1; k < L; ++k) t.ratio[k - 1] = t.X[k] / t.X[k - 1];
  t.base_scale = v / fk(t.r);
  return t;
}

}  // namespace

const ZigTable kNormalZig = build_table(
    [](double x) { return std::exp(-0.5 * x * x); },
    [](double y) { return std::sqrt(-2.0 * std::log(y)); },
    [](double R) {
      // int_R^inf exp(-x^2/2) dx
      return std::sqrt(1.5707963267948966) * std::erfc(R / std::sqrt(2.0));
    });

const ZigTable kExpZig = build_table([](double x) { return std::exp(-x); },
                                     [](double y) { return -std::log(y); },
                                     [](double R) { return std::exp(-R); });

double normal_slow(Rng& rng, uint64_t bits) {
  const ZigTable& t = kNormalZig;
  for (;;) {
    const int k = static_cast<int>(bits & 0xFF);
    const double sign = (bits & 0x100) ? -1.0 : 1.0;
    const double u = (bits >> 11) * 0x1.0p-53;
    if (k > 0) {
      if (u < t.ratio[k - 1]) return sign * u * t.X[k - 1];
      const double xx = u * t.X[k - 1];
      const double y = t.F[k - 1] + rng.uniform01() * (t.F[k] - t.F[k - 1]);
      if (y < std::exp(-0.5 * xx * xx)) return sign * xx;
    } else {
      const double xx = u * t.base_scale;
      if (xx < t.r) return sign * xx;
      // Marsaglia tail beyond R.
      for (;;) {
        const double e1 = -std::log(1.0 - rng.uniform01()) / t.r;
        const double e2 = -std::log(1.0 - rng.uniform01());
        if (e2 + e2 > e1 * e1) return sign * (t.r + e1);
      }
    }
    bits = rng.next_u64();
  }
}

double exponential_slow(Rng& rng, uint64_t bits) {
  const ZigTable& t = kExpZig;
  for (;;) {
    const int k = static_cast<int>(bits & 0xFF);
    const double u = (bits >> 11) * 0x1.0p-53;
    if (k > 0) {
      if (u < t.ratio[k - 1]) return u * t.X[k - 1];
      const double xx = u * t.X[k - 1];
      const double y = t.F[k - 1] + rng.uniform01() * (t.F[k] - t.F[k - 1]);
      if (y < std::exp(-xx)) return xx;
    } else {
      const double xx = u * t.base_scale;
      if (xx < t.r) return xx;
      // Memoryless tail: R + fresh Exp(1).
      return t.r - std::log(1.0 - rng.uniform01());
    }
    bits = rng.next_u64();
  }
}

}  // namespace detail

namespace {

// Hot block loops: a local copy of the xoshiro state lets the compiler keep
// it in registers; only the rare wedge/tail iterations touch the full Rng.
struct LocalState {
  uint64_t s0, s1, s2, s3;
  static uint64_t rotl(uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }
  uint64_t next() {
    const uint64_t result = rotl(s0 + s3, 23) + s0;
    const uint64_t t = s1 << 17;
    s2 ^= s0;
    s3 ^= s1;
    s1 ^= s2;
    s0 ^= s3;
    s2 ^= t;
    s3 = rotl(s3, 45);
    return result;
  }
};

}  // namespace

void Rng::fill_normal(double* out, int64_t count) {
  const detail::ZigTable& t = detail::kNormalZig;
  LocalState st{s_[0], s_[1], s_[2], s_[3]};
  int64_t i = 0;
  while (i < count) {
    const uint64_t bits = st.next();
    const int k = static_cast<int>(bits & 0xFF);
    const double u =
        static_cast<double>(static_cast<int64_t>(bits >> 11)) * 0x1.0p-53;
    if (k > 0 && u < t.ratio[k - 1]) [[likely]] {
      const double x = u * t.X[k - 1];
      const uint64_t sign = (bits & 0x100) << 55;
      out[i++] = std::bit_cast<double>(std::bit_cast<uint64_t>(x) ^ sign);
      continue;
    }
    s_ = {st.s0, st.s1, st.s2, st.s3};
    out[i++] = detail::normal_slow(*this, bits);
    st = {s_[0], s_[1], s_[2], s_[3]};
  }
  s_ = {st.s0, st.s1, st.s2, st.s3};
}

void Rng::fill_exponential(double* out, int64_t count) {
  const detail::ZigTable& t = detail::kExpZig;
  LocalState st{s_[0], s_[1], s_[2], s_[3]};
  int64_t i = 0;
  while (i < count) {
    const uint64_t bits = st.next();
    const int k = static_cast<int>(bits & 0xFF);
    const double u =
        static_cast<double>(static_cast<int64_t>(bits >> 11)) * 0x1.0p-53;
    if (k > 0 && u < t.ratio[k - 1]) [[likely]] {
      out[i++] = u * t.X[k - 1];
      continue;
    }
    s_ = {st.s0, st.s1, st.s2, st.s3};
    out[i++] = detail::exponential_slow(*this, bits);
    st = {s_[0], s_[1], s_[2], s_[3]};
  }
  s_ = {st.s0, st.s1, st.s2, st.s3};
}

Rng::Rng(uint64_t seed, uint64_t stream) {
  uint64_t sm = seed;
  const uint64_t s0 = detail::splitmix64(sm);
  sm ^= detail::splitmix64(sm) + 0x9E3779B97F4A7C15ULL * (stream + 1);
  s_[0] = s0;
  s_[1] = detail::splitmix64(sm);
  s_[2] = detail::splitmix64(sm);
  s_[3] = detail::splitmix64(sm);
  if ((s_[0] | s_[1] | s_[2] | s_[3]) == 0) s_[3] = 0x9E3779B97F4A7C15ULL;
}

}  // namespace ccg
