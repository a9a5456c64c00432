#pragma once

#include <algorithm>
#include <cstdint>

// Group-specific indicator eps and correction alpha shared by the exact
// moment tables and the closed-form kernel moments.
namespace ccg::detail {

inline int64_t pos(int64_t x) { return x > 0 ? x : 0; }

// Odd orthogonal: odd a in [1, 2N-1].
inline int64_t eps_odd(int64_t n, int64_t a) {
  return (a >= 1 && a <= 2 * n - 1 && (a & 1)) ? 1 : 0;
}
// SO(2N): even a in [1, 2N-2].
inline int64_t eps_even_so(int64_t n, int64_t a) {
  return (a >= 1 && a <= 2 * n - 2 && !(a & 1)) ? 1 : 0;
}
// O^-(2N+2)/USp(2N): even a in [1, 2N].
inline int64_t eps_even_sp(int64_t n, int64_t a) {
  return (a >= 1 && a <= 2 * n && !(a & 1)) ? 1 : 0;
}

inline int64_t alpha_odd(int64_t n, int64_t a, int64_t b, int64_t c) {
  return pos(std::min(a, n) + std::min(b, n) - c);
}
inline int64_t alpha_even_so(int64_t n, int64_t a, int64_t b, int64_t c) {
  return pos(std::min(a, n) + std::min(b, n) - c - 1);
}
inline int64_t alpha_even_sp(int64_t n, int64_t a, int64_t b, int64_t c) {
  return pos(std::min(a - 1, n) + std::min(b - 1, n) - c + 1);
}

}  // namespace ccg::detail
