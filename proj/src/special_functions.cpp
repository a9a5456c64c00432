#include "ccg/special_functions.hpp"

#include <cmath>
#include <stdexcept>

#include "ccg/ensembles.hpp"

namespace ccg {

namespace {

// Bernoulli numbers B_2..B_16.
constexpr double kB2 = 1.0 / 6.0;
constexpr double kB4 = -1.0 / 30.0;
constexpr double kB6 = 1.0 / 42.0;
constexpr double kB8 = -1.0 / 30.0;
constexpr double kB10 = 5.0 / 66.0;
constexpr double kB12 = -691.0 / 2730.0;
constexpr double kB14 = 7.0 / 6.0;
constexpr double kB16 = -3617.0 / 510.0;

constexpr int64_t kShiftBase = 32;

}  // namespace

double tail_inv_square(int64_t K) {
  if (K < 0) throw std::invalid_argument("tail_inv_square: K < 0");
  double direct = 0.0;
  int64_t m = K;
  while (m < kShiftBase) {
    ++m;
    direct += 1.0 / (static_cast<double>(m) * static_cast<double>(m));
  }
  // Euler-Maclaurin for sum_{k >= x} k^-2 with x = m+1:
  //   1/x + 1/(2x^2) + B2/x^3 + B4/x^5 + B6/x^7 + ...
  const double x = static_cast<double>(m) + 1.0;
  const double ix = 1.0 / x;
  const double ix2 = ix * ix;
  double tail = ix + 0.5 * ix2;
  double p = ix * ix2;  // x^-3
  tail += kB2 * p;
  p *= ix2;
  tail += kB4 * p;
  p *= ix2;
  tail += kB6 * p;
  p *= ix2;
  tail += kB8 * p;
  return direct + tail;
}

double tail_inv_fourth(int64_t K) {
  if (K < 0) throw std::invalid_argument("tail_inv_fourth: K < 0");
  double direct = 0.0;
  int64_t m = K;
  while (m < kShiftBase) {
    ++m;
    const double dm = static_cast<double>(m);
    direct += 1.0 / (dm * dm * dm * dm);
  }
  // sum_{k >= x} k^-4 = 1/(3x^3) + 1/(2x^4) + B2*4/(2 x^5) + B4*20/(4! ...)
  // Derived from Euler-Maclaurin with f = t^-4:
  //   int = 1/(3x^3); +f/2; -f'/12 = 1/(3x^5); +f'''/720 = -1/(6 x^7); ...
  const double x = static_cast<double>(m) + 1.0;
  const double ix = 1.0 / x;
  const double ix2 = ix * ix;
  const double ix3 = ix2 * ix;
  double tail = ix3 / 3.0 + 0.5 * ix2 * ix2;
  tail += ix3 * ix2 / 3.0;          // -f'/12, f' = -4 x^-5
  tail -= ix3 * ix2 * ix2 / 6.0;    // +f'''/720, f''' = -120 x^-7
  tail += ix3 * ix2 * ix2 * ix2 * (2.0 / 9.0);  // -f^(5)/30240, f^(5) = -6720 x^-9
  return direct + tail;
}

double tail_inv_square_shifted(int64_t K, int64_t d) {
  if (d < 1) throw std::invalid_argument("tail_inv_square_shifted: d < 1");
  const double dd = static_cast<double>(d);
  double harmonic = 0.0;
  for (int64_t j = K + d; j > K; --j) harmonic += 1.0 / static_cast<double>(j);
  const double s = tail_inv_square(K) + tail_inv_square(K + d) -
                   (2.0 / dd) * harmonic;
  return s / (dd * dd);
}

std::complex<double> log_gamma(std::complex<double> z) {
  if (z.real() <= 0.0) {
    throw std::domain_error("log_gamma: Re z must be positive");
  }
  // Shift until |z| is large enough for the Stirling series.
  std::complex<double> shift = 0.0;
  while (std::abs(z) < 16.0) {
    shift -= std::log(z);
    z += 1.0;
  }
  const std::complex<double> iz = 1.0 / z;
  const std::complex<double> iz2 = iz * iz;
  std::complex<double> series = kB2 / 2.0 * iz;
  std::complex<double> p = iz * iz2;
  series += kB4 / 12.0 * p;
  p *= iz2;
  series += kB6 / 30.0 * p;
  p *= iz2;
  series += kB8 / 56.0 * p;
  p *= iz2;
  series += kB10 / 90.0 * p;
  p *= iz2;
  series += kB12 / 132.0 * p;
  const double half_log_2pi = 0.91893853320467274178;
  return (z - 0.5) * std::log(z) - z + half_log_2pi + series + shift;
}

std::complex<double> digamma(std::complex<double> z) {
  if (z.real() <= 0.0) {
    throw std::domain_error("digamma: Re z must be positive");
  }
  std::complex<double> shift = 0.0;
  while (std::abs(z) < 16.0) {
    shift -= 1.0 / z;
    z += 1.0;
  }
  const std::complex<double> iz = 1.0 / z;
  const std::complex<double> iz2 = iz * iz;
  std::complex<double> series = -0.5 * iz;
  std::complex<double> p = iz2;
  series -= kB2 / 2.0 * p;
  p *= iz2;
  series -= kB4 / 4.0 * p;
  p *= iz2;
  series -= kB6 / 6.0 * p;
  p *= iz2;
  series -= kB8 / 8.0 * p;
  p *= iz2;
  series -= kB10 / 10.0 * p;
  p *= iz2;
  series -= kB12 / 12.0 * p;
  return std::log(z) + series + shift;
}

}  // namespace ccg
