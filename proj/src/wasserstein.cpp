#include "ccg/wasserstein.hpp"

#include <cmath>
#include <stdexcept>

namespace ccg {

namespace {

// Neumaier compensated accumulator.
struct Kahan {
  double sum = 0.0;
  double c = 0.0;
  void add(double v) {
    const double t = sum + v;
    if (std::abs(sum) >= std::abs(v)) {
      c += (sum - t) + v;
    } else {
      c += (v - t) + sum;
    }
    sum = t;
  }
  double total() const { return sum + c; }
};

double mod_2pi(double x) {
  double r = x - kTwoPi * std::floor(x / kTwoPi);
  if (r >= kTwoPi) r -= kTwoPi;
  if (r < 0.0) r += kTwoPi;
  return r;
}

}  // namespace

std::complex<double> fourier_coeff(const SpectralMeasure& m, int64_t k) {
  if (k == 0) throw std::domain_error("fourier_coeff: k = 0 is trivially 1");
  if (m.atoms.empty()) throw std::invalid_argument("fourier_coeff: empty measure");
  double re = 0.0, im = 0.0;
  for (double a : m.atoms) {
    re += std::cos(k * a);
    im += std::sin(k * a);
  }
  const double inv = 1.0 / static_cast<double>(m.atoms.size());
  return {re * inv, im * inv};
}

double bernoulli_kernel(double x) {
  return x * (0.5 * x - kPi) + kPi * kPi / 3.0;
}

W2Result w2sq_closed(const SpectralMeasure& m) {
  const int n = m.n0();
  if (n == 0) throw std::invalid_argument("w2sq_closed: empty measure");
  Kahan acc;
  // b(d) + b(2pi - d) for each unordered pair, plus n * b(0) on the diagonal.
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const double d = mod_2pi(m.atoms[i] - m.atoms[j]);
      acc.add(d * (d - kTwoPi) + 2.0 * kPi * kPi / 3.0);
    }
  }
  acc.add(n * (kPi * kPi / 3.0));
  const double n0 = static_cast<double>(n);
  return {acc.total() / (n0 * n0), W2Method::Closed, 0.0};
}

W2Result w2sq_fourier(const SpectralMeasure& m, int64_t k_max) {
  const int n = m.n0();
  if (n == 0) throw std::invalid_argument("w2sq_fourier: empty measure");
  if (k_max < 1) throw std::invalid_argument("w2sq_fourier: k_max < 1");
  // Power iteration per atom: z^k built by repeated multiplication.
  std::vector<double> zr(n), zi(n), wr(n, 1.0), wi(n, 0.0);
  for (int i = 0; i < n; ++i) {
    zr[i] = std::cos(m.atoms[i]);
    zi[i] = std::sin(m.atoms[i]);
  }
  Kahan acc;
  for (int64_t k = 1; k <= k_max; ++k) {
    double sr = 0.0, si = 0.0;
    for (int i = 0; i < n; ++i) {
      const double nr = wr[i] * zr[i] - wi[i] * zi[i];
      const double ni = wr[i] * zi[i] + wi[i] * zr[i];
      wr[i] = nr;
      wi[i] = ni;
      sr += nr;
      si += ni;
    }
    const double kk = static_cast<double>(k);
    acc.add((sr * sr + si * si) / (kk * kk));
  }
  const double n0 = static_cast<double>(n);
  return {2.0 * acc.total() / (n0 * n0), W2Method::Fourier,
          2.0 / static_cast<double>(k_max)};
}

double diaphony(const SpectralMeasure& m) {
  return std::sqrt(w2sq_closed(m).value) / (std::sqrt(2.0) * kPi);
}

double fa_l2norm(const SpectralMeasure& m) {
  return m.n0() * std::sqrt(w2sq_closed(m).value);
}

}  // namespace ccg
