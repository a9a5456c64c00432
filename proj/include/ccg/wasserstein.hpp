#pragma once

#include <complex>
#include <vector>

#include "ccg/ensembles.hpp"

namespace ccg {

// Empirical measure on the circle: equal-weight atoms in [0, 2pi).
struct SpectralMeasure {
  std::vector<double> atoms;
  int n0() const { return static_cast<int>(atoms.size()); }
};

enum class W2Method { Closed, Fourier };

struct W2Result {
  double value = 0.0;       // W_2^2 in squared radians
  W2Method method = W2Method::Closed;
  double tail_bound = 0.0;  // 0 for the closed form
};

// hat mu(k) = (1/N0) sum_atoms e^{ik theta}; k = 0 is rejected.
std::complex<double> fourier_coeff(const SpectralMeasure& m, int64_t k);

// Periodic Bernoulli kernel b(x) = x^2/2 - pi x + pi^2/3 on [0, 2pi);
// equals sum_{k != 0} e^{ikx}/k^2.
double bernoulli_kernel(double x);

// Exact pairwise evaluation, O(N0^2), compensated summation.
W2Result w2sq_closed(const SpectralMeasure& m);

// Truncated Fourier series 2 sum_{k<=k_max} |hat mu(k)|^2/k^2; underestimates
// the exact value by at most tail_bound = 2/k_max.
W2Result w2sq_fourier(const SpectralMeasure& m, int64_t k_max);

// Diaphony Delta_2 = W_2 / (sqrt2 pi).
double diaphony(const SpectralMeasure& m);

// L^2 norm of the normalized log characteristic polynomial,
// N0 * W_2(mu, lambda).
double fa_l2norm(const SpectralMeasure& m);

}  // namespace ccg
