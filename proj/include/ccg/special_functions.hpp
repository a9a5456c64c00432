#pragma once

#include <complex>
#include <cstdint>

namespace ccg {

// sum_{k > K} 1/k^2 and 1/k^4, evaluated by Euler-Maclaurin after shifting
// the start point; absolute error below 1e-15 of the value.
double tail_inv_square(int64_t K);
double tail_inv_fourth(int64_t K);

// sum_{k > K} 1/(k^2 (k+d)^2), d >= 1, via partial fractions and the tails
// above.
double tail_inv_square_shifted(int64_t K, int64_t d);

// Principal-branch analytic log-gamma and digamma on the right half-plane
// (Re z > 0). Accuracy ~1e-13; used for the limit-law characteristic
// functions on the line z = 1 - i*c*t.
std::complex<double> log_gamma(std::complex<double> z);
std::complex<double> digamma(std::complex<double> z);

}  // namespace ccg
