#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "ccg/ensembles.hpp"
#include "ccg/rng.hpp"

namespace ccg {

// Limiting fluctuation xi_G of N0^2 W_2^2 - 2 log N0 - c_G, as an infinite
// series of independent chi-square type variables. There are three distinct
// laws: U/SU, the odd orthogonal family, and the even family
// (SO(2N)/O^-(2N+2)/USp(2N)).
enum class XiFamily { U, Odd, Even };

XiFamily xi_family(GroupId g);

// One truncated-series draw with k_max terms. The U series uses the identity
// X^2 + Y^2 = 2 Exp(1) per term; the hook below keeps the forced-zero test
// path available.
double sample_xi(GroupId g, int64_t k_max, Rng& rng);

// Deterministic evaluation of the truncated series with every Gaussian (and
// exponential) forced to zero; test hook.
double xi_series_all_zero(GroupId g, int64_t k_max);

// Standard deviation bound of the discarded tail: 2/sqrt(k_max) for U,
// at most 4/sqrt(k_max) otherwise.
double xi_truncation_sd(GroupId g, int64_t k_max);

// Characteristic function of xi_G, |t| <= 50. Uses log-gamma/digamma on the
// right half-plane; the square root branch is continuous with value 1 at 0.
std::complex<double> xi_cf(GroupId g, double t);

// Partial product over k <= k_max of the per-term characteristic functions;
// converges to xi_cf as k_max grows.
std::complex<double> xi_cf_product(GroupId g, double t, int64_t k_max);

// Density and CDF of xi_U (Gumbel type, scale 2, location -2 gamma).
double xi_u_density(double x);
double xi_u_cdf(double x);

// (0, sigma_G).
struct XiMoments {
  double mean = 0.0;
  double variance = 0.0;
};
XiMoments xi_moments(GroupId g);

// Fourier inversion of xi_cf: density and CDF by Gil-Pelaez quadrature;
// verification-grade accuracy (~1e-6).
double xi_density_from_cf(GroupId g, double x);
double xi_cdf_from_cf(GroupId g, double x);

// Batch sampling with per-replicate derived streams; deterministic in
// (seed, jobs-independent).
std::vector<double> sample_xi_batch(GroupId g, int64_t k_max, int64_t replicates,
                                    uint64_t seed, int jobs);

}  // namespace ccg
