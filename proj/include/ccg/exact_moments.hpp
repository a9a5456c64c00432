#pragma once

#include <cstdint>
#include <string>

#include "ccg/ensembles.hpp"

namespace ccg {

// Integer-valued combinatorial tables entering the exact mean and variance
// series of W_2^2. The four group cases share a skeleton but differ in the
// indicator eps, the correction alpha, and several boundary terms; all
// arithmetic stays in int64.
int64_t eta(const EnsembleSpec& spec, int64_t k);
int64_t bigT(const EnsembleSpec& spec, int64_t k);
int64_t bigV(const EnsembleSpec& spec, int64_t k, int64_t l);    // k != l
int64_t deltaVD(const EnsembleSpec& spec, int64_t k, int64_t l); // k != l

struct ValueWithError {
  double value = 0.0;
  double err_bound = 0.0;
};

// E W_2^2 = (2/N0^2) sum_{k>=1} (min{k,N0} + eta(k)) / k^2; the infinite
// tail is evaluated analytically, err_bound covers evaluation error only.
ValueWithError exact_mean(const EnsembleSpec& spec, double tol = 1e-10);

// Var W_2^2 = (4/N0^4) [ sum_k T(k)/k^4 + sum_{k != l} (V+delta)/(k^2 l^2) ].
// T is eventually constant and V+delta lives on a band of diagonals along
// which it stabilizes, so both tails reduce to polygamma-type sums.
ValueWithError exact_variance(const EnsembleSpec& spec, double tol = 1e-10);

// ((2 log N0 + c_G)/N0^2, sigma_G/N0^4).
struct AsymptoticMoments {
  double mean = 0.0;
  double variance = 0.0;
};
AsymptoticMoments asymptotic_moments(const EnsembleSpec& spec);

struct MomentReport {
  EnsembleSpec spec;
  double mean_exact = 0.0;
  double mean_err = 0.0;
  double var_exact = 0.0;
  double var_err = 0.0;
  double mean_asymptotic = 0.0;
  double var_asymptotic = 0.0;
};

MomentReport moment_report(const EnsembleSpec& spec, double tol = 1e-10);
std::string moment_report_to_json(const MomentReport& r);

}  // namespace ccg
