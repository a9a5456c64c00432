#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ccg/ensembles.hpp"

namespace ccg {

// Normalized trigonometric moments of cyclic kernel products,
//   Pi(a_1..a_m) = (1/pi^m) int_{[0,pi]^m} K(x_1,x_2) ... K(x_m,x_1)
//                    cos(a_1 x_1) ... cos(a_m x_m) dx,
// for the real kernel families. For the U family the analogous quantity uses
// the full circle and exponential weights e^{i a_t x_t} with signed integer
// arguments; it vanishes unless the arguments sum to zero.

// Thrown when pi_closed has no closed form for the argument pattern.
struct PiPatternError : std::domain_error {
  using std::domain_error::domain_error;
};

// Exact evaluation: every axis integrand is a trigonometric polynomial, so
// an equispaced product rule with more nodes than the bandwidth is exact up
// to rounding. Large grids (node count above the budget) fall back to
// separating the kernel into its basis sum, which reduces the integral to
// 1-D quadratures and an N x N matrix trace.
double pi_quadrature(const EnsembleSpec& spec, const std::vector<int>& args);

// Closed forms for the documented argument patterns; throws PiPatternError
// otherwise.
double pi_closed(const EnsembleSpec& spec, const std::vector<int>& args);

struct PiCheckRow {
  std::vector<int> args;
  double closed = 0.0;
  double quadrature = 0.0;
  double abs_error = 0.0;
};

struct PiCheckReport {
  EnsembleSpec spec;
  std::vector<PiCheckRow> rows;
  double max_abs_error = 0.0;
};

// Evaluates every supported pattern for k, l in [1, k_max].
PiCheckReport pi_check(const EnsembleSpec& spec, int k_max);

// Internal quadrature knobs, exposed for tests.
double pi_quadrature_grid(const EnsembleSpec& spec, const std::vector<int>& args);
double pi_quadrature_separated(const EnsembleSpec& spec,
                               const std::vector<int>& args);

}  // namespace ccg
