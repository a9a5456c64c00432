#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ccg/ensembles.hpp"
#include "ccg/exact_moments.hpp"
#include "ccg/stats.hpp"

namespace ccg {

struct ExperimentConfig {
  GroupId group = GroupId::U;
  int n = 8;
  int64_t replicates = 100000;
  uint64_t seed = 1;
  int jobs = 1;
  double tol = 1e-10;
  // Statistical gates; every pass/fail decision uses these, nothing is
  // hard-coded in the experiment bodies.
  double z_gate = 4.0;
  double ks_gate = 0.03;
  // limit-law ladder and xi reference table controls
  std::vector<int> ladder = {8, 16, 32, 64};
  int64_t xi_kmax = 100000;
  int64_t reference_replicates = 1000000;
  int64_t reference_kmax = 40000;
};

struct Gate {
  std::string name;
  double value = 0.0;
  double threshold = 0.0;
  bool pass = false;  // value <= threshold
};

struct McReport {
  std::string kind;
  ExperimentConfig config;
  SampleMoments sample;
  double exact_mean = 0.0;
  double exact_variance = 0.0;
  double z_mean = 0.0;
  double z_variance = 0.0;
  std::vector<Gate> gates;
  double runtime_seconds = 0.0;
  bool pass = true;
};

// Batch of W_2^2 draws; slot i comes from stream (seed, stream_offset + i).
std::vector<double> w2sq_batch(const EnsembleSpec& spec, int64_t replicates,
                               uint64_t seed, int jobs,
                               uint64_t stream_offset = 0);

// Monte Carlo verification of the exact mean/variance formulas.
McReport mc_experiment(const ExperimentConfig& config);

// Centered statistic N0^2 W_2^2 - 2 log N0 - c_G along the N-ladder, KS
// against the xi reference (closed CDF for U/SU, a sampled table otherwise).
McReport limit_law_experiment(const ExperimentConfig& config);

// Two-sample KS between a group and its reduction alias.
McReport reduction_test(const ExperimentConfig& config);

// Trace moments versus the fixed-k limit law: matrix route for matrix-backed
// groups, angle sums through the determinantal sampler otherwise.
McReport trace_experiment(const ExperimentConfig& config, int k_max,
                          bool use_matrix);

std::string report_to_json(const McReport& report);
std::string report_to_csv(const McReport& report);

}  // namespace ccg
