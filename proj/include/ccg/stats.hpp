#pragma once

#include <cstdint>
#include <functional>
#include <vector>

namespace ccg {

struct SampleMoments {
  int64_t count = 0;
  double mean = 0.0;
  double variance = 0.0;        // unbiased
  double fourth_central = 0.0;  // biased m4, used for se(variance)
  double se_mean = 0.0;
  double se_variance = 0.0;     // sqrt((m4 - var^2)/n)
};

// Two-pass summary; deterministic for a fixed value order.
SampleMoments summarize(const std::vector<double>& values);

// sup |F_n - F| against a reference CDF; sorts a copy.
double ks_distance(std::vector<double> values,
                   const std::function<double(double)>& cdf);
double ks_distance_sorted(const std::vector<double>& sorted,
                          const std::function<double(double)>& cdf);

// Two-sample KS via merge walk; sorts copies.
double ks_two_sample(std::vector<double> a, std::vector<double> b);

// Least-squares slope of y against x.
double regression_slope(const std::vector<double>& x,
                        const std::vector<double>& y);

}  // namespace ccg
