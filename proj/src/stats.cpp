#include "ccg/stats.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ccg {

SampleMoments summarize(const std::vector<double>& values) {
  SampleMoments m;
  m.count = static_cast<int64_t>(values.size());
  if (m.count == 0) return m;
  double sum = 0.0;
  for (double v : values) sum += v;
  m.mean = sum / static_cast<double>(m.count);
  double m2 = 0.0, m4 = 0.0;
  for (double v : values) {
    const double d = v - m.mean;
    const double d2 = d * d;
    m2 += d2;
    m4 += d2 * d2;
  }
  const double n = static_cast<double>(m.count);
  m.fourth_central = m4 / n;
  m.variance = m.count > 1 ? m2 / (n - 1.0) : 0.0;
  if (m.count > 1) {
    m.se_mean = std::sqrt(m.variance / n);
    const double var_of_var = (m.fourth_central - m.variance * m.variance) / n;
    m.se_variance = var_of_var > 0.0 ? std::sqrt(var_of_var) : 0.0;
  }
  return m;
}

double ks_distance_sorted(const std::vector<double>& sorted,
                          const std::function<double(double)>& cdf) {
  const size_t n = sorted.size();
  if (n == 0) throw std::invalid_argument("ks_distance: empty sample");
  double d = 0.0;
  for (size_t i = 0; i < n; ++i) {
    const double f = cdf(sorted[i]);
    const double hi = (static_cast<double>(i) + 1.0) / static_cast<double>(n) - f;
    const double lo = f - static_cast<double>(i) / static_cast<double>(n);
    d = std::max(d, std::max(hi, lo));
  }
  return d;
}

double ks_distance(std::vector<double> values,
                   const std::function<double(double)>& cdf) {
  std::sort(values.begin(), values.end());
  return ks_distance_sorted(values, cdf);
}

double ks_two_sample(std::vector<double> a, std::vector<double> b) {
  if (a.empty() || b.empty()) {
    throw std::invalid_argument("ks_two_sample: empty sample");
  }
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  const double na = static_cast<double>(a.size());
  const double nb = static_cast<double>(b.size());
  size_t i = 0, j = 0;
  double d = 0.0;
  while (i < a.size() && j < b.size()) {
    const double x = std::min(a[i], b[j]);
    while (i < a.size() && a[i] <= x) ++i;
    while (j < b.size() && b[j] <= x) ++j;
    d = std::max(d, std::abs(static_cast<double>(i) / na -
                             static_cast<double>(j) / nb));
  }
  return d;
}

double regression_slope(const std::vector<double>& x,
                        const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2) {
    throw std::invalid_argument("regression_slope: need matching n >= 2");
  }
  const double n = static_cast<double>(x.size());
  double sx = 0.0, sy = 0.0;
  for (size_t i = 0; i < x.size(); ++i) {
    sx += x[i];
    sy += y[i];
  }
  const double mx = sx / n, my = sy / n;
  double sxx = 0.0, sxy = 0.0;
  for (size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
  }
  return sxy / sxx;
}

}  // namespace ccg
