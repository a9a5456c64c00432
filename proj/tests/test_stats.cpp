#include <cmath>
#include <stdexcept>
#include <vector>

#include "ccg/rng.hpp"
#include "ccg/stats.hpp"
#include "doctest.h"

using namespace ccg;

TEST_CASE("summarize on a known small sample") {
  const std::vector<double> v{1.0, 2.0, 3.0, 4.0};
  const auto m = summarize(v);
  CHECK(m.count == 4);
  CHECK(m.mean == doctest::Approx(2.5));
  CHECK(m.variance == doctest::Approx(5.0 / 3.0));
  // biased central moments: m2 = 1.25, m4 = 2.5625 -> (41/16)
  CHECK(m.fourth_central == doctest::Approx(41.0 / 16.0));
  CHECK(m.se_mean == doctest::Approx(std::sqrt(5.0 / 3.0 / 4.0)));
}

TEST_CASE("ks distance for a perfect grid is 1/(2n) against midpoints") {
  // uniform points at (i+0.5)/n give KS = 1/(2n) against U(0,1)
  const int n = 100;
  std::vector<double> v(n);
  for (int i = 0; i < n; ++i) v[i] = (i + 0.5) / n;
  CHECK(ks_distance(v, [](double x) { return x; }) == doctest::Approx(0.005));
}

TEST_CASE("ks distance detects a wrong reference") {
  Rng rng(3);
  std::vector<double> v(20000);
  for (auto& x : v) x = rng.uniform01();
  CHECK(ks_distance(v, [](double x) { return x; }) < 0.015);
  CHECK(ks_distance(v, [](double x) { return x * x; }) > 0.2);
}

TEST_CASE("two-sample ks: identical vs shifted") {
  Rng rng(5);
  std::vector<double> a(10000), b(10000), c(10000);
  for (auto& x : a) x = rng.normal();
  for (auto& x : b) x = rng.normal();
  for (auto& x : c) x = rng.normal() + 0.2;
  CHECK(ks_two_sample(a, b) < 0.03);
  CHECK(ks_two_sample(a, c) > 0.05);
}

TEST_CASE("regression slope recovers a line") {
  std::vector<double> x{1, 2, 3, 4, 5}, y;
  for (double xi : x) y.push_back(3.0 - 0.95 * xi);
  CHECK(regression_slope(x, y) == doctest::Approx(-0.95).epsilon(1e-12));
  CHECK_THROWS_AS(regression_slope({1.0}, {2.0}), std::invalid_argument);
}
