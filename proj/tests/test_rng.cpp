#include <cmath>
#include <cstdint>
#include <vector>

#include "ccg/rng.hpp"
#include "ccg/stats.hpp"
#include "doctest.h"

using namespace ccg;

TEST_CASE("same seed and stream reproduce the sequence") {
  Rng a(42, 7), b(42, 7);
  for (int i = 0; i < 1000; ++i) CHECK(a.next_u64() == b.next_u64());
}

TEST_CASE("different streams decorrelate") {
  Rng a(42, 0), b(42, 1);
  int agree = 0;
  for (int i = 0; i < 64; ++i) {
    if (a.next_u64() == b.next_u64()) ++agree;
  }
  CHECK(agree == 0);
}

TEST_CASE("uniform01 range and mean") {
  Rng rng(1);
  double sum = 0.0;
  const int n = 200000;
  for (int i = 0; i < n; ++i) {
    const double u = rng.uniform01();
    REQUIRE(u >= 0.0);
    REQUIRE(u < 1.0);
    sum += u;
  }
  CHECK(std::abs(sum / n - 0.5) < 4.0 * 0.2887 / std::sqrt(n));
}

TEST_CASE("ziggurat normal moments") {
  Rng rng(7);
  const int n = 2000000;
  double s1 = 0, s2 = 0, s3 = 0, s4 = 0;
  for (int i = 0; i < n; ++i) {
    const double x = rng.normal();
    s1 += x;
    s2 += x * x;
    s3 += x * x * x;
    s4 += x * x * x * x;
  }
  const double inv = 1.0 / n;
  CHECK(std::abs(s1 * inv) < 4.0 / std::sqrt((double)n));
  CHECK(std::abs(s2 * inv - 1.0) < 4.0 * std::sqrt(2.0 / n));
  CHECK(std::abs(s3 * inv) < 4.0 * std::sqrt(15.0 / n));
  CHECK(std::abs(s4 * inv - 3.0) < 4.0 * std::sqrt(96.0 / n));
}

TEST_CASE("ziggurat normal distribution via KS") {
  Rng rng(11);
  std::vector<double> xs(400000);
  for (auto& x : xs) x = rng.normal();
  const double ks = ks_distance(std::move(xs), [](double x) {
    return 0.5 * std::erfc(-x / std::sqrt(2.0));
  });
  // 4-sigma-ish asymptotic threshold ~ 1.95 / sqrt(n)
  CHECK(ks < 1.95 / std::sqrt(400000.0));
}

TEST_CASE("ziggurat normal tail frequencies") {
  Rng rng(13);
  const int n = 4000000;
  int above2 = 0, above3 = 0;
  for (int i = 0; i < n; ++i) {
    const double x = rng.normal();
    if (x > 2.0) ++above2;
    if (x > 3.0) ++above3;
  }
  const double p2 = 0.022750131948179195;
  const double p3 = 0.0013498980316300933;
  CHECK(std::abs(above2 / (double)n - p2) <
        4.0 * std::sqrt(p2 * (1 - p2) / n));
  CHECK(std::abs(above3 / (double)n - p3) <
        4.0 * std::sqrt(p3 * (1 - p3) / n));
}

TEST_CASE("block fills match single draws bit for bit") {
  Rng a(123, 5), b(123, 5);
  std::vector<double> block(1000);
  a.fill_normal(block.data(), 1000);
  for (int i = 0; i < 1000; ++i) CHECK(block[i] == b.normal());
  Rng c(9, 2), d(9, 2);
  c.fill_exponential(block.data(), 777);
  for (int i = 0; i < 777; ++i) CHECK(block[i] == d.exponential());
  // and the state after the block agrees
  CHECK(c.next_u64() == d.next_u64());
  CHECK(a.next_u64() == b.next_u64());
}

TEST_CASE("ziggurat exponential moments and KS") {
  Rng rng(17);
  const int n = 2000000;
  double s1 = 0, s2 = 0;
  std::vector<double> sample(200000);
  for (int i = 0; i < n; ++i) {
    const double x = rng.exponential();
    REQUIRE(x >= 0.0);
    s1 += x;
    s2 += x * x;
    if (i < (int)sample.size()) sample[i] = x;
  }
  CHECK(std::abs(s1 / n - 1.0) < 4.0 / std::sqrt((double)n));
  CHECK(std::abs(s2 / n - 2.0) < 4.0 * std::sqrt(20.0 / n));
  const double ks =
      ks_distance(std::move(sample), [](double x) { return 1.0 - std::exp(-x); });
  CHECK(ks < 1.95 / std::sqrt(200000.0));
}
