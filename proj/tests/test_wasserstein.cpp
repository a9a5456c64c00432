#include <cmath>
#include <vector>

#include "ccg/rng.hpp"
#include "ccg/wasserstein.hpp"
#include "doctest.h"

using namespace ccg;

namespace {

SpectralMeasure equally_spaced(int n) {
  SpectralMeasure m;
  for (int i = 0; i < n; ++i) m.atoms.push_back(kTwoPi * i / n);
  return m;
}

SpectralMeasure random_measure(Rng& rng, int max_atoms) {
  SpectralMeasure m;
  const int n = 1 + static_cast<int>(rng.uniform01() * max_atoms);
  for (int i = 0; i < n; ++i) m.atoms.push_back(rng.uniform(0.0, kTwoPi));
  return m;
}

}  // namespace

TEST_CASE("bernoulli kernel equals the truncated Fourier series") {
  // b(x) = sum_{k != 0} e^{ikx}/k^2 = 2 sum_{k>=1} cos(kx)/k^2; partial sums
  // converge with tail below 2/K.
  Rng rng(21);
  const int64_t K = 200000;
  for (int rep = 0; rep < 20; ++rep) {
    const double x = rng.uniform(0.0, kTwoPi);
    double partial = 0.0;
    for (int64_t k = K; k >= 1; --k) {
      partial += std::cos(k * x) / (static_cast<double>(k) * k);
    }
    CHECK(std::abs(bernoulli_kernel(x) - 2.0 * partial) < 2.0 / K + 1e-9);
  }
  CHECK(bernoulli_kernel(0.0) == doctest::Approx(kPi * kPi / 3).epsilon(1e-15));
}

TEST_CASE("fourier coefficients: examples") {
  SpectralMeasure one{{0.0}};
  CHECK(fourier_coeff(one, 3).real() == doctest::Approx(1.0));
  CHECK(fourier_coeff(one, -5).real() == doctest::Approx(1.0));
  CHECK_THROWS_AS(fourier_coeff(one, 0), std::domain_error);

  const auto m8 = equally_spaced(8);
  CHECK(std::abs(fourier_coeff(m8, 3)) < 1e-14);
  CHECK(std::abs(fourier_coeff(m8, 8) - std::complex<double>(1.0, 0.0)) < 1e-13);

  SpectralMeasure pair{{0.0, kPi}};
  CHECK(std::abs(fourier_coeff(pair, 1)) < 1e-15);
  CHECK(fourier_coeff(pair, 2).real() == doctest::Approx(1.0));
}

TEST_CASE("closed form: single atom and equally spaced") {
  SpectralMeasure one{{2.37}};
  CHECK(w2sq_closed(one).value == doctest::Approx(kPi * kPi / 3).epsilon(1e-15));
  CHECK(w2sq_closed(one).tail_bound == 0.0);

  for (int n = 1; n <= 64; ++n) {
    const auto m = equally_spaced(n);
    CHECK(std::abs(w2sq_closed(m).value - kPi * kPi / (3.0 * n * n)) < 1e-10);
  }

  SpectralMeasure pair{{0.0, kPi}};
  CHECK(w2sq_closed(pair).value == doctest::Approx(kPi * kPi / 12).epsilon(1e-13));

  SpectralMeasure empty;
  CHECK_THROWS_AS(w2sq_closed(empty), std::invalid_argument);
}

TEST_CASE("fourier route: single atom partial zeta and one-term value") {
  SpectralMeasure one{{1.0}};
  const auto r = w2sq_fourier(one, 1000000);
  CHECK(r.tail_bound == doctest::Approx(2e-6));
  CHECK(std::abs(r.value - kPi * kPi / 3) < 2e-6);

  Rng rng(31);
  for (int rep = 0; rep < 10; ++rep) {
    auto m = random_measure(rng, 6);
    const auto one_term = w2sq_fourier(m, 1);
    CHECK(one_term.value ==
          doctest::Approx(2.0 * std::norm(fourier_coeff(m, 1))).epsilon(1e-12));
  }
}

TEST_CASE("closed and fourier agree within the tail bound") {
  Rng rng(37);
  for (int rep = 0; rep < 100; ++rep) {
    auto m = random_measure(rng, 50);
    const auto closed = w2sq_closed(m);
    const auto fourier = w2sq_fourier(m, 20000);
    CHECK(closed.value >= fourier.value - 1e-11);
    CHECK(closed.value - fourier.value <= fourier.tail_bound + 1e-11);
  }
}

TEST_CASE("rotation and reflection invariance") {
  Rng rng(41);
  for (int rep = 0; rep < 50; ++rep) {
    auto m = random_measure(rng, 30);
    const double base = w2sq_closed(m).value;
    const double shift = rng.uniform(0.0, kTwoPi);
    SpectralMeasure rotated, reflected;
    for (double a : m.atoms) {
      double r = a + shift;
      r -= kTwoPi * std::floor(r / kTwoPi);
      rotated.atoms.push_back(r);
      reflected.atoms.push_back(kTwoPi - a >= kTwoPi ? 0.0 : kTwoPi - a);
    }
    CHECK(std::abs(w2sq_closed(rotated).value - base) < 1e-10);
    CHECK(std::abs(w2sq_closed(reflected).value - base) < 1e-10);
  }
}

TEST_CASE("upper bound pi^2/3") {
  Rng rng(43);
  for (int rep = 0; rep < 200; ++rep) {
    auto m = random_measure(rng, 20);
    CHECK(w2sq_closed(m).value <= kPi * kPi / 3 + 1e-12);
  }
}

TEST_CASE("diaphony and characteristic polynomial norm identities") {
  SpectralMeasure one{{0.7}};
  CHECK(diaphony(one) == doctest::Approx(1.0 / std::sqrt(6.0)).epsilon(1e-13));
  CHECK(fa_l2norm(one) == doctest::Approx(kPi / std::sqrt(3.0)).epsilon(1e-13));

  for (int n : {2, 5, 16}) {
    const auto m = equally_spaced(n);
    CHECK(diaphony(m) == doctest::Approx(1.0 / (std::sqrt(6.0) * n)).epsilon(1e-10));
    // N0 * W2 with W2 = pi/(sqrt3 N): independent of N.
    CHECK(fa_l2norm(m) == doctest::Approx(kPi / std::sqrt(3.0)).epsilon(1e-10));
  }

  Rng rng(47);
  for (int rep = 0; rep < 50; ++rep) {
    auto m = random_measure(rng, 25);
    const double w2sq = w2sq_closed(m).value;
    const double d = diaphony(m);
    CHECK(2.0 * kPi * kPi * d * d == doctest::Approx(w2sq).epsilon(1e-12));
    CHECK(fa_l2norm(m) ==
          doctest::Approx(m.n0() * std::sqrt(w2sq)).epsilon(1e-12));
  }
}
