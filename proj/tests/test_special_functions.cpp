#include <cmath>
#include <complex>

#include "ccg/ensembles.hpp"
#include "ccg/special_functions.hpp"
#include "doctest.h"

using namespace ccg;

namespace {

// Brute tails in long double; the analytic remainder beyond the cut is
// bracketed by integrals, giving certified two-sided bounds.
long double brute_tail(int64_t K, int p, int64_t terms) {
  long double acc = 0.0L;
  for (int64_t k = K + terms; k > K; --k) {
    acc += 1.0L / std::pow((long double)k, p);
  }
  return acc;
}

}  // namespace

TEST_CASE("tail_inv_square against brute force") {
  for (int64_t K : {0, 1, 2, 5, 17, 100, 5000}) {
    const int64_t terms = 2000000;
    const long double brute = brute_tail(K, 2, terms);
    // Remainder of the brute sum lies in (1/(end+1), 1/end).
    const long double lo = brute + 1.0L / (long double)(K + terms + 1);
    const long double hi = brute + 1.0L / (long double)(K + terms);
    const double v = tail_inv_square(K);
    CHECK(v >= (double)lo - 1e-13);
    CHECK(v <= (double)hi + 1e-13);
  }
  // zeta(2)
  CHECK(tail_inv_square(0) == doctest::Approx(kPi * kPi / 6).epsilon(1e-14));
}

TEST_CASE("tail_inv_fourth against brute force") {
  for (int64_t K : {0, 1, 3, 9, 64, 1024}) {
    const int64_t terms = 300000;
    const long double brute = brute_tail(K, 4, terms);
    const long double end = (long double)(K + terms);
    const long double lo = brute + 1.0L / (3.0L * (end + 1) * (end + 1) * (end + 1));
    const long double hi = brute + 1.0L / (3.0L * end * end * end);
    const double v = tail_inv_fourth(K);
    CHECK(v >= (double)lo - 1e-15);
    CHECK(v <= (double)hi + 1e-15);
  }
  // zeta(4)
  CHECK(tail_inv_fourth(0) ==
        doctest::Approx(kPi * kPi * kPi * kPi / 90).epsilon(1e-14));
}

TEST_CASE("shifted tail against brute force") {
  for (int64_t K : {1, 4, 20, 333}) {
    for (int64_t d : {1, 2, 7, 40}) {
      long double brute = 0.0L;
      for (int64_t k = K + 400000; k > K; --k) {
        brute += 1.0L / ((long double)k * k * (k + d) * (k + d));
      }
      CHECK(tail_inv_square_shifted(K, d) ==
            doctest::Approx((double)brute).epsilon(1e-10));
    }
  }
}

TEST_CASE("log_gamma matches lgamma on the real axis") {
  for (double x : {0.5, 1.0, 1.5, 2.0, 3.7, 11.25, 41.0}) {
    CHECK(log_gamma({x, 0.0}).real() ==
          doctest::Approx(std::lgamma(x)).epsilon(1e-13));
    CHECK(std::abs(log_gamma({x, 0.0}).imag()) < 1e-13);
  }
}

TEST_CASE("log_gamma functional equation in the complex plane") {
  for (double t : {0.1, 0.9, 3.0, 12.0, 49.0}) {
    const std::complex<double> z(1.0, -2.0 * t);
    const auto lhs = log_gamma(z + 1.0);
    const auto rhs = log_gamma(z) + std::log(z);
    CHECK(std::abs(lhs - rhs) < 1e-12 * (1.0 + std::abs(lhs)));
  }
}

TEST_CASE("gamma modulus identity |Gamma(1+iy)|^2 = pi y / sinh(pi y)") {
  for (double y : {0.25, 1.0, 2.0, 6.0}) {
    const auto lg = log_gamma({1.0, y});
    const double expect = 0.5 * std::log(kPi * y / std::sinh(kPi * y));
    CHECK(lg.real() == doctest::Approx(expect).epsilon(1e-12));
  }
}

TEST_CASE("digamma special values and recurrence") {
  CHECK(digamma({1.0, 0.0}).real() ==
        doctest::Approx(-kEulerGamma).epsilon(1e-13));
  CHECK(digamma({2.0, 0.0}).real() ==
        doctest::Approx(1.0 - kEulerGamma).epsilon(1e-13));
  // psi(1/2) = -gamma - 2 log 2
  CHECK(digamma({0.5, 0.0}).real() ==
        doctest::Approx(-kEulerGamma - 2 * std::log(2.0)).epsilon(1e-13));
  for (double t : {0.3, 2.0, 8.0, 33.0}) {
    const std::complex<double> z(1.0, -4.0 * t);
    const auto lhs = digamma(z + 1.0);
    const auto rhs = digamma(z) + 1.0 / z;
    CHECK(std::abs(lhs - rhs) < 1e-12 * (1.0 + std::abs(lhs)));
  }
}

TEST_CASE("digamma is the derivative of log_gamma") {
  const double h = 1e-5;
  for (double t : {0.4, 1.7, 5.0}) {
    const std::complex<double> z(1.4, -2.0 * t);
    const auto numeric = (log_gamma(z + h) - log_gamma(z - h)) / (2.0 * h);
    CHECK(std::abs(numeric - digamma(z)) < 1e-8);
  }
}

TEST_CASE("digamma series identity from the appendix derivation") {
  // sum_{k>=1} 2it/(k^2 - 4itk) = -(psi(1-4it) + gamma)/2
  for (double t : {0.5, 1.25}) {
    std::complex<double> acc = 0.0;
    const std::complex<double> i4t(0.0, 4.0 * t);
    for (int64_t k = 40000000; k >= 1; --k) {
      const double kk = static_cast<double>(k);
      acc += std::complex<double>(0.0, 2.0 * t) / (kk * kk - i4t * kk);
    }
    const auto expect = -(digamma({1.0, -4.0 * t}) + kEulerGamma) / 2.0;
    CHECK(std::abs(acc - expect) < 1e-6);
  }
}
