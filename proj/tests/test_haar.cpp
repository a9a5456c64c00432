#include <cmath>
#include <complex>

#include "ccg/haar.hpp"
#include "doctest.h"

using namespace ccg;

TEST_CASE("unitarity and determinant constraints") {
  Rng rng(3);
  struct Case {
    GroupId g;
    int n;
    int dim;
    double det;  // expected real determinant, 0 = unconstrained modulus 1
  };
  for (const Case& c :
       {Case{GroupId::U, 5, 5, 0.0}, Case{GroupId::SoOdd, 3, 7, 1.0},
        Case{GroupId::OOdd, 3, 7, -1.0}, Case{GroupId::SoEven, 2, 4, 1.0},
        Case{GroupId::OMinus, 2, 6, -1.0}}) {
    for (int rep = 0; rep < 25; ++rep) {
      const auto m = sample_haar_matrix(c.g, c.n, rng);
      REQUIRE(m.dim == c.dim);
      CHECK(unitarity_defect(m) < 1e-10);
      const auto det = determinant(m);
      CHECK(std::abs(std::abs(det) - 1.0) < 1e-10);
      if (c.det != 0.0) {
        CHECK(std::abs(det.real() - c.det) < 1e-10);
        CHECK(std::abs(det.imag()) < 1e-10);
      }
    }
  }
  CHECK_THROWS_AS(sample_haar_matrix(GroupId::USp, 2, rng),
                  std::invalid_argument);
}

TEST_CASE("orthogonal draws are real") {
  Rng rng(11);
  const auto m = sample_haar_matrix(GroupId::SoEven, 3, rng);
  for (const auto& e : m.entries) CHECK(e.imag() == 0.0);
}

TEST_CASE("U(1) is a uniform phase") {
  Rng rng(17);
  const int reps = 40000;
  std::complex<double> mean = 0.0;
  for (int rep = 0; rep < reps; ++rep) {
    const auto m = sample_haar_matrix(GroupId::U, 1, rng);
    CHECK(std::abs(std::abs(m.entries[0]) - 1.0) < 1e-12);
    mean += m.entries[0];
  }
  mean /= static_cast<double>(reps);
  CHECK(std::abs(mean) < 4.0 / std::sqrt(2.0 * reps));
}

TEST_CASE("traces of fixed matrices") {
  HaarMatrix ident;
  ident.dim = 2;
  ident.entries = {1.0, 0.0, 0.0, 1.0};
  const auto tr = traces(ident, 3);
  REQUIRE(tr.size() == 3);
  for (const auto& t : tr) CHECK(t == std::complex<double>(2.0, 0.0));

  HaarMatrix diag;
  diag.dim = 2;
  diag.entries = {{0.0, 1.0}, 0.0, 0.0, {0.0, -1.0}};
  const auto tr2 = traces(diag, 2);
  CHECK(std::abs(tr2[0]) < 1e-15);
  CHECK(tr2[1].real() == doctest::Approx(-2.0));
}

TEST_CASE("variance of Tr A for U(N) is 1") {
  Rng rng(23);
  const int reps = 20000;
  double sum_sq = 0.0;
  std::complex<double> sum = 0.0;
  for (int rep = 0; rep < reps; ++rep) {
    const auto m = sample_haar_matrix(GroupId::U, 6, rng);
    const auto tr = traces(m, 1);
    sum += tr[0];
    sum_sq += std::norm(tr[0]);
  }
  // E Tr A = 0, E |Tr A|^2 = 1
  CHECK(std::abs(sum) / reps < 4.0 / std::sqrt((double)reps));
  CHECK(std::abs(sum_sq / reps - 1.0) < 4.0 * std::sqrt(2.0 / reps));
}

TEST_CASE("mean of Tr A^2 is +1 for SO(5)") {
  Rng rng(29);
  const int reps = 20000;
  double sum = 0.0, sumsq = 0.0;
  for (int rep = 0; rep < reps; ++rep) {
    const auto m = sample_haar_matrix(GroupId::SoOdd, 2, rng);
    const auto tr = traces(m, 2);
    sum += tr[1].real();
    sumsq += tr[1].real() * tr[1].real();
  }
  const double mean = sum / reps;
  const double se = std::sqrt((sumsq / reps - mean * mean) / reps);
  CHECK(std::abs(mean - 1.0) < 4.0 * se);
}
