#pragma once

#include <complex>
#include <vector>

#include "ccg/ensembles.hpp"
#include "ccg/rng.hpp"

namespace ccg {

// Dense square matrix, row-major complex storage. Orthogonal-group draws
// have zero imaginary parts.
struct HaarMatrix {
  GroupId group{};
  int dim = 0;
  std::vector<std::complex<double>> entries;

  std::complex<double>& at(int i, int j) { return entries[static_cast<size_t>(i) * dim + j]; }
  const std::complex<double>& at(int i, int j) const {
    return entries[static_cast<size_t>(i) * dim + j];
  }
};

// Haar sample via QR of a Gaussian matrix with diagonal phase correction.
//   U       -> U(n)           (dim n, complex)
//   SO_ODD  -> SO(2n+1)
//   O_ODD   -> O^-(2n+1), a Haar SO(2n+1) draw reflected by diag(-1,1,..,1)
//   SO_EVEN -> SO(2n)
//   O_MINUS -> O^-(2n+2)
// USP is not supported here; its eigen-angle law is exercised through the
// determinantal sampler, which shares the O^-(2N+2) kernel.
HaarMatrix sample_haar_matrix(GroupId g, int n, Rng& rng);

// max |A* A - I|.
double unitarity_defect(const HaarMatrix& m);

std::complex<double> determinant(const HaarMatrix& m);

// (Tr A, Tr A^2, ..., Tr A^k_max) by iterated multiplication.
std::vector<std::complex<double>> traces(const HaarMatrix& m, int k_max);

}  // namespace ccg
