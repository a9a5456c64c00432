#include "ccg/haar.hpp"

#include <cmath>
#include <stdexcept>

namespace ccg {

namespace {

using cplx = std::complex<double>;

// In-place Householder QR; returns Q explicitly, diag(R) in rdiag.
void qr_decompose(std::vector<cplx>& a, int n, std::vector<cplx>& q,
                  std::vector<cplx>& rdiag) {
  q.assign(static_cast<size_t>(n) * n, 0.0);
  for (int i = 0; i < n; ++i) q[static_cast<size_t>(i) * n + i] = 1.0;
  rdiag.assign(n, 0.0);
  std::vector<cplx> v(n);
  for (int k = 0; k < n; ++k) {
    double norm2 = 0.0;
    for (int i = k; i < n; ++i) norm2 += std::norm(a[static_cast<size_t>(i) * n + k]);
    const double norm = std::sqrt(norm2);
    if (norm == 0.0) {
      rdiag[k] = 0.0;
      continue;
    }
    const cplx akk = a[static_cast<size_t>(k) * n + k];
    const double aabs = std::abs(akk);
    const cplx phase = aabs > 0.0 ? akk / aabs : cplx(1.0);
    const cplx alpha = -phase * norm;  // R_kk after reflection
    double vnorm2 = 0.0;
    for (int i = k; i < n; ++i) {
      v[i] = a[static_cast<size_t>(i) * n + k];
      if (i == k) v[i] -= alpha;
      vnorm2 += std::norm(v[i]);
    }
    if (vnorm2 == 0.0) {
      rdiag[k] = alpha;
      continue;
    }
    const double inv = 2.0 / vnorm2;
    // A <- (I - inv v v*) A on columns k..n-1
    for (int j = k; j < n; ++j) {
      cplx dot = 0.0;
      for (int i = k; i < n; ++i) dot += std::conj(v[i]) * a[static_cast<size_t>(i) * n + j];
      dot *= inv;
      for (int i = k; i < n; ++i) a[static_cast<size_t>(i) * n + j] -= dot * v[i];
    }
    // Q <- Q (I - inv v v*)
    for (int i = 0; i < n; ++i) {
      cplx dot = 0.0;
      for (int j = k; j < n; ++j) dot += q[static_cast<size_t>(i) * n + j] * v[j];
      dot *= inv;
      for (int j = k; j < n; ++j) q[static_cast<size_t>(i) * n + j] -= dot * std::conj(v[j]);
    }
    rdiag[k] = a[static_cast<size_t>(k) * n + k];
  }
}

HaarMatrix haar_unitary(int dim, Rng& rng, bool real) {
  std::vector<cplx> a(static_cast<size_t>(dim) * dim);
  for (auto& e : a) {
    e = real ? cplx(rng.normal(), 0.0) : cplx(rng.normal(), rng.normal());
  }
  std::vector<cplx> q, rdiag;
  qr_decompose(a, dim, q, rdiag);
  // Phase correction makes the distribution exactly Haar.
  for (int j = 0; j < dim; ++j) {
    const double aabs = std::abs(rdiag[j]);
    const cplx lambda = aabs > 0.0 ? rdiag[j] / aabs : cplx(1.0);
    for (int i = 0; i < dim; ++i) q[static_cast<size_t>(i) * dim + j] *= lambda;
  }
  HaarMatrix m;
  m.dim = dim;
  m.entries = std::move(q);
  return m;
}

void swap_columns(HaarMatrix& m, int c1, int c2) {
  for (int i = 0; i < m.dim; ++i) std::swap(m.at(i, c1), m.at(i, c2));
}

void negate_row(HaarMatrix& m, int r) {
  for (int j = 0; j < m.dim; ++j) m.at(r, j) = -m.at(r, j);
}

HaarMatrix haar_special_orthogonal(int dim, Rng& rng) {
  HaarMatrix m = haar_unitary(dim, rng, /*real=*/true);
  // Conditioning on det = +1 realized by a fixed det(-1) right factor.
  if (determinant(m).real() < 0.0) swap_columns(m, 0, dim - 1);
  return m;
}

}  // namespace

HaarMatrix sample_haar_matrix(GroupId g, int n, Rng& rng) {
  if (n < 1) throw std::invalid_argument("sample_haar_matrix: n < 1");
  HaarMatrix m;
  switch (g) {
    case GroupId::U:
    case GroupId::SU:
      // SU is exercised through U; the eigenvalue statistics agree.
      m = haar_unitary(n, rng, /*real=*/false);
      break;
    case GroupId::SoOdd:
      m = haar_special_orthogonal(2 * n + 1, rng);
      break;
    case GroupId::OOdd:
      m = haar_special_orthogonal(2 * n + 1, rng);
      negate_row(m, 0);  // fixed reflection onto the det = -1 coset
      break;
    case GroupId::SoEven:
      m = haar_special_orthogonal(2 * n, rng);
      break;
    case GroupId::OMinus:
      m = haar_special_orthogonal(2 * n + 2, rng);
      negate_row(m, 0);
      break;
    case GroupId::USp:
      throw std::invalid_argument(
          "sample_haar_matrix: USp dense sampling unsupported; use the "
          "determinantal sampler");
  }
  m.group = g;
  return m;
}

double unitarity_defect(const HaarMatrix& m) {
  const int n = m.dim;
  double worst = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      cplx dot = 0.0;
      for (int k = 0; k < n; ++k) dot += std::conj(m.at(k, i)) * m.at(k, j);
      if (i == j) dot -= 1.0;
      worst = std::max(worst, std::abs(dot));
    }
  }
  return worst;
}

std::complex<double> determinant(const HaarMatrix& m) {
  const int n = m.dim;
  std::vector<cplx> a = m.entries;
  cplx det = 1.0;
  for (int k = 0; k < n; ++k) {
    int pivot = k;
    double best = std::abs(a[static_cast<size_t>(k) * n + k]);
    for (int i = k + 1; i < n; ++i) {
      const double mag = std::abs(a[static_cast<size_t>(i) * n + k]);
      if (mag > best) {
        best = mag;
        pivot = i;
      }
    }
    if (best == 0.0) return 0.0;
    if (pivot != k) {
      for (int j = 0; j < n; ++j) {
        std::swap(a[static_cast<size_t>(pivot) * n + j], a[static_cast<size_t>(k) * n + j]);
      }
      det = -det;
    }
    const cplx akk = a[static_cast<size_t>(k) * n + k];
    det *= akk;
    for (int i = k + 1; i < n; ++i) {
      const cplx f = a[static_cast<size_t>(i) * n + k] / akk;
      for (int j = k; j < n; ++j) {
        a[static_cast<size_t>(i) * n + j] -= f * a[static_cast<size_t>(k) * n + j];
      }
    }
  }
  return det;
}

std::vector<std::complex<double>> traces(const HaarMatrix& m, int k_max) {
  if (k_max < 1) throw std::invalid_argument("traces: k_max < 1");
  const int n = m.dim;
  std::vector<cplx> power = m.entries;
  std::vector<cplx> next(static_cast<size_t>(n) * n);
  std::vector<cplx> out;
  out.reserve(k_max);
  for (int k = 1; k <= k_max; ++k) {
    cplx tr = 0.0;
    for (int i = 0; i < n; ++i) tr += power[static_cast<size_t>(i) * n + i];
    out.push_back(tr);
    if (k == k_max) break;
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        cplx dot = 0.0;
        for (int t = 0; t < n; ++t) {
          dot += power[static_cast<size_t>(i) * n + t] * m.entries[static_cast<size_t>(t) * n + j];
        }
        next[static_cast<size_t>(i) * n + j] = dot;
      }
    }
    power.swap(next);
  }
  return out;
}

}  // namespace ccg
