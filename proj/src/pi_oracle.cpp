#include "ccg/pi_oracle.hpp"

#include <cmath>
#include <complex>
#include <numeric>
#include <stdexcept>

#include "combinatorial_detail.hpp"

namespace ccg {

namespace {

using cplx = std::complex<double>;
using detail::alpha_even_so;
using detail::alpha_even_sp;
using detail::alpha_odd;
using detail::eps_even_so;
using detail::eps_even_sp;
using detail::eps_odd;
using detail::pos;

constexpr double kNodeBudget = 1e8;

int max_abs(const std::vector<int>& args) {
  int m = 0;
  for (int a : args) m = std::max(m, std::abs(a));
  return m;
}

// Per-axis bandwidth of the cyclic product integrand.
int grid_nodes(const EnsembleSpec& spec, const std::vector<int>& args) {
  const int n = spec.n;
  const int a = max_abs(args);
  if (spec.kernel == KernelFamily::Exp) return n + a + 2;
  return 2 * n + a + 2;  // two kernel factors touch each axis
}

// --- dense trace over the quadrature grid ------------------------------

double grid_trace_real(const EnsembleSpec& spec, const std::vector<int>& args,
                       int m_nodes) {
  const size_t M = static_cast<size_t>(m_nodes);
  std::vector<double> nodes(M);
  for (size_t i = 0; i < M; ++i) nodes[i] = kTwoPi * static_cast<double>(i) / m_nodes;

  // Kernel matrix on the grid from its basis expansion.
  const int n = spec.n;
  std::vector<double> basis(static_cast<size_t>(n) * M);
  for (int j = 0; j < n; ++j) {
    for (size_t i = 0; i < M; ++i) {
      basis[static_cast<size_t>(j) * M + i] = basis_eval(spec, j, nodes[i]).real();
    }
  }
  std::vector<double> g(M * M, 0.0);
  for (int j = 0; j < n; ++j) {
    const double* row = basis.data() + static_cast<size_t>(j) * M;
    for (size_t x = 0; x < M; ++x) {
      const double bx = row[x];
      double* grow = g.data() + x * M;
      for (size_t y = 0; y < M; ++y) grow[y] += bx * row[y];
    }
  }

  // prod = D_{a1} G; then repeatedly right-multiply by D_{a} G.
  auto weight = [&](int a, size_t i) { return std::cos(a * nodes[i]); };
  std::vector<double> prod(M * M), next(M * M);
  for (size_t x = 0; x < M; ++x) {
    const double w = weight(args[0], x);
    for (size_t y = 0; y < M; ++y) prod[x * M + y] = w * g[x * M + y];
  }
  for (size_t t = 1; t < args.size(); ++t) {
    std::vector<double> dg(M * M);
    for (size_t x = 0; x < M; ++x) {
      const double w = weight(args[t], x);
      for (size_t y = 0; y < M; ++y) dg[x * M + y] = w * g[x * M + y];
    }
    for (size_t x = 0; x < M; ++x) {
      for (size_t y = 0; y < M; ++y) {
        double acc = 0.0;
        for (size_t z = 0; z < M; ++z) acc += prod[x * M + z] * dg[z * M + y];
        next[x * M + y] = acc;
      }
    }
    prod.swap(next);
  }
  double tr = 0.0;
  for (size_t x = 0; x < M; ++x) tr += prod[x * M + x];
  return tr / std::pow(static_cast<double>(m_nodes), static_cast<double>(args.size()));
}

double grid_trace_unitary(const EnsembleSpec& spec, const std::vector<int>& args,
                          int m_nodes) {
  const size_t M = static_cast<size_t>(m_nodes);
  std::vector<double> nodes(M);
  for (size_t i = 0; i < M; ++i) nodes[i] = kTwoPi * static_cast<double>(i) / m_nodes;
  const int n = spec.n;
  std::vector<cplx> g(M * M, 0.0);
  for (size_t x = 0; x < M; ++x) {
    for (size_t y = 0; y < M; ++y) {
      const double d = nodes[x] - nodes[y];
      cplx sum = 0.0;
      for (int j = 0; j < n; ++j) sum += cplx(std::cos(j * d), std::sin(j * d));
      g[x * M + y] = sum;
    }
  }
  std::vector<cplx> prod(M * M), next(M * M);
  auto weight = [&](int a, size_t i) {
    return cplx(std::cos(a * nodes[i]), std::sin(a * nodes[i]));
  };
  for (size_t x = 0; x < M; ++x) {
    const cplx w = weight(args[0], x);
    for (size_t y = 0; y < M; ++y) prod[x * M + y] = w * g[x * M + y];
  }
  for (size_t t = 1; t < args.size(); ++t) {
    std::vector<cplx> dg(M * M);
    for (size_t x = 0; x < M; ++x) {
      const cplx w = weight(args[t], x);
      for (size_t y = 0; y < M; ++y) dg[x * M + y] = w * g[x * M + y];
    }
    for (size_t x = 0; x < M; ++x) {
      for (size_t y = 0; y < M; ++y) {
        cplx acc = 0.0;
        for (size_t z = 0; z < M; ++z) acc += prod[x * M + z] * dg[z * M + y];
        next[x * M + y] = acc;
      }
    }
    prod.swap(next);
  }
  cplx tr = 0.0;
  for (size_t x = 0; x < M; ++x) tr += prod[x * M + x];
  tr /= std::pow(static_cast<double>(m_nodes), static_cast<double>(args.size()));
  if (std::abs(tr.imag()) > 1e-6 * (1.0 + std::abs(tr.real()))) {
    throw std::logic_error("pi_quadrature: unexpected imaginary part");
  }
  return tr.real();
}

// --- separated route: 1-D quadratures + N x N trace --------------------

double separated_real(const EnsembleSpec& spec, const std::vector<int>& args) {
  const int n = spec.n;
  const int m1 = 2 * spec.n + max_abs(args) + 2;
  std::vector<double> nodes(m1), base(static_cast<size_t>(n) * m1);
  for (int i = 0; i < m1; ++i) nodes[i] = kTwoPi * i / static_cast<double>(m1);
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < m1; ++i) {
      base[static_cast<size_t>(j) * m1 + i] = basis_eval(spec, j, nodes[i]).real();
    }
  }
  auto weighted_gram = [&](int a) {
    std::vector<double> mat(static_cast<size_t>(n) * n, 0.0);
    std::vector<double> w(m1);
    for (int i = 0; i < m1; ++i) w[i] = std::cos(a * nodes[i]) / m1;
    for (int j = 0; j < n; ++j) {
      for (int j2 = j; j2 < n; ++j2) {
        double acc = 0.0;
        const double* rj = base.data() + static_cast<size_t>(j) * m1;
        const double* r2 = base.data() + static_cast<size_t>(j2) * m1;
        for (int i = 0; i < m1; ++i) acc += rj[i] * r2[i] * w[i];
        mat[static_cast<size_t>(j) * n + j2] = acc;
        mat[static_cast<size_t>(j2) * n + j] = acc;
      }
    }
    return mat;
  };
  std::vector<double> prod = weighted_gram(args[0]);
  for (size_t t = 1; t < args.size(); ++t) {
    std::vector<double> rhs = weighted_gram(args[t]);
    std::vector<double> next(static_cast<size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i) {
      for (int kx = 0; kx < n; ++kx) {
        const double p = prod[static_cast<size_t>(i) * n + kx];
        if (p == 0.0) continue;
        const double* row = rhs.data() + static_cast<size_t>(kx) * n;
        double* out = next.data() + static_cast<size_t>(i) * n;
        for (int j = 0; j < n; ++j) out[j] += p * row[j];
      }
    }
    prod.swap(next);
  }
  double tr = 0.0;
  for (int i = 0; i < n; ++i) tr += prod[static_cast<size_t>(i) * n + i];
  return tr;
}

double separated_unitary(const EnsembleSpec& spec, const std::vector<int>& args) {
  const int n = spec.n;
  const int m1 = 2 * spec.n + 2 * max_abs(args) + 2;
  std::vector<double> nodes(m1);
  for (int i = 0; i < m1; ++i) nodes[i] = kTwoPi * i / static_cast<double>(m1);
  auto weighted_gram = [&](int a) {
    std::vector<cplx> mat(static_cast<size_t>(n) * n, 0.0);
    for (int j = 0; j < n; ++j) {
      for (int j2 = 0; j2 < n; ++j2) {
        cplx acc = 0.0;
        for (int i = 0; i < m1; ++i) {
          const double phase = (j - j2 + a) * nodes[i];
          acc += cplx(std::cos(phase), std::sin(phase));
        }
        mat[static_cast<size_t>(j) * n + j2] = acc / static_cast<double>(m1);
      }
    }
    return mat;
  };
  std::vector<cplx> prod = weighted_gram(args[0]);
  for (size_t t = 1; t < args.size(); ++t) {
    std::vector<cplx> rhs = weighted_gram(args[t]);
    std::vector<cplx> next(static_cast<size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i) {
      for (int kx = 0; kx < n; ++kx) {
        const cplx p = prod[static_cast<size_t>(i) * n + kx];
        for (int j = 0; j < n; ++j) {
          next[static_cast<size_t>(i) * n + j] += p * rhs[static_cast<size_t>(kx) * n + j];
        }
      }
    }
    prod.swap(next);
  }
  cplx tr = 0.0;
  for (int i = 0; i < n; ++i) tr += prod[static_cast<size_t>(i) * n + i];
  if (std::abs(tr.imag()) > 1e-6 * (1.0 + std::abs(tr.real()))) {
    throw std::logic_error("pi_quadrature: unexpected imaginary part");
  }
  return tr.real();
}

// --- closed forms -------------------------------------------------------

struct RealFamilyRules {
  int64_t n;
  int sign;  // sign of the eps contributions: -1 for SinHalf/Sin, +1 for Cos
  int64_t (*eps)(int64_t, int64_t);
  int64_t (*alpha)(int64_t, int64_t, int64_t, int64_t);
  // Family-specific boundary offsets, see the per-family tables below.
  KernelFamily family;
};

double closed_real(const RealFamilyRules& r, const std::vector<int>& in) {
  const int64_t n = r.n;
  const auto e = [&](int64_t a) { return r.eps(n, a); };
  const auto al = [&](int64_t a, int64_t b, int64_t c) { return r.alpha(n, a, b, c); };
  const double sg = static_cast<double>(r.sign);

  std::vector<int64_t> args(in.begin(), in.end());
  for (int64_t a : args) {
    if (a < 0) throw PiPatternError("pi_closed: negative argument for a real family");
  }
  const size_t m = args.size();

  const bool so_even = r.family == KernelFamily::Cos;
  const bool sp = r.family == KernelFamily::Sin;

  // Diagonal pair value Pi(k, k) doubles as Pi(0, k, k).
  auto pi_kk = [&](int64_t k) -> double {
    if (so_even) return pos(2 * n - k - 1) / 4.0 + (k <= n - 1 ? 0.5 : 0.0);
    if (sp) return pos(2 * n - k + 1) / 4.0 - (k <= n ? 0.5 : 0.0);
    return pos(2 * n - k) / 4.0;
  };

  if (m == 1) {
    const int64_t k = args[0];
    if (k == 0) return static_cast<double>(n);
    return sg * e(k) / 2.0;
  }

  if (m == 2) {
    int64_t k = args[0], l = args[1];
    if (k == 0 && l == 0) return static_cast<double>(n);
    if (k == 0 || l == 0) return sg * e(k + l) / 2.0;  // Pi(0, k)
    if (k == l) return pi_kk(k);
    return sg * e(k + l) / 2.0;
  }

  if (m == 3) {
    std::vector<int64_t> s = args;
    std::sort(s.begin(), s.end());
    if (s[0] == 0) {
      if (s[1] == s[2] && s[1] >= 1) return pi_kk(s[1]);  // Pi(0, k, k)
      throw PiPatternError("pi_closed: unsupported ternary pattern with zero");
    }
    // Pi(k, l, k+l): the largest equals the sum of the other two.
    if (s[2] == s[0] + s[1]) {
      const int64_t k = s[0], l = s[1];
      const double alpha_part =
          (al(k + l, l, k + l) + al(k + l, k, k + l)) / 8.0;
      if (so_even) {
        return pos(n - k - l - 1) / 4.0 + alpha_part +
               (k + l <= n - 1 ? 5.0 / 8.0 : 0.0) +
               (std::max(k, l) <= n - 1 ? 0.25 : 0.0);
      }
      if (sp) {
        return pos(n - k - l) / 4.0 + alpha_part -
               (k + l <= n ? 1.0 / 8.0 : 0.0);
      }
      return pos(n - k - l) / 4.0 + alpha_part;
    }
    // Pi(k, l, l): a repeated value.
    if (s[0] == s[1] || s[1] == s[2]) {
      const int64_t l = s[0] == s[1] ? s[0] : s[1];
      const int64_t k = s[0] == s[1] ? s[2] : s[0];
      if (k == 2 * l) {
        double v = pos(2 * n - k) / 8.0;
        if (so_even) v += (k <= n - 1 ? 3.0 / 8.0 : 0.0);
        if (sp) v -= (k <= n ? 3.0 / 8.0 : 0.0);
        return v;
      }
      return sg * (3.0 * e(2 * l + k) + e(k) * e(std::abs(2 * l - k))) / 8.0;
    }
    throw PiPatternError("pi_closed: unsupported ternary pattern");
  }

  if (m == 4) {
    for (int64_t a : args) {
      if (a == 0) throw PiPatternError("pi_closed: zero in quaternary pattern");
    }
    const int64_t k = args[0];
    if (args[1] == k && args[2] == k && args[3] == k) {
      // Pi(k, k, k, k)
      if (so_even) {
        return pos(2 * n - k - 1) / 16.0 + pos(n - k) / 4.0 +
               (k <= n - 1 ? 1.0 / 8.0 : 0.0) + (2 * k <= n - 1 ? 0.25 : 0.0);
      }
      if (sp) {
        return pos(2 * n - k + 1) / 16.0 + pos(n - k) / 4.0 -
               (k <= n ? 1.0 / 8.0 : 0.0) - (2 * k <= n ? 0.25 : 0.0);
      }
      return pos(n - k) / 4.0 + pos(2 * n - k) / 16.0;
    }
    // Classify two-pair arrangements up to rotation/reflection.
    auto is_adjacent = [&](int64_t& ka, int64_t& la) {
      for (int rot = 0; rot < 4; ++rot) {
        const int64_t a0 = args[rot & 3], a1 = args[(rot + 1) & 3],
                      a2 = args[(rot + 2) & 3], a3 = args[(rot + 3) & 3];
        if (a0 == a1 && a2 == a3 && a0 != a2) {
          ka = a0;
          la = a2;
          return true;
        }
      }
      return false;
    };
    int64_t ka = 0, la = 0;
    if (args[0] == args[2] && args[1] == args[3] && args[0] != args[1]) {
      // Pi(k, l, k, l)
      const int64_t kk = args[0], ll = args[1];
      const int64_t lo = std::min(kk, ll);
      double v = al(kk + ll, lo, kk + ll) / 4.0 +
                 (al(kk, kk, kk + ll) + al(ll, ll, kk + ll)) / 8.0;
      if (so_even) {
        v += pos(n - kk - ll - 1) / 4.0 + (kk + ll <= n - 1 ? 0.5 : 0.0) +
             (std::max(kk, ll) <= n - 1 ? 0.5 : 0.0);
      } else {
        v += pos(n - kk - ll) / 4.0;
      }
      return v;
    }
    if (is_adjacent(ka, la)) {
      // Pi(k, k, l, l)
      const int64_t hi = std::max(ka, la), lo = std::min(ka, la);
      double v = al(lo, hi, hi) / 16.0 +
                 (al(ka + la, la, ka + la) + al(ka + la, ka, ka + la) +
                  al(la, la - ka, la) + al(ka, ka - la, ka)) /
                     16.0;
      if (so_even) {
        v += (pos(n - hi - 1) + pos(n - ka - la - 1)) / 8.0 +
             (ka + la <= n - 1 ? 3.0 / 8.0 : 0.0) + (hi <= n - 1 ? 0.25 : 0.0);
        if (hi - lo <= n - 1) {
          v += (ka <= n - 1 ? 1.0 / 8.0 : 0.0) + (la <= n - 1 ? 1.0 / 8.0 : 0.0);
        }
      } else if (sp) {
        v += (pos(n - hi) + pos(n - ka - la)) / 8.0 -
             (ka + la <= n ? 1.0 / 8.0 : 0.0);
      } else {
        v += (pos(n - hi) + pos(n - ka - la)) / 8.0;
      }
      return v;
    }
    throw PiPatternError("pi_closed: unsupported quaternary pattern");
  }
  throw PiPatternError("pi_closed: arity must be 1..4");
}

// U family: the weighted basis overlaps are shifted diagonals, so the trace
// counts lattice points with all prefix sums in range.
double closed_unitary(int64_t n, const std::vector<int>& args) {
  int64_t run = 0, lo = 0, hi = 0;
  for (int a : args) {
    run += a;
    lo = std::min(lo, run);
    hi = std::max(hi, run);
  }
  if (run != 0) return 0.0;
  return static_cast<double>(pos(n - (hi - lo)));
}

}  // namespace

double pi_quadrature_grid(const EnsembleSpec& spec, const std::vector<int>& args) {
  const int m = grid_nodes(spec, args);
  if (spec.kernel == KernelFamily::Exp) return grid_trace_unitary(spec, args, m);
  return grid_trace_real(spec, args, m);
}

double pi_quadrature_separated(const EnsembleSpec& spec,
                               const std::vector<int>& args) {
  if (spec.kernel == KernelFamily::Exp) return separated_unitary(spec, args);
  return separated_real(spec, args);
}

double pi_quadrature(const EnsembleSpec& spec, const std::vector<int>& args) {
  if (args.empty() || args.size() > 4) {
    throw std::domain_error("pi_quadrature: arity must be 1..4");
  }
  const double m = static_cast<double>(grid_nodes(spec, args));
  if (std::pow(m, static_cast<double>(args.size())) > kNodeBudget) {
    return pi_quadrature_separated(spec, args);
  }
  return pi_quadrature_grid(spec, args);
}

double pi_closed(const EnsembleSpec& spec, const std::vector<int>& args) {
  if (args.empty() || args.size() > 4) {
    throw PiPatternError("pi_closed: arity must be 1..4");
  }
  switch (spec.kernel) {
    case KernelFamily::Exp:
      return closed_unitary(spec.n, args);
    case KernelFamily::SinHalf:
      return closed_real({spec.n, -1, eps_odd, alpha_odd, KernelFamily::SinHalf},
                         args);
    case KernelFamily::Cos:
      return closed_real(
          {spec.n, +1, eps_even_so, alpha_even_so, KernelFamily::Cos}, args);
    case KernelFamily::Sin:
      return closed_real(
          {spec.n, -1, eps_even_sp, alpha_even_sp, KernelFamily::Sin}, args);
  }
  throw std::logic_error("pi_closed: bad kernel");
}

PiCheckReport pi_check(const EnsembleSpec& spec, int k_max) {
  PiCheckReport report;
  report.spec = spec;
  std::vector<std::vector<int>> cases;
  if (spec.kernel == KernelFamily::Exp) {
    cases.push_back({0});
    for (int k = 1; k <= k_max; ++k) {
      cases.push_back({k, -k});
      cases.push_back({2 * k, -k, -k});
      for (int l = 1; l <= k_max; ++l) {
        cases.push_back({k + l, -k, -l});
        cases.push_back({k, -k, l, -l});
        cases.push_back({k, l, -k, -l});
        if (l != k) cases.push_back({k, -l, -k, l});
      }
    }
  } else {
    cases.push_back({0});
    cases.push_back({0, 0});
    for (int k = 1; k <= k_max; ++k) {
      cases.push_back({k});
      cases.push_back({0, k});
      cases.push_back({k, k});
      cases.push_back({0, k, k});
      cases.push_back({k, k, k, k});
      for (int l = 1; l <= k_max; ++l) {
        cases.push_back({k, l, l});
        cases.push_back({k, l, k + l});
        if (l != k) {
          cases.push_back({k, l});
          cases.push_back({k, k, l, l});
          cases.push_back({k, l, k, l});
        }
      }
    }
  }
  for (auto& args : cases) {
    PiCheckRow row;
    row.args = args;
    row.closed = pi_closed(spec, args);
    row.quadrature = pi_quadrature(spec, args);
    row.abs_error = std::abs(row.closed - row.quadrature);
    report.max_abs_error = std::max(report.max_abs_error, row.abs_error);
    report.rows.push_back(std::move(row));
  }
  return report;
}

}  // namespace ccg
