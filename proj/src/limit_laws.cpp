#include "ccg/limit_laws.hpp"

#include <cmath>
#include <stdexcept>

#include "ccg/parallel.hpp"
#include "ccg/special_functions.hpp"

namespace ccg {

namespace {

using cplx = std::complex<double>;
const cplx kI(0.0, 1.0);

void check_envelope(double t) {
  if (!(std::abs(t) <= 50.0)) {
    throw std::domain_error("xi_cf: |t| above the stability envelope 50");
  }
}

// Ten-point Gauss-Legendre panel rule on [-1, 1].
constexpr double kGlNode[5] = {0.1488743389816312, 0.4333953941292472,
                               0.6794095682990244, 0.8650633666889845,
                               0.9739065285171717};
constexpr double kGlWeight[5] = {0.2955242247147529, 0.2692667193099963,
                                 0.2190863625159820, 0.1494513491505806,
                                 0.0666713443086881};

template <typename F>
double panel_integrate(F f, double a, double b, int panels) {
  double total = 0.0;
  const double h = (b - a) / panels;
  for (int p = 0; p < panels; ++p) {
    const double mid = a + (p + 0.5) * h;
    double acc = 0.0;
    for (int i = 0; i < 5; ++i) {
      const double dx = 0.5 * h * kGlNode[i];
      acc += kGlWeight[i] * (f(mid + dx) + f(mid - dx));
    }
    total += acc * 0.5 * h;
  }
  return total;
}

}  // namespace

XiFamily xi_family(GroupId g) {
  switch (g) {
    case GroupId::U:
    case GroupId::SU:
      return XiFamily::U;
    case GroupId::SoOdd:
    case GroupId::OOdd:
      return XiFamily::Odd;
    default:
      return XiFamily::Even;
  }
}

namespace {

// Per-thread coefficient tables: inv[k] = 1/k and coef[k] = 2/sqrt(k) on the
// matching parity (zero elsewhere). Rebuilding is amortized across the many
// draws a batch makes at one (family, k_max).
struct XiTables {
  int64_t k_max = -1;
  int parity = -1;
  std::vector<double> inv;
  std::vector<double> coef;
};

const XiTables& xi_tables(int64_t k_max, int parity) {
  thread_local XiTables t;
  if (t.k_max != k_max || t.parity != parity) {
    t.k_max = k_max;
    t.parity = parity;
    t.inv.resize(static_cast<size_t>(k_max));
    t.coef.resize(static_cast<size_t>(k_max));
    for (int64_t k = 1; k <= k_max; ++k) {
      const double kk = static_cast<double>(k);
      t.inv[static_cast<size_t>(k - 1)] = 1.0 / kk;
      t.coef[static_cast<size_t>(k - 1)] =
          (parity >= 0 && (k & 1) == parity) ? 2.0 / std::sqrt(kk) : 0.0;
    }
  }
  return t;
}

}  // namespace

double sample_xi(GroupId g, int64_t k_max, Rng& rng) {
  if (k_max < 1) throw std::invalid_argument("sample_xi: k_max < 1");
  constexpr int64_t kBlock = 4096;
  thread_local std::vector<double> draws(kBlock);
  const XiFamily fam = xi_family(g);
  double acc0 = 0.0, acc1 = 0.0;
  if (fam == XiFamily::U) {
    // (X^2 + Y^2 - 2)/k with the chi-square(2) drawn as 2 Exp(1).
    const XiTables& t = xi_tables(k_max, -1);
    const double* inv = t.inv.data();
    for (int64_t base = 0; base < k_max; base += kBlock) {
      const int64_t len = std::min(kBlock, k_max - base);
      rng.fill_exponential(draws.data(), len);
      const double* e = draws.data();
      const double* iv = inv + base;
      for (int64_t j = 0; j < len; ++j) acc0 += (e[j] - 1.0) * iv[j];
    }
    return 2.0 * (acc0 + acc1);
  }
  const int parity = fam == XiFamily::Odd ? 1 : 0;
  const XiTables& t = xi_tables(k_max, parity);
  for (int64_t base = 0; base < k_max; base += kBlock) {
    const int64_t len = std::min(kBlock, k_max - base);
    rng.fill_normal(draws.data(), len);
    const double* x = draws.data();
    const double* iv = t.inv.data() + base;
    const double* cf = t.coef.data() + base;
    int64_t j = 0;
    for (; j + 1 < len; j += 2) {
      acc0 += (x[j] * x[j] - cf[j] * x[j] - 1.0) * iv[j];
      acc1 += (x[j + 1] * x[j + 1] - cf[j + 1] * x[j + 1] - 1.0) * iv[j + 1];
    }
    for (; j < len; ++j) acc0 += (x[j] * x[j] - cf[j] * x[j] - 1.0) * iv[j];
  }
  return 2.0 * (acc0 + acc1);
}

double xi_series_all_zero(GroupId /*g*/, int64_t k_max) {
  double acc = 0.0;
  for (int64_t k = 1; k <= k_max; ++k) acc += -1.0 / static_cast<double>(k);
  return 2.0 * acc;
}

double xi_truncation_sd(GroupId g, int64_t k_max) {
  const double t2 = tail_inv_square(k_max);
  if (xi_family(g) == XiFamily::U) return std::sqrt(4.0 * t2);
  // Var term = 8/k^2 + 16/k^3 on the matching parity; bound the cube sum.
  return std::sqrt(8.0 * t2 + 16.0 * t2 / static_cast<double>(k_max + 1));
}

std::complex<double> xi_cf(GroupId g, double t) {
  check_envelope(t);
  if (t == 0.0) return 1.0;
  const double pi2 = kPi * kPi;
  switch (xi_family(g)) {
    case XiFamily::U:
      return std::exp(log_gamma(cplx(1.0, -2.0 * t)) -
                      2.0 * kEulerGamma * kI * t);
    case XiFamily::Odd: {
      const cplx lg = log_gamma(cplx(1.0, -4.0 * t));
      const cplx psi4 = digamma(cplx(1.0, -4.0 * t));
      const cplx psi2 = digamma(cplx(1.0, -2.0 * t));
      return std::exp(0.5 * lg - (2.0 * kEulerGamma + pi2 / 4.0) * kI * t -
                      (2.0 * psi4 - psi2 + kEulerGamma) / 4.0);
    }
    case XiFamily::Even: {
      const cplx lg = log_gamma(cplx(1.0, -4.0 * t));
      const cplx psi2 = digamma(cplx(1.0, -2.0 * t));
      return std::exp(0.5 * lg - (2.0 * kEulerGamma + pi2 / 12.0) * kI * t -
                      (psi2 + kEulerGamma) / 4.0);
    }
  }
  throw std::logic_error("xi_cf: bad family");
}

std::complex<double> xi_cf_product(GroupId g, double t, int64_t k_max) {
  check_envelope(t);
  if (k_max < 1) throw std::invalid_argument("xi_cf_product: k_max < 1");
  const XiFamily fam = xi_family(g);
  cplx log_acc = 0.0;
  if (fam == XiFamily::U) {
    for (int64_t k = 1; k <= k_max; ++k) {
      const double ik = 1.0 / static_cast<double>(k);
      log_acc += -std::log(cplx(1.0, -2.0 * t * ik)) - 2.0 * kI * t * ik;
    }
    return std::exp(log_acc);
  }
  const int64_t parity = fam == XiFamily::Odd ? 1 : 0;
  for (int64_t k = 1; k <= k_max; ++k) {
    const double kk = static_cast<double>(k);
    const double ik = 1.0 / kk;
    log_acc += -0.5 * std::log(cplx(1.0, -4.0 * t * ik)) - 2.0 * kI * t * ik;
    if ((k & 1) == parity) {
      // Noncentral factor exp(2it/(k^2 - 4itk) - 2it/k^2).
      log_acc += 2.0 * kI * t / (cplx(kk * kk, -4.0 * t * kk)) -
                 2.0 * kI * t / (kk * kk);
    }
  }
  return std::exp(log_acc);
}

double xi_u_density(double x) {
  const double u = std::exp(-(x + 2.0 * kEulerGamma) / 2.0);
  return 0.5 * u * std::exp(-u);
}

double xi_u_cdf(double x) {
  return std::exp(-std::exp(-(x + 2.0 * kEulerGamma) / 2.0));
}

XiMoments xi_moments(GroupId g) {
  const double pi2 = kPi * kPi;
  switch (xi_family(g)) {
    case XiFamily::U: return {0.0, 2.0 * pi2 / 3.0};
    case XiFamily::Odd: return {0.0, 4.0 * pi2 / 3.0 + 14.0 * kZeta3};
    case XiFamily::Even: return {0.0, 4.0 * pi2 / 3.0 + 2.0 * kZeta3};
  }
  throw std::logic_error("xi_moments: bad family");
}

double xi_density_from_cf(GroupId g, double x) {
  // f(x) = (1/pi) int_0^inf Re(cf(t) e^{-itx}) dt; the cf decays like
  // exp(-pi t), so [0, 16] carries everything above double noise.
  auto integrand = [&](double t) {
    return (xi_cf(g, t) * std::exp(-kI * t * x)).real();
  };
  return panel_integrate(integrand, 0.0, 16.0, 160) / kPi;
}

double xi_cdf_from_cf(GroupId g, double x) {
  auto integrand = [&](double t) {
    return (xi_cf(g, t) * std::exp(-kI * t * x)).imag() / t;
  };
  return 0.5 - panel_integrate(integrand, 0.0, 16.0, 160) / kPi;
}

std::vector<double> sample_xi_batch(GroupId g, int64_t k_max, int64_t replicates,
                                    uint64_t seed, int jobs) {
  std::vector<double> out(replicates);
  parallel_for(replicates, jobs, [&](int64_t i) {
    Rng rng(seed, static_cast<uint64_t>(i));
    out[static_cast<size_t>(i)] = sample_xi(g, k_max, rng);
  });
  return out;
}

}  // namespace ccg
