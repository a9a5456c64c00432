#include "ccg/exact_moments.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "ccg/special_functions.hpp"
#include "combinatorial_detail.hpp"

namespace ccg {

namespace {

using detail::alpha_even_so;
using detail::alpha_even_sp;
using detail::alpha_odd;
using detail::eps_even_so;
using detail::eps_even_sp;
using detail::eps_odd;
using detail::pos;

int64_t sq(int64_t x) { return x * x; }

// The eight-term alpha block shared verbatim by cases (ii)-(iv).
template <typename Alpha>
int64_t alpha_block(int64_t k, int64_t l, Alpha alpha) {
  const int64_t lo = std::min(k, l), hi = std::max(k, l);
  return 4 * alpha(lo, hi, hi) + 4 * alpha(l, l - k, l) + 4 * alpha(k, k - l, k) +
         4 * alpha(k + l, l, k + l) + 4 * alpha(k + l, k, k + l) -
         8 * alpha(k + l, lo, k + l) - 4 * alpha(k, k, k + l) -
         4 * alpha(l, l, k + l);
}

void require_args(int64_t k, int64_t l) {
  if (k < 1 || l < 1) throw std::domain_error("table argument must be >= 1");
  if (k == l) throw std::domain_error("V/delta require k != l");
}

}  // namespace

int64_t eta(const EnsembleSpec& spec, int64_t k) {
  if (k < 1) throw std::domain_error("eta: k must be >= 1");
  const int64_t n = spec.n;
  switch (spec.alias) {
    case GroupId::U:
      return 0;
    case GroupId::SoOdd:
      return eps_odd(n, k);
    case GroupId::SoEven:
      return eps_even_so(n, k) + (k <= 2 * n - 1 ? 1 : 0) - (k <= n - 1 ? 1 : 0);
    case GroupId::USp:
      return eps_even_sp(n, k) + (k <= n ? 1 : 0) - (k <= 2 * n ? 1 : 0);
    default:
      throw std::logic_error("eta: bad alias");
  }
}

int64_t bigT(const EnsembleSpec& spec, int64_t k) {
  if (k < 1) throw std::domain_error("bigT: k must be >= 1");
  const int64_t n = spec.n;
  switch (spec.alias) {
    case GroupId::U:
      return std::min(k * k, n * n) + std::min(2 * k, n) - 2 * std::min(k, n);
    case GroupId::SoOdd: {
      const auto e = [n](int64_t a) { return eps_odd(n, a); };
      return 2 * std::min(k * k, sq(2 * n)) + 4 * e(k) * std::min(k, 2 * n) +
             6 * (std::min(k, n) - std::min(k, 2 * n)) + 4 * (e(3 * k) - e(k));
    }
    case GroupId::SoEven: {
      const auto e = [n](int64_t a) { return eps_even_so(n, a); };
      const int64_t small = k <= n - 1 ? 1 : 0;
      return 2 * std::min(sq(k + 1), sq(2 * n)) +
             (6 + small * 2) * pos(2 * n - k - 1) - 6 * n * (1 + small) -
             4 * pos(n - k) + small * 6 +
             4 * e(k) * (std::min(k + 1, 2 * n) - small) + 4 * (e(3 * k) - e(k));
    }
    case GroupId::USp: {
      const auto e = [n](int64_t a) { return eps_even_sp(n, a); };
      const int64_t small = k <= n ? 1 : 0;
      return 2 * std::min(sq(k - 1), sq(2 * n)) +
             (6 - small * 2) * pos(2 * n - k + 1) - 8 * pos(n - k) - small * 8 +
             (2 * k <= n ? 2 : 0) + 4 * e(k) * (std::min(k - 1, 2 * n) + small) -
             (k > n ? 6 * n : 0) + 4 * (e(3 * k) - e(k));
    }
    default:
      throw std::logic_error("bigT: bad alias");
  }
}

int64_t bigV(const EnsembleSpec& spec, int64_t k, int64_t l) {
  require_args(k, l);
  const int64_t n = spec.n;
  const int64_t lo = std::min(k, l), hi = std::max(k, l);
  const int64_t diff = hi - lo;
  switch (spec.alias) {
    case GroupId::U:
      return 2 * pos(n - hi) - pos(n - k - l) - pos(n - diff);
    case GroupId::SoOdd: {
      const auto alpha = [n](int64_t a, int64_t b, int64_t c) {
        return alpha_odd(n, a, b, c);
      };
      return 8 * pos(n - hi) - 2 * pos(2 * n - diff) - 2 * pos(2 * n - k - l) +
             alpha_block(k, l, alpha);
    }
    case GroupId::SoEven: {
      const auto alpha = [n](int64_t a, int64_t b, int64_t c) {
        return alpha_even_so(n, a, b, c);
      };
      int64_t v = 8 * pos(n - hi - 1) - 2 * pos(2 * n - diff - 1) -
                  2 * pos(2 * n - k - l - 1) + alpha_block(k, l, alpha);
      v -= (k + l <= n - 1) ? 1 : 0;
      v += (hi <= n - 1) ? 16 : 0;
      if (diff <= n - 1) {
        v += -3 + ((lo <= n - 1) ? 16 : 0) - ((k <= n - 1) ? 6 : 0) -
             ((l <= n - 1) ? 6 : 0);
      }
      v -= (std::abs(2 * k - l) + l <= 2 * n - 2) ? 4 : 0;
      v -= (std::abs(2 * l - k) + k <= 2 * n - 2) ? 4 : 0;
      return v;
    }
    case GroupId::USp: {
      const auto alpha = [n](int64_t a, int64_t b, int64_t c) {
        return alpha_even_sp(n, a, b, c);
      };
      int64_t v = 8 * pos(n - hi) - 2 * pos(2 * n - diff + 1) -
                  2 * pos(2 * n - k - l + 1) + alpha_block(k, l, alpha);
      v += (k + l <= n) ? 1 : 0;
      v += (diff <= n) ? 3 : 0;
      v += (std::abs(2 * k - l) + l <= 2 * n) ? 4 : 0;
      v += (std::abs(2 * l - k) + k <= 2 * n) ? 4 : 0;
      if (diff <= n) {
        v -= 2 * (((k <= n) ? 1 : 0) + ((l <= n) ? 1 : 0));
      }
      return v;
    }
    default:
      throw std::logic_error("bigV: bad alias");
  }
}

int64_t deltaVD(const EnsembleSpec& spec, int64_t k, int64_t l) {
  require_args(k, l);
  const int64_t n = spec.n;
  const int64_t lo = std::min(k, l), hi = std::max(k, l);
  switch (spec.alias) {
    case GroupId::U:
      return 0;
    case GroupId::SoOdd: {
      const auto e = [n](int64_t a) { return eps_odd(n, a); };
      return 2 * (e(l) * e(std::abs(2 * k - l)) - e(2 * k + l)) +
             2 * (e(k) * e(std::abs(2 * l - k)) - e(2 * l + k)) +
             2 * (e(hi - lo) - e(k + l)) + 4 * e(l) * e(std::abs(2 * k - l)) +
             4 * e(2 * k + l) + 4 * e(k) * e(std::abs(2 * l - k)) +
             4 * e(2 * l + k) - 8 * e(2 * hi - lo) - 8 * e(hi);
    }
    case GroupId::SoEven: {
      const auto e = [n](int64_t a) { return eps_even_so(n, a); };
      int64_t d = 4 * e(k) * e(l) * (1 - e(k + l)) + 2 * (e(hi - lo) - e(k + l));
      if (l != 2 * k) {
        d += 6 * e(l) * e(std::abs(2 * k - l)) + 2 * e(2 * k + l) -
             8 * e(std::abs(k - l) + k);
      }
      if (k != 2 * l) {
        d += 6 * e(k) * e(std::abs(2 * l - k)) + 2 * e(2 * l + k) -
             8 * e(std::abs(l - k) + l);
      }
      return d;
    }
    case GroupId::USp: {
      const auto e = [n](int64_t a) { return eps_even_sp(n, a); };
      int64_t d = 4 * e(k) * e(l) * (e(k + l) - 1) + 2 * (e(hi - lo) - e(k + l));
      if (l != 2 * k) {
        d += 6 * e(l) * e(std::abs(2 * k - l)) + 2 * e(2 * k + l) -
             8 * e(std::abs(k - l) + k);
      }
      if (k != 2 * l) {
        d += 6 * e(k) * e(std::abs(2 * l - k)) + 2 * e(2 * l + k) -
             8 * e(std::abs(l - k) + l);
      }
      return d;
    }
    default:
      throw std::logic_error("deltaVD: bad alias");
  }
}

ValueWithError exact_mean(const EnsembleSpec& spec, double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("exact_mean: tol <= 0");
  const int64_t n0 = spec.n0;
  // Beyond 2N0 + 2 every eta vanishes and min{k, N0} = N0.
  const int64_t cutoff = 2 * n0 + 2;
  double finite = 0.0;
  for (int64_t k = cutoff; k >= 1; --k) {
    const double num = static_cast<double>(std::min(k, n0) + eta(spec, k));
    finite += num / (static_cast<double>(k) * static_cast<double>(k));
  }
  const double tail = static_cast<double>(n0) * tail_inv_square(cutoff);
  const double scale = 2.0 / (static_cast<double>(n0) * static_cast<double>(n0));
  const double value = scale * (finite + tail);
  const double err = 64.0 * 1e-16 * (std::abs(value) + scale);
  if (err > tol) {
    std::ostringstream msg;
    msg << "exact_mean: requested tol " << tol << " below achievable " << err;
    throw std::runtime_error(msg.str());
  }
  return {value, err};
}

ValueWithError exact_variance(const EnsembleSpec& spec, double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("exact_variance: tol <= 0");
  const int64_t n0 = spec.n0;
  const int64_t n = spec.n;

  // Single sum: T(k) is constant past every breakpoint (~2N0).
  const int64_t t_cut = 2 * n0 + 8;
  const int64_t t_tail_const = bigT(spec, t_cut + 1);
  if (bigT(spec, t_cut + 17) != t_tail_const ||
      bigT(spec, 4 * t_cut + 3) != t_tail_const) {
    throw std::logic_error("exact_variance: T tail not constant");
  }
  double t_sum = 0.0;
  for (int64_t k = t_cut; k >= 1; --k) {
    const double kk = static_cast<double>(k);
    t_sum += static_cast<double>(bigT(spec, k)) / (kk * kk * kk * kk);
  }
  t_sum += static_cast<double>(t_tail_const) * tail_inv_fourth(t_cut);

  // Double sum over diagonals d = l - k; V + delta vanishes for d > 2N0 + 2
  // and is constant in k along each diagonal once k clears the breakpoints.
  const int64_t d_max = 2 * n0 + 2;
  double vd_sum = 0.0;
  for (int64_t d = 1; d <= d_max; ++d) {
    const int64_t k_cut = 2 * n0 + d + 8;
    const auto vd = [&](int64_t k) {
      return bigV(spec, k, k + d) + deltaVD(spec, k, k + d);
    };
    const int64_t tail_const = vd(k_cut + 1);
    if (vd(k_cut + 23) != tail_const) {
      throw std::logic_error("exact_variance: V+delta tail not constant");
    }
    double diag = 0.0;
    for (int64_t k = k_cut; k >= 1; --k) {
      const double kk = static_cast<double>(k);
      const double ll = static_cast<double>(k + d);
      diag += static_cast<double>(vd(k)) / (kk * kk * ll * ll);
    }
    if (tail_const != 0) {
      diag += static_cast<double>(tail_const) * tail_inv_square_shifted(k_cut, d);
    }
    vd_sum += 2.0 * diag;  // symmetric in (k, l)
  }

  const double n0d = static_cast<double>(n0);
  const double scale = 4.0 / (n0d * n0d * n0d * n0d);
  const double value = scale * (t_sum + vd_sum);
  const double err =
      1e-15 * (scale * (std::abs(t_sum) + std::abs(vd_sum)) +
               static_cast<double>(d_max + n) * 1e-2 * scale + std::abs(value));
  if (err > tol) {
    std::ostringstream msg;
    msg << "exact_variance: requested tol " << tol << " below achievable "
        << err;
    throw std::runtime_error(msg.str());
  }
  return {value, err};
}

AsymptoticMoments asymptotic_moments(const EnsembleSpec& spec) {
  const double n0 = static_cast<double>(spec.n0);
  return {(2.0 * std::log(n0) + spec.c_g) / (n0 * n0),
          spec.sigma_g / (n0 * n0 * n0 * n0)};
}

MomentReport moment_report(const EnsembleSpec& spec, double tol) {
  MomentReport r;
  r.spec = spec;
  const auto mean = exact_mean(spec, tol);
  const auto var = exact_variance(spec, tol);
  const auto asym = asymptotic_moments(spec);
  r.mean_exact = mean.value;
  r.mean_err = mean.err_bound;
  r.var_exact = var.value;
  r.var_err = var.err_bound;
  r.mean_asymptotic = asym.mean;
  r.var_asymptotic = asym.variance;
  return r;
}

std::string moment_report_to_json(const MomentReport& r) {
  std::ostringstream out;
  out.precision(17);
  out << "{\"group\":\"" << group_token(r.spec.group) << "\",\"n\":" << r.spec.n
      << ",\"n0\":" << r.spec.n0 << ",\"mean_exact\":" << r.mean_exact
      << ",\"mean_err\":" << r.mean_err << ",\"var_exact\":" << r.var_exact
      << ",\"var_err\":" << r.var_err
      << ",\"mean_asymptotic\":" << r.mean_asymptotic
      << ",\"var_asymptotic\":" << r.var_asymptotic << "}";
  return out.str();
}

}  // namespace ccg
