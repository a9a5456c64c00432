#include "ccg/dpp_sampler.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace ccg {

namespace {

constexpr double kSqrt2 = 1.4142135623730950488;

[[noreturn]] void sampling_failure(const EnsembleSpec& spec, int point,
                                   int64_t cap) {
  std::ostringstream msg;
  msg << "dpp sampler: rejection cap " << cap << " exceeded at point "
      << point << " of " << spec.n << " (group " << group_token(spec.group)
      << ")";
  throw std::runtime_error(msg.str());
}

// Real-kernel engine: features phi(x) in R^N filled by trig recurrences.
class RealEngine {
 public:
  RealEngine(const EnsembleSpec& spec) : spec_(spec), n_(spec.n) {
    phi_.resize(n_);
    overlaps_.resize(n_);
    used_.resize(static_cast<size_t>(n_) * n_);
    sup_ = kernel_sup_diag(spec);
  }

  void run(Rng& rng, const SamplerOptions& opts, std::vector<double>& out) {
    out.resize(n_);
    const double a = spec_.a, len = spec_.b - spec_.a;
    for (int i = 0; i < n_; ++i) {
      int64_t attempts = 0;
      for (;;) {
        if (++attempts > opts.max_rejects_per_point) {
          sampling_failure(spec_, i, opts.max_rejects_per_point);
        }
        const double x = a + len * rng.uniform01();
        const double kxx = fill_features(x);
        const double tau = kxx - rng.uniform01() * sup_;
        if (tau <= 0.0) continue;
        if (project_and_test(i, tau)) {
          out[i] = x;
          orthonormalize(i);
          break;
        }
      }
    }
  }

 private:
  double fill_features(double x) {
    double* phi = phi_.data();
    double norm2 = 0.0;
    switch (spec_.kernel) {
      case KernelFamily::SinHalf: {
        const double c2 = 2.0 * std::cos(x);
        double prev = -std::sin(0.5 * x);
        double cur = -prev;
        for (int j = 0; j < n_; ++j) {
          const double v = kSqrt2 * cur;
          phi[j] = v;
          norm2 += v * v;
          const double next = c2 * cur - prev;
          prev = cur;
          cur = next;
        }
        break;
      }
      case KernelFamily::Cos: {
        const double c2 = 2.0 * std::cos(x);
        phi[0] = 1.0;
        norm2 = 1.0;
        double prev = 1.0;
        double cur = std::cos(x);
        for (int j = 1; j < n_; ++j) {
          const double v = kSqrt2 * cur;
          phi[j] = v;
          norm2 += v * v;
          const double next = c2 * cur - prev;
          prev = cur;
          cur = next;
        }
        break;
      }
      case KernelFamily::Sin: {
        const double c2 = 2.0 * std::cos(x);
        double prev = 0.0;
        double cur = std::sin(x);
        for (int j = 0; j < n_; ++j) {
          const double v = kSqrt2 * cur;
          phi[j] = v;
          norm2 += v * v;
          const double next = c2 * cur - prev;
          prev = cur;
          cur = next;
        }
        break;
      }
      case KernelFamily::Exp:
        throw std::logic_error("RealEngine used with Exp kernel");
    }
    return norm2;
  }

  // Accumulates |<phi, e_m>|^2 with early exit once the rejection is decided.
  bool project_and_test(int count, double tau) {
    const double* phi = phi_.data();
    double s = 0.0;
    for (int m = 0; m < count; ++m) {
      const double* e = used_.data() + static_cast<size_t>(m) * n_;
      double c = 0.0;
      for (int t = 0; t < n_; ++t) c += e[t] * phi[t];
      overlaps_[m] = c;
      s += c * c;
      if (s >= tau) return false;
    }
    return true;
  }

  void orthonormalize(int count) {
    double* v = phi_.data();
    for (int m = 0; m < count; ++m) {
      const double* e = used_.data() + static_cast<size_t>(m) * n_;
      const double c = overlaps_[m];
      for (int t = 0; t < n_; ++t) v[t] -= c * e[t];
    }
    // Second Gram-Schmidt pass for orthogonality at machine precision.
    for (int m = 0; m < count; ++m) {
      const double* e = used_.data() + static_cast<size_t>(m) * n_;
      double c = 0.0;
      for (int t = 0; t < n_; ++t) c += e[t] * v[t];
      for (int t = 0; t < n_; ++t) v[t] -= c * e[t];
    }
    double norm2 = 0.0;
    for (int t = 0; t < n_; ++t) norm2 += v[t] * v[t];
    if (!(norm2 > 0.0)) {
      throw std::runtime_error("dpp sampler: degenerate feature vector");
    }
    const double inv = 1.0 / std::sqrt(norm2);
    double* e = used_.data() + static_cast<size_t>(count) * n_;
    for (int t = 0; t < n_; ++t) e[t] = v[t] * inv;
  }

  const EnsembleSpec& spec_;
  int n_;
  double sup_ = 0.0;
  std::vector<double> phi_;
  std::vector<double> overlaps_;
  std::vector<double> used_;
};

// Complex engine for the U family, split re/im storage.
class ComplexEngine {
 public:
  ComplexEngine(const EnsembleSpec& spec) : spec_(spec), n_(spec.n) {
    phi_re_.resize(n_);
    phi_im_.resize(n_);
    ov_re_.resize(n_);
    ov_im_.resize(n_);
    used_re_.resize(static_cast<size_t>(n_) * n_);
    used_im_.resize(static_cast<size_t>(n_) * n_);
    sup_ = kernel_sup_diag(spec);
  }

  void run(Rng& rng, const SamplerOptions& opts, std::vector<double>& out) {
    out.resize(n_);
    const double a = spec_.a, len = spec_.b - spec_.a;
    for (int i = 0; i < n_; ++i) {
      int64_t attempts = 0;
      for (;;) {
        if (++attempts > opts.max_rejects_per_point) {
          sampling_failure(spec_, i, opts.max_rejects_per_point);
        }
        const double x = a + len * rng.uniform01();
        const double tau = static_cast<double>(n_) - rng.uniform01() * sup_;
        if (tau <= 0.0) continue;
        fill_features(x);
        if (project_and_test(i, tau)) {
          out[i] = x;
          orthonormalize(i);
          break;
        }
      }
    }
  }

 private:
  void fill_features(double x) {
    const double cr = std::cos(x), ci = std::sin(x);
    double wr = 1.0, wi = 0.0;
    for (int j = 0; j < n_; ++j) {
      phi_re_[j] = wr;
      phi_im_[j] = wi;
      const double nr = wr * cr - wi * ci;
      const double ni = wr * ci + wi * cr;
      wr = nr;
      wi = ni;
    }
  }

  bool project_and_test(int count, double tau) {
    const double* pr = phi_re_.data();
    const double* pi = phi_im_.data();
    double s = 0.0;
    for (int m = 0; m < count; ++m) {
      const double* er = used_re_.data() + static_cast<size_t>(m) * n_;
      const double* ei = used_im_.data() + static_cast<size_t>(m) * n_;
      double cre = 0.0, cim = 0.0;  // <e_m, phi> = sum conj(e) * phi
      for (int t = 0; t < n_; ++t) {
        cre += er[t] * pr[t] + ei[t] * pi[t];
        cim += er[t] * pi[t] - ei[t] * pr[t];
      }
      ov_re_[m] = cre;
      ov_im_[m] = cim;
      s += cre * cre + cim * cim;
      if (s >= tau) return false;
    }
    return true;
  }

  void orthonormalize(int count) {
    double* vr = phi_re_.data();
    double* vi = phi_im_.data();
    for (int m = 0; m < count; ++m) {
      const double* er = used_re_.data() + static_cast<size_t>(m) * n_;
      const double* ei = used_im_.data() + static_cast<size_t>(m) * n_;
      const double cre = ov_re_[m], cim = ov_im_[m];
      for (int t = 0; t < n_; ++t) {
        vr[t] -= cre * er[t] - cim * ei[t];
        vi[t] -= cre * ei[t] + cim * er[t];
      }
    }
    for (int m = 0; m < count; ++m) {
      const double* er = used_re_.data() + static_cast<size_t>(m) * n_;
      const double* ei = used_im_.data() + static_cast<size_t>(m) * n_;
      double cre = 0.0, cim = 0.0;
      for (int t = 0; t < n_; ++t) {
        cre += er[t] * vr[t] + ei[t] * vi[t];
        cim += er[t] * vi[t] - ei[t] * vr[t];
      }
      for (int t = 0; t < n_; ++t) {
        vr[t] -= cre * er[t] - cim * ei[t];
        vi[t] -= cre * ei[t] + cim * er[t];
      }
    }
    double norm2 = 0.0;
    for (int t = 0; t < n_; ++t) norm2 += vr[t] * vr[t] + vi[t] * vi[t];
    if (!(norm2 > 0.0)) {
      throw std::runtime_error("dpp sampler: degenerate feature vector");
    }
    const double inv = 1.0 / std::sqrt(norm2);
    double* er = used_re_.data() + static_cast<size_t>(count) * n_;
    double* ei = used_im_.data() + static_cast<size_t>(count) * n_;
    for (int t = 0; t < n_; ++t) {
      er[t] = vr[t] * inv;
      ei[t] = vi[t] * inv;
    }
  }

  const EnsembleSpec& spec_;
  int n_;
  double sup_ = 0.0;
  std::vector<double> phi_re_, phi_im_, ov_re_, ov_im_;
  std::vector<double> used_re_, used_im_;
};

}  // namespace

std::vector<double> sample_angles_unsorted(const EnsembleSpec& spec, Rng& rng,
                                           const SamplerOptions& opts) {
  std::vector<double> out;
  if (spec.kernel == KernelFamily::Exp) {
    ComplexEngine engine(spec);
    engine.run(rng, opts, out);
  } else {
    RealEngine engine(spec);
    engine.run(rng, opts, out);
  }
  return out;
}

std::vector<double> sample_angles(const EnsembleSpec& spec, Rng& rng,
                                  const SamplerOptions& opts) {
  std::vector<double> out = sample_angles_unsorted(spec, rng, opts);
  std::sort(out.begin(), out.end());
  return out;
}

AngleSample draw_sample(const EnsembleSpec& spec, uint64_t seed,
                        uint64_t replicate, const SamplerOptions& opts) {
  Rng rng(seed, replicate);
  AngleSample sample;
  sample.spec = spec;
  sample.seed = seed;
  sample.replicate = replicate;
  sample.angles = sample_angles(spec, rng, opts);
  return sample;
}

SpectralMeasure angles_to_spectral_measure(const EnsembleSpec& spec,
                                           const std::vector<double>& angles) {
  SpectralMeasure m;
  if (spec.kernel == KernelFamily::Exp) {
    m.atoms = angles;
    for (double& a : m.atoms) {
      a -= kTwoPi * std::floor(a / kTwoPi);
      if (a >= kTwoPi) a -= kTwoPi;
    }
  } else {
    m.atoms.reserve(2 * angles.size());
    for (double a : angles) {
      double r = a - kTwoPi * std::floor(a / kTwoPi);
      if (r >= kTwoPi) r -= kTwoPi;
      m.atoms.push_back(r);
      double s = kTwoPi - r;
      if (s >= kTwoPi) s -= kTwoPi;
      m.atoms.push_back(s);
    }
  }
  return m;
}

}  // namespace ccg
