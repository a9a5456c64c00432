#pragma once

#include <cstdint>
#include <vector>

#include "ccg/ensembles.hpp"
#include "ccg/rng.hpp"
#include "ccg/wasserstein.hpp"

namespace ccg {

struct SamplerOptions {
  // Rejection attempts allowed per point before giving up.
  int64_t max_rejects_per_point = 1'000'000;
};

struct AngleSample {
  EnsembleSpec spec;
  std::vector<double> angles;  // sorted ascending, length spec.n
  uint64_t seed = 0;
  uint64_t replicate = 0;
};

// Draws one realization of the rank-N projection process by sequential
// conditional sampling: at step i the density (K(x,x) - |proj|^2)/(N-i) is
// sampled by rejection from the uniform envelope sup K(x,x)/(N-i), and the
// accepted feature vector is orthonormalized into the conditioning set.
// Angles are returned sorted. Throws std::runtime_error if the rejection cap
// is exceeded.
std::vector<double> sample_angles(const EnsembleSpec& spec, Rng& rng,
                                  const SamplerOptions& opts = {});

// Same, but in generation order (used by exchangeability tests).
std::vector<double> sample_angles_unsorted(const EnsembleSpec& spec, Rng& rng,
                                           const SamplerOptions& opts = {});

// Replicate-addressed convenience wrapper; the stream is derived from
// (seed, replicate).
AngleSample draw_sample(const EnsembleSpec& spec, uint64_t seed,
                        uint64_t replicate, const SamplerOptions& opts = {});

// mu_A: the angles themselves for U/SU, the +/- paired angles otherwise,
// reduced mod 2pi. Trivial eigenvalues are never included.
SpectralMeasure angles_to_spectral_measure(const EnsembleSpec& spec,
                                           const std::vector<double>& angles);

}  // namespace ccg
