#pragma once

// Seeded random states. Every sampler is a pure function of its config:
// samples are produced in fixed-size chunks, chunk c drawing from an
// mt19937_64 seeded by seed_seq{seed_lo, seed_hi, stream, c_lo, c_hi}, so
// output is identical for any thread count.

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "settherm/spectra.hpp"
#include "settherm/states.hpp"

namespace settherm {

enum class SamplingMethod { ip_sphere, ginibre, uniform_entropy };

struct SamplerConfig {
  std::size_t dimension = 2;
  std::size_t count = 1;
  std::uint64_t seed = 0;
  SamplingMethod method = SamplingMethod::ip_sphere;
};

/// Samples per chunk; part of the reproducibility contract.
inline constexpr std::size_t kSampleChunk = 1024;

/// Independent stream identifiers.
enum class Stream : std::uint32_t {
  ip_sphere = 1,
  ginibre = 2,
  uniform_entropy = 3,
  haar = 4,
  ergotropy_scatter = 5,
};

std::mt19937_64 make_engine(std::uint64_t seed, Stream stream, std::uint64_t chunk);

/// Indices of purity drawn through the rescaled coordinates
/// x_k = P_(k) sqrt(d / ((d-1) k (k+1))), for which P_d = |x|: a uniform
/// direction on the positive orthant and a radius uniform in [0, 1),
/// rejecting points that violate the ordering or exceed 1.
/// Throws NumericalError if a chunk exhausts its attempt budget.
std::vector<IndicesOfPurity> sample_ips(const SamplerConfig& cfg);

/// d x d complex matrix with independent standard complex normal entries.
ComplexMatrix ginibre_matrix(std::size_t d, std::mt19937_64& rng);

/// rho = G G^dagger / Tr(G G^dagger).
DensityMatrix ginibre_state(std::size_t d, std::mt19937_64& rng);
std::vector<DensityMatrix> sample_ginibre(const SamplerConfig& cfg);

struct UniformEntropySample {
  std::vector<Spectrum> spectra;
  bool complete = true;  // false if the attempt budget ran out
};

/// Spectra with entropy spread evenly over [0, ln d]: stratified rejection
/// into `bins` equal-width entropy bins with fixed quotas. Proposals are
/// Dirichlet spectra whose concentration is drawn log-uniformly in
/// [0.01, 1] per attempt, so low-entropy bins fill in reasonable time.
/// Budget is 10^4 * count attempts.
UniformEntropySample sample_uniform_entropy(const SamplerConfig& cfg, std::size_t bins = 20);

/// Haar-random unitary via QR of a Ginibre matrix with the phases of R's
/// diagonal moved into Q.
ComplexMatrix haar_unitary(std::size_t d, std::mt19937_64& rng);
ComplexMatrix haar_unitary(std::size_t d, std::uint64_t seed);

struct PsaParams {
  std::vector<double> alphas;
  double zeta = 0.0;

  /// alphas = (0, 1, ..., d-1).
  static PsaParams equispaced(std::size_t d, double zeta = 0.0);
};

/// mu_i = exp(-zeta alpha_i) / Z(zeta); zeta = +inf puts all weight on the
/// smallest alpha (shared equally on ties).
Spectrum psa_spectrum(const PsaParams& p);

struct PsaPoint {
  double zeta = 0.0;
  double tau = 0.0;
  double entropy = 0.0;
};

/// The PSA path for p.alphas over a strictly increasing zeta grid.
std::vector<PsaPoint> psa_curve(const PsaParams& p, std::span<const double> zeta_grid);

}  // namespace settherm
