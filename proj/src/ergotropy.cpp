#include "settherm/ergotropy.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "settherm/error.hpp"
#include "settherm/parallel.hpp"
#include "settherm/sampling.hpp"

namespace settherm {

namespace {

constexpr double kDegenerateGap = 1e-12;

void require_pe(double p_e) {
  if (!(p_e >= 0.0 && p_e <= 1.0)) {
    std::ostringstream msg;
    msg << "structured index of purity must lie in [0, 1], got " << p_e;
    throw InvalidArgument(msg.str());
  }
}

void require_dimension(std::size_t d) {
  if (d < 2) throw InvalidArgument("dimension must be at least 2");
}

double xlogx(double x) { return x > 0.0 ? x * std::log(x) : 0.0; }

bool has_degenerate_levels(const std::vector<double>& energies) {
  for (std::size_t i = 1; i < energies.size(); ++i) {
    if (energies[i] - energies[i - 1] < kDegenerateGap) return true;
  }
  return false;
}

double mean_energy(const DensityMatrix& rho, const Hamiltonian& h) {
  return (rho.matrix() * h.matrix()).trace().real();
}

double passive_energy(const Spectrum& s, const std::vector<double>& energies) {
  double e = 0.0;
  for (std::size_t i = 0; i < energies.size(); ++i) e += s[i] * energies[i];
  return e;
}

void require_matching(const DensityMatrix& rho, const Hamiltonian& h) {
  if (rho.dimension() != h.dimension()) {
    std::ostringstream msg;
    msg << "state dimension " << rho.dimension() << " does not match Hamiltonian dimension " << h.dimension();
    throw InvalidArgument(msg.str());
  }
}

}  // namespace

PassiveState passive_state(const DensityMatrix& rho, const Hamiltonian& h) {
  require_matching(rho, h);
  return {DensityMatrix::from_spectrum(rho.spectrum(), h.energy_basis()), has_degenerate_levels(h.energies())};
}

double ergotropy(const DensityMatrix& rho, const Hamiltonian& h) {
  require_matching(rho, h);
  const double w = mean_energy(rho, h) - passive_energy(rho.spectrum(), h.energies());
  if (w < -1e-10) {
    std::ostringstream msg;
    msg << "ergotropy evaluated to " << w << " (below the passive energy)";
    throw NumericalError(msg.str());
  }
  return std::max(0.0, w);
}

double anti_aligned_ergotropy(const Spectrum& s, std::span<const double> ascending_energies) {
  const std::size_t d = s.dimension();
  if (ascending_energies.size() != d) throw InvalidArgument("energy count does not match spectrum dimension");
  double w = 0.0;
  for (std::size_t i = 0; i < d; ++i) w += s[i] * (ascending_energies[d - 1 - i] - ascending_energies[i]);
  return std::max(0.0, w);
}

StructuredState StructuredState::from_lambda1(std::size_t d, double lambda1) {
  require_dimension(d);
  const double dd = static_cast<double>(d);
  if (!(lambda1 >= 1.0 / dd - 1e-15 && lambda1 <= 1.0)) {
    std::ostringstream msg;
    msg << "structured lambda1 must lie in [1/d, 1], got " << lambda1;
    throw InvalidArgument(msg.str());
  }
  StructuredState s;
  s.dimension = d;
  s.lambda1 = std::max(lambda1, 1.0 / dd);
  s.lambda_e = (1.0 - s.lambda1) / (dd - 1.0);
  s.p_e = std::clamp((dd * s.lambda1 - 1.0) / (dd - 1.0), 0.0, 1.0);
  return s;
}

StructuredState StructuredState::from_pe(std::size_t d, double p_e) {
  require_dimension(d);
  require_pe(p_e);
  const double dd = static_cast<double>(d);
  StructuredState s;
  s.dimension = d;
  s.p_e = p_e;
  s.lambda1 = (1.0 + (dd - 1.0) * p_e) / dd;
  s.lambda_e = (1.0 - p_e) / dd;
  return s;
}

Spectrum structured_spectrum(std::size_t d, double lambda1) {
  const StructuredState s = StructuredState::from_lambda1(d, lambda1);
  std::vector<double> v(d, s.lambda_e);
  v[0] = s.lambda1;
  return Spectrum(std::move(v));
}

double structured_ergotropy(std::size_t d, double lambda1, double eps_top) {
  if (!(eps_top > 0.0) || !std::isfinite(eps_top)) throw InvalidArgument("top energy must be positive");
  return eps_top * StructuredState::from_lambda1(d, lambda1).p_e;
}

double structured_entropy(std::size_t d, double p_e) {
  require_dimension(d);
  require_pe(p_e);
  const double dd = static_cast<double>(d);
  const double top = (1.0 + (dd - 1.0) * p_e) / dd;
  const double rest = (1.0 - p_e) / dd;
  return std::max(0.0, -xlogx(top) - (dd - 1.0) * xlogx(rest));
}

double structured_set(std::size_t d, double p_e) {
  require_dimension(d);
  require_pe(p_e);
  return set_temperature(p_e);
}

double structured_bound_at_entropy(std::size_t d, double entropy, double eps_top) {
  require_dimension(d);
  if (!(eps_top > 0.0) || !std::isfinite(eps_top)) throw InvalidArgument("top energy must be positive");
  const double s_max = std::log(static_cast<double>(d));
  if (!(entropy >= -1e-12 && entropy <= s_max + 1e-12)) {
    std::ostringstream msg;
    msg << "entropy " << entropy << " outside [0, ln d]";
    throw InvalidArgument(msg.str());
  }
  // Smallest p_e whose structured entropy drops below the target, so the
  // returned bound errs upward.
  double lo = 0.0;
  double hi = 1.0;
  if (structured_entropy(d, 0.0) < entropy) return 0.0;
  if (structured_entropy(d, 1.0) >= entropy) return eps_top;
  while (true) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (structured_entropy(d, mid) >= entropy) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return eps_top * hi;
}

double structured_bound_at_set(std::size_t d, double tau, double eps_top) {
  require_dimension(d);
  if (!(eps_top > 0.0) || !std::isfinite(eps_top)) throw InvalidArgument("top energy must be positive");
  if (std::isnan(tau) || tau < 0.0) throw InvalidArgument("SET must be non-negative");
  if (std::isinf(tau)) return 0.0;
  if (tau == 0.0) return eps_top;
  return eps_top * std::tanh(1.0 / tau);
}

std::vector<BoundPoint> structured_bound_curve(std::size_t d, double eps_top, std::size_t points) {
  require_dimension(d);
  if (points < 2) throw InvalidArgument("bound curve needs at least two points");
  if (!(eps_top > 0.0) || !std::isfinite(eps_top)) throw InvalidArgument("top energy must be positive");
  std::vector<BoundPoint> out;
  out.reserve(points);
  for (std::size_t i = 0; i < points; ++i) {
    const double p = static_cast<double>(i) / static_cast<double>(points - 1);
    const StructuredState s = StructuredState::from_pe(d, p);
    out.push_back({p, s.lambda1, eps_top * p, structured_entropy(d, p), structured_set(d, p)});
  }
  return out;
}

ErgotropyRecord evaluate_record(const DensityMatrix& rho, const Hamiltonian& h) {
  ErgotropyRecord r;
  r.lambda_max = rho.spectrum().largest();
  r.work = ergotropy(rho, h);
  r.entropy = von_neumann_entropy(rho.spectrum());
  r.tau = spectral_set(rho.spectrum());
  r.coherence = rel_entropy_coherence(rho, h.energy_basis());
  return r;
}

std::vector<ErgotropyRecord> ergotropy_scatter(std::span<const Spectrum> spectra, const Hamiltonian& h,
                                               std::uint64_t seed) {
  if (!h.is_diagonal()) throw InvalidArgument("scatter Hamiltonian must be diagonal");
  if (has_degenerate_levels(h.energies())) throw InvalidArgument("scatter Hamiltonian must be nondegenerate");
  for (const Spectrum& s : spectra) {
    if (s.dimension() != h.dimension()) throw InvalidArgument("spectrum dimension does not match Hamiltonian");
  }
  const std::size_t n = spectra.size();
  std::vector<ErgotropyRecord> out(n);
  const std::size_t chunks = (n + kSampleChunk - 1) / kSampleChunk;
  parallel_for(chunks, [&](std::size_t c) {
    std::mt19937_64 rng = make_engine(seed, Stream::ergotropy_scatter, c);
    const std::size_t end = std::min(n, (c + 1) * kSampleChunk);
    for (std::size_t i = c * kSampleChunk; i < end; ++i) {
      const ComplexMatrix q = haar_unitary(h.dimension(), rng);
      out[i] = evaluate_record(DensityMatrix::from_spectrum(spectra[i], q), h);
    }
  });
  return out;
}

std::vector<ErgotropyRecord> ergotropy_scatter(const ScatterConfig& cfg, const Hamiltonian& h) {
  if (cfg.count < 1) throw InvalidArgument("scatter needs at least one sample");
  if (!(cfg.ginibre_fraction >= 0.0 && cfg.ginibre_fraction <= 1.0)) {
    throw InvalidArgument("Ginibre fraction must lie in [0, 1]");
  }
  const std::size_t d = h.dimension();
  const auto n_ginibre =
      static_cast<std::size_t>(std::llround(static_cast<double>(cfg.count) * cfg.ginibre_fraction));
  const std::size_t n_uniform = cfg.count - n_ginibre;

  std::vector<Spectrum> spectra;
  spectra.reserve(cfg.count);
  if (n_ginibre > 0) {
    for (const DensityMatrix& rho : sample_ginibre({d, n_ginibre, cfg.seed, SamplingMethod::ginibre})) {
      spectra.push_back(rho.spectrum());
    }
  }
  if (n_uniform > 0) {
    UniformEntropySample u = sample_uniform_entropy({d, n_uniform, cfg.seed, SamplingMethod::uniform_entropy});
    if (!u.complete) {
      std::ostringstream msg;
      msg << "uniform-entropy sampler filled only " << u.spectra.size() << " of " << n_uniform << " samples";
      throw NumericalError(msg.str());
    }
    for (Spectrum& s : u.spectra) spectra.push_back(std::move(s));
  }
  return ergotropy_scatter(spectra, h, cfg.seed);
}

}  // namespace settherm
