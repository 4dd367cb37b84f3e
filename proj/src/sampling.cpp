#include "settherm/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numeric>
#include <sstream>

#include "settherm/error.hpp"
#include "settherm/parallel.hpp"

namespace settherm {

namespace {

using cd = std::complex<double>;

constexpr std::size_t kIpAttemptsPerSample = 100000;

void require_config(const SamplerConfig& cfg) {
  if (cfg.dimension < 2) throw InvalidArgument("sampler dimension must be at least 2");
  if (cfg.count < 1) throw InvalidArgument("sampler count must be at least 1");
}

std::size_t chunk_count(std::size_t n) { return (n + kSampleChunk - 1) / kSampleChunk; }

std::size_t chunk_size(std::size_t n, std::size_t chunk) {
  return std::min(kSampleChunk, n - chunk * kSampleChunk);
}

// Fills out[first, first + count) chunk by chunk.
template <typename T, typename Draw>
std::vector<T> chunked(const SamplerConfig& cfg, Stream stream, Draw draw) {
  const std::size_t chunks = chunk_count(cfg.count);
  std::vector<std::vector<T>> parts(chunks);
  parallel_for(chunks, [&](std::size_t c) {
    std::mt19937_64 rng = make_engine(cfg.seed, stream, c);
    const std::size_t n = chunk_size(cfg.count, c);
    parts[c].reserve(n);
    for (std::size_t i = 0; i < n; ++i) parts[c].push_back(draw(rng));
  });
  std::vector<T> out;
  out.reserve(cfg.count);
  for (auto& part : parts) {
    for (auto& v : part) out.push_back(std::move(v));
  }
  return out;
}

}  // namespace

std::mt19937_64 make_engine(std::uint64_t seed, Stream stream, std::uint64_t chunk) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(chunk),
                    static_cast<std::uint32_t>(chunk >> 32)};
  return std::mt19937_64(seq);
}

std::vector<IndicesOfPurity> sample_ips(const SamplerConfig& cfg) {
  require_config(cfg);
  const std::size_t d = cfg.dimension;
  const std::size_t m = d - 1;
  std::vector<double> scale(m);
  for (std::size_t k = 1; k <= m; ++k) {
    const double kk = static_cast<double>(k);
    scale[k - 1] = std::sqrt(static_cast<double>(d) / (static_cast<double>(d - 1) * kk * (kk + 1.0)));
  }
  return chunked<IndicesOfPurity>(cfg, Stream::ip_sphere, [&](std::mt19937_64& rng) {
    std::normal_distribution<double> normal;
    std::uniform_real_distribution<double> unit;
    std::vector<double> p(m);
    for (std::size_t attempt = 0; attempt < kIpAttemptsPerSample; ++attempt) {
      double norm2 = 0.0;
      for (std::size_t k = 0; k < m; ++k) {
        p[k] = std::abs(normal(rng));
        norm2 += p[k] * p[k];
      }
      if (norm2 == 0.0) continue;
      const double radius = unit(rng) / std::sqrt(norm2);
      bool ok = true;
      for (std::size_t k = 0; k < m && ok; ++k) {
        p[k] = p[k] * radius / scale[k];
        ok = p[k] <= 1.0 && (k == 0 || p[k] >= p[k - 1]);
      }
      if (ok) return IndicesOfPurity(p);
    }
    std::ostringstream msg;
    msg << "IP-sphere sampler exhausted " << kIpAttemptsPerSample << " attempts for one sample (d = " << d << ")";
    throw NumericalError(msg.str());
  });
}

ComplexMatrix ginibre_matrix(std::size_t d, std::mt19937_64& rng) {
  std::normal_distribution<double> normal;
  const auto n = static_cast<Eigen::Index>(d);
  ComplexMatrix g(n, n);
  for (Eigen::Index c = 0; c < n; ++c) {
    for (Eigen::Index r = 0; r < n; ++r) {
      const double re = normal(rng);
      const double im = normal(rng);
      g(r, c) = cd(re, im) * std::sqrt(0.5);
    }
  }
  return g;
}

DensityMatrix ginibre_state(std::size_t d, std::mt19937_64& rng) {
  const ComplexMatrix g = ginibre_matrix(d, rng);
  ComplexMatrix w = g * g.adjoint();
  w /= w.trace().real();
  return DensityMatrix(std::move(w));
}

std::vector<DensityMatrix> sample_ginibre(const SamplerConfig& cfg) {
  require_config(cfg);
  return chunked<DensityMatrix>(cfg, Stream::ginibre,
                                [&](std::mt19937_64& rng) { return ginibre_state(cfg.dimension, rng); });
}

UniformEntropySample sample_uniform_entropy(const SamplerConfig& cfg, std::size_t bins) {
  require_config(cfg);
  if (bins < 1) throw InvalidArgument("need at least one entropy bin");
  const std::size_t d = cfg.dimension;
  const double s_max = std::log(static_cast<double>(d));

  std::vector<std::size_t> quota(bins, cfg.count / bins);
  for (std::size_t b = 0; b < cfg.count % bins; ++b) ++quota[b];

  std::mt19937_64 rng = make_engine(cfg.seed, Stream::uniform_entropy, 0);
  std::uniform_real_distribution<double> unit;
  UniformEntropySample out;
  out.spectra.reserve(cfg.count);
  const std::size_t budget = 10000 * cfg.count;
  std::vector<double> lambda(d);
  for (std::size_t attempt = 0; attempt < budget && out.spectra.size() < cfg.count; ++attempt) {
    const double concentration = std::exp(std::log(0.01) * unit(rng));
    std::gamma_distribution<double> gamma(concentration, 1.0);
    double total = 0.0;
    for (double& v : lambda) {
      v = gamma(rng);
      total += v;
    }
    if (!(total > 0.0) || !std::isfinite(total)) continue;
    for (double& v : lambda) v /= total;
    const double s = shannon_entropy(lambda);
    auto bin = static_cast<std::size_t>(s / s_max * static_cast<double>(bins));
    bin = std::min(bin, bins - 1);
    if (quota[bin] == 0) continue;
    --quota[bin];
    out.spectra.emplace_back(lambda);
  }
  out.complete = out.spectra.size() == cfg.count;
  return out;
}

ComplexMatrix haar_unitary(std::size_t d, std::mt19937_64& rng) {
  if (d < 1) throw InvalidArgument("unitary dimension must be positive");
  const ComplexMatrix z = ginibre_matrix(d, rng);
  Eigen::HouseholderQR<ComplexMatrix> qr(z);
  ComplexMatrix q = qr.householderQ();
  const auto n = static_cast<Eigen::Index>(d);
  for (Eigen::Index c = 0; c < n; ++c) {
    const cd r = qr.matrixQR()(c, c);
    const double mag = std::abs(r);
    if (mag > 0.0) q.col(c) *= r / mag;
  }
  return q;
}

ComplexMatrix haar_unitary(std::size_t d, std::uint64_t seed) {
  std::mt19937_64 rng = make_engine(seed, Stream::haar, 0);
  return haar_unitary(d, rng);
}

PsaParams PsaParams::equispaced(std::size_t d, double zeta) {
  PsaParams p;
  p.alphas.resize(d);
  std::iota(p.alphas.begin(), p.alphas.end(), 0.0);
  p.zeta = zeta;
  return p;
}

Spectrum psa_spectrum(const PsaParams& p) {
  if (p.alphas.size() < 2) throw InvalidArgument("PSA needs at least two spectral parameters");
  for (double a : p.alphas) {
    if (!std::isfinite(a)) throw InvalidArgument("PSA spectral parameters must be finite");
  }
  if (std::isnan(p.zeta) || p.zeta < 0.0) throw InvalidArgument("PSA zeta must be non-negative");
  const double a_min = *std::min_element(p.alphas.begin(), p.alphas.end());
  std::vector<double> mu(p.alphas.size());
  if (std::isinf(p.zeta)) {
    for (std::size_t i = 0; i < mu.size(); ++i) mu[i] = p.alphas[i] == a_min ? 1.0 : 0.0;
  } else {
    for (std::size_t i = 0; i < mu.size(); ++i) mu[i] = std::exp(-p.zeta * (p.alphas[i] - a_min));
  }
  const double z = std::accumulate(mu.begin(), mu.end(), 0.0);
  for (double& v : mu) v /= z;
  return Spectrum(std::move(mu));
}

std::vector<PsaPoint> psa_curve(const PsaParams& p, std::span<const double> zeta_grid) {
  for (std::size_t i = 1; i < zeta_grid.size(); ++i) {
    if (!(zeta_grid[i] > zeta_grid[i - 1])) throw InvalidArgument("PSA zeta grid must be strictly increasing");
  }
  std::vector<PsaPoint> out;
  out.reserve(zeta_grid.size());
  PsaParams q = p;
  for (double zeta : zeta_grid) {
    q.zeta = zeta;
    const Spectrum s = psa_spectrum(q);
    out.push_back({zeta, spectral_set(s), von_neumann_entropy(s)});
  }
  return out;
}

}  // namespace settherm
