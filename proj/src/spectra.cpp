#include "settherm/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>
#include <sstream>

#include "settherm/error.hpp"

namespace settherm {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void require_unit_interval(double p, const char* what) {
  if (!(p >= 0.0 && p <= 1.0)) {
    std::ostringstream msg;
    msg << what << " must lie in [0, 1], got " << p;
    throw InvalidArgument(msg.str());
  }
}

double xlogx(double x) { return x > 0.0 ? x * std::log(x) : 0.0; }

// Eigenvalues carry ~eps absolute error, so P_d below ~sqrt(d)*eps is
// indistinguishable from the maximally mixed value.
double snap_purity(double p, std::size_t d) {
  const double floor = 16.0 * std::numeric_limits<double>::epsilon() * std::sqrt(static_cast<double>(d));
  if (p < floor) return 0.0;
  return std::min(p, 1.0);
}

// Eigenvalues from the inverse IP map, evaluated through the consecutive
// differences lambda_j - lambda_(j+1) = (P_(j) - P_(j-1)) / j starting from
// lambda_d = (1 - P_(d-1)) / d. The sums telescope, so saturated indices
// give exact zeros and ones. Entries may carry round-off.
std::vector<double> raw_eigenvalues(std::span<const double> ips) {
  const std::size_t d = ips.size() + 1;
  std::vector<double> lambda(d);
  lambda[d - 1] = (1.0 - ips[d - 2]) / static_cast<double>(d);
  for (std::size_t j = d - 1; j >= 1; --j) {
    const double prev = j >= 2 ? ips[j - 2] : 0.0;
    lambda[j - 1] = lambda[j] + (ips[j - 1] - prev) / static_cast<double>(j);
  }
  return lambda;
}

}  // namespace

Spectrum::Spectrum(std::vector<double> values, const Tolerances& tol) : values_(std::move(values)) {
  if (values_.size() < 2) {
    throw InvalidArgument("spectrum dimension must be at least 2");
  }
  for (double& v : values_) {
    if (!std::isfinite(v)) throw InvalidArgument("spectrum contains a non-finite value");
    if (v < -tol.clamp) {
      std::ostringstream msg;
      msg << "spectrum contains negative value " << v;
      throw InvalidArgument(msg.str());
    }
    if (v < 0.0) v = 0.0;
  }
  const double total = std::accumulate(values_.begin(), values_.end(), 0.0);
  if (std::abs(total - 1.0) > tol.trace) {
    std::ostringstream msg;
    msg << "spectrum sums to " << total << ", expected 1";
    throw InvalidArgument(msg.str());
  }
  for (double& v : values_) v /= total;
  std::stable_sort(values_.begin(), values_.end(), std::greater<>());
}

Spectrum Spectrum::uniform(std::size_t d) {
  if (d < 2) throw InvalidArgument("spectrum dimension must be at least 2");
  return Spectrum(std::vector<double>(d, 1.0 / static_cast<double>(d)));
}

Spectrum Spectrum::pure(std::size_t d) {
  if (d < 2) throw InvalidArgument("spectrum dimension must be at least 2");
  std::vector<double> v(d, 0.0);
  v[0] = 1.0;
  return Spectrum(std::move(v));
}

IndicesOfPurity::IndicesOfPurity(std::vector<double> values, const Tolerances& tol)
    : values_(std::move(values)) {
  if (values_.empty()) throw InvalidArgument("indices of purity need at least one entry (d >= 2)");
  double floor = 0.0;
  for (std::size_t k = 0; k < values_.size(); ++k) {
    double& v = values_[k];
    if (!std::isfinite(v) || v < -tol.identity || v > 1.0 + tol.identity) {
      std::ostringstream msg;
      msg << "index of purity P_(" << k + 1 << ") = " << v << " outside [0, 1]";
      throw InvalidArgument(msg.str());
    }
    if (v < floor - tol.identity) {
      std::ostringstream msg;
      msg << "indices of purity not non-decreasing at k = " << k + 1;
      throw InvalidArgument(msg.str());
    }
    v = std::clamp(v, floor, 1.0);
    floor = v;
  }
}

IndicesOfPurity indices_of_purity(const Spectrum& s) {
  const std::size_t d = s.dimension();
  std::vector<double> ips(d - 1);
  double partial = 0.0;
  for (std::size_t k = 1; k < d; ++k) {
    partial += s[k - 1];
    ips[k - 1] = partial - static_cast<double>(k) * s[k];
  }
  return IndicesOfPurity(std::move(ips));
}

Spectrum spectrum_from_ips(const IndicesOfPurity& p) {
  std::vector<double> lambda = raw_eigenvalues(p.values());
  for (std::size_t j = 0; j < lambda.size(); ++j) {
    if (lambda[j] < -1e-12) {
      std::ostringstream msg;
      msg << "internal error: reconstructed eigenvalue lambda_" << j + 1 << " = " << lambda[j];
      throw NumericalError(msg.str());
    }
  }
  return Spectrum(std::move(lambda));
}

double purity_gamma(const Spectrum& s) {
  double g = 0.0;
  for (double v : s.values()) g += v * v;
  return g;
}

double global_purity(const Spectrum& s) {
  if (s.largest() == 1.0) return 1.0;
  const double d = static_cast<double>(s.dimension());
  double centred = 0.0;
  for (double v : s.values()) {
    const double dv = v - 1.0 / d;
    centred += dv * dv;
  }
  return snap_purity(std::sqrt(d * centred / (d - 1.0)), s.dimension());
}

double global_purity_from_ips(const IndicesOfPurity& p) {
  const double d = static_cast<double>(p.dimension());
  double acc = 0.0;
  double complement = 0.0;  // sum (1 - P^2) / (k (k+1)); the weights sum to 1 - 1/d
  for (std::size_t i = 0; i < p.size(); ++i) {
    const double k = static_cast<double>(i + 1);
    acc += p[i] * p[i] / (k * (k + 1.0));
    complement += (1.0 - p[i]) * (1.0 + p[i]) / (k * (k + 1.0));
  }
  const double scale = d / (d - 1.0);
  if (scale * acc < 0.5) return snap_purity(std::sqrt(scale * acc), p.dimension());
  return snap_purity(std::sqrt(std::max(0.0, 1.0 - scale * complement)), p.dimension());
}

double purity_deficit(const Spectrum& s) {
  const double d = static_cast<double>(s.dimension());
  double tail = 0.0;
  for (std::size_t i = 1; i < s.dimension(); ++i) tail += s[i];
  double one_minus_gamma = s[0] * tail;
  for (std::size_t i = 1; i < s.dimension(); ++i) one_minus_gamma += s[i] * (1.0 - s[i]);
  const double one_minus_p2 = std::min(1.0, d / (d - 1.0) * one_minus_gamma);
  if (one_minus_p2 <= 0.0) return 0.0;
  return one_minus_p2 / (1.0 + global_purity(s));
}

double spectral_inverse_set(const Spectrum& s) {
  const double p = global_purity(s);
  if (p < 0.5) return std::atanh(p);
  const double deficit = purity_deficit(s);
  if (deficit == 0.0) return kInf;
  return 0.5 * (std::log1p(p) - std::log(deficit));
}

double spectral_set(const Spectrum& s) {
  const double beta = spectral_inverse_set(s);
  if (beta == 0.0) return kInf;
  return 1.0 / beta;
}

double set_temperature(double p_d) {
  require_unit_interval(p_d, "degree of purity");
  if (p_d == 0.0) return kInf;
  if (p_d == 1.0) return 0.0;
  return 1.0 / std::atanh(p_d);
}

double inverse_set(double p_d) {
  require_unit_interval(p_d, "degree of purity");
  if (p_d == 1.0) return kInf;
  return std::atanh(p_d);
}

double shannon_entropy(std::span<const double> probabilities) {
  double s = 0.0;
  for (double p : probabilities) s -= xlogx(p);
  return std::max(0.0, s);
}

double von_neumann_entropy(const Spectrum& s) { return shannon_entropy(s.values()); }

double entropy_from_ips(const IndicesOfPurity& p) {
  std::vector<double> lambda = raw_eigenvalues(p.values());
  for (double& v : lambda) v = std::max(v, 0.0);
  return shannon_entropy(lambda);
}

double pairwise_order_parameter(const Spectrum& s) {
  return std::clamp(2.0 * s.largest() - 1.0, 0.0, 1.0);
}

double bipartite_entropy(double p_p) {
  require_unit_interval(p_p, "pairwise order parameter");
  const double up = 0.5 * (1.0 + p_p);
  const double down = 0.5 * (1.0 - p_p);
  return std::max(0.0, -xlogx(up) - xlogx(down));
}

double degeneracy_plateau(std::size_t d, std::size_t g) {
  if (d < 2) throw InvalidArgument("dimension must be at least 2");
  if (g < 1 || g > d) {
    std::ostringstream msg;
    msg << "degeneracy " << g << " outside [1, " << d << "]";
    throw InvalidArgument(msg.str());
  }
  const double ratio = static_cast<double>(d - g) / static_cast<double>(g);
  const double p = std::sqrt(ratio / static_cast<double>(d - 1));
  return set_temperature(std::min(p, 1.0));
}

SpectralSummary summarize(const Spectrum& s) {
  SpectralSummary out;
  out.gamma = purity_gamma(s);
  out.p_global = global_purity(s);
  out.p_pairwise = pairwise_order_parameter(s);
  out.beta = spectral_inverse_set(s);
  out.tau = spectral_set(s);
  out.entropy = von_neumann_entropy(s);
  out.bipartite_entropy = bipartite_entropy(out.p_pairwise);
  return out;
}

}  // namespace settherm
