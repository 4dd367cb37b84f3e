#pragma once

// Spectral functionals of finite-dimensional states: indices of purity,
// degree of purity, statistical effective temperature (SET) and entropies.
// Units: k_B = hbar = 1 throughout.

#include <cstddef>
#include <span>
#include <vector>

namespace settherm {

/// Numerical tolerances shared by the validating constructors.
struct Tolerances {
  double trace = 1e-10;     ///< allowed |sum - 1| before renormalisation
  double clamp = 1e-12;     ///< negatives in [-clamp, 0) are set to zero
  double identity = 1e-12;  ///< slack for ordering / range checks
};

/// Descending probability vector of a unit-trace state, d >= 2.
///
/// Construction sorts (stable, descending), clamps round-off negatives and
/// renormalises. Throws InvalidArgument for anything that is not a
/// probability vector within tolerance.
class Spectrum {
 public:
  explicit Spectrum(std::vector<double> values, const Tolerances& tol = {});

  static Spectrum uniform(std::size_t d);
  static Spectrum pure(std::size_t d);

  std::size_t dimension() const noexcept { return values_.size(); }
  std::span<const double> values() const noexcept { return values_; }
  double operator[](std::size_t i) const { return values_[i]; }
  double largest() const noexcept { return values_.front(); }

 private:
  std::vector<double> values_;
};

/// The d-1 indices of purity P_(1) <= ... <= P_(d-1), each in [0, 1].
class IndicesOfPurity {
 public:
  explicit IndicesOfPurity(std::vector<double> values, const Tolerances& tol = {});

  /// Dimension of the state these indices describe (size + 1).
  std::size_t dimension() const noexcept { return values_.size() + 1; }
  std::size_t size() const noexcept { return values_.size(); }
  std::span<const double> values() const noexcept { return values_; }
  double operator[](std::size_t k) const { return values_[k]; }

 private:
  std::vector<double> values_;
};

struct SpectralSummary {
  double gamma = 1.0;              // Tr(rho^2)
  double p_global = 1.0;           // degree of purity P_d
  double p_pairwise = 1.0;         // max(0, 2 lambda_1 - 1)
  double tau = 0.0;                // SET, +inf when maximally mixed
  double beta = 0.0;               // inverse SET, +inf when pure
  double entropy = 0.0;            // von Neumann entropy
  double bipartite_entropy = 0.0;  // binary entropy of p_pairwise
};

IndicesOfPurity indices_of_purity(const Spectrum& s);

/// Inverse of indices_of_purity. Throws NumericalError if a reconstructed
/// eigenvalue is below -1e-12, which cannot happen for ordered input.
Spectrum spectrum_from_ips(const IndicesOfPurity& p);

double purity_gamma(const Spectrum& s);

/// Degree of purity sqrt((d*gamma - 1)/(d - 1)), evaluated in the centred
/// form d*sum (lambda_i - 1/d)^2 so that near-mixed states keep precision.
double global_purity(const Spectrum& s);

double global_purity_from_ips(const IndicesOfPurity& p);

/// 1 - P_d, accurate to full relative precision as the state approaches
/// purity (built from 1 - gamma = sum lambda_i (1 - lambda_i)).
double purity_deficit(const Spectrum& s);

/// SET and inverse SET of a spectrum, using purity_deficit near P_d = 1 so
/// that tau stays resolved when 1 - P_d is far below machine epsilon.
double spectral_set(const Spectrum& s);
double spectral_inverse_set(const Spectrum& s);

/// tau = 2 / ln((1+p)/(1-p)). Returns +inf at p = 0 and 0 at p = 1.
double set_temperature(double p_d);

/// beta = atanh(p) = 1 / set_temperature(p). Returns +inf at p = 1, the
/// unattainable pure limit.
double inverse_set(double p_d);

/// -sum p ln p with 0 ln 0 = 0. Accepts any non-negative weights.
double shannon_entropy(std::span<const double> probabilities);

double von_neumann_entropy(const Spectrum& s);

double entropy_from_ips(const IndicesOfPurity& p);

double pairwise_order_parameter(const Spectrum& s);

/// Binary entropy of ((1+p)/2, (1-p)/2); lies in [0, ln 2].
double bipartite_entropy(double p_p);

/// Zero-temperature SET limit of a Gibbs state whose ground level is g-fold
/// degenerate in dimension d.
double degeneracy_plateau(std::size_t d, std::size_t g);

SpectralSummary summarize(const Spectrum& s);

}  // namespace settherm
