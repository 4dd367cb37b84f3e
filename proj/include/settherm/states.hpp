#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "settherm/spectra.hpp"

namespace settherm {

using ComplexMatrix = Eigen::MatrixXcd;

/// Eigenvalues in descending order with matching orthonormal eigenvector
/// columns. The first component of each eigenvector whose magnitude exceeds
/// 1e-12 is real and positive.
struct EigenDecomposition {
  std::vector<double> eigenvalues;
  ComplexMatrix eigenvectors;
};

/// Largest |m_ij - conj(m_ji)|.
double hermitian_defect(const ComplexMatrix& m);

/// Throws InvalidArgument (reporting the asymmetry) when m is not square or
/// not Hermitian within tol * max(1, max|m_ij|).
EigenDecomposition eigendecompose(const ComplexMatrix& m, double hermitian_tol = 1e-12);

/// Unit-trace positive semidefinite Hermitian matrix. The spectrum is
/// computed once at construction and cached.
class DensityMatrix {
 public:
  explicit DensityMatrix(ComplexMatrix entries);

  static DensityMatrix maximally_mixed(std::size_t d);
  /// U diag(spectrum) U^dagger; U must be unitary.
  static DensityMatrix from_spectrum(const Spectrum& spectrum, const ComplexMatrix& unitary);
  static DensityMatrix diagonal(std::span<const double> populations);

  std::size_t dimension() const noexcept { return static_cast<std::size_t>(entries_.rows()); }
  const ComplexMatrix& matrix() const noexcept { return entries_; }
  const Spectrum& spectrum() const noexcept { return spectrum_; }

 private:
  DensityMatrix(ComplexMatrix entries, Spectrum spectrum);

  ComplexMatrix entries_;
  Spectrum spectrum_;
};

/// Hermitian operator in energy units (k_B = hbar = 1).
class Hamiltonian {
 public:
  explicit Hamiltonian(ComplexMatrix entries);

  static Hamiltonian diagonal(std::span<const double> energies);

  std::size_t dimension() const noexcept { return static_cast<std::size_t>(entries_.rows()); }
  const ComplexMatrix& matrix() const noexcept { return entries_; }
  bool is_diagonal() const noexcept { return diagonal_; }

  /// Energies in ascending order and the matching eigenvectors. A diagonal
  /// Hamiltonian keeps the computational basis; ties keep index order.
  const std::vector<double>& energies() const noexcept { return energies_; }
  const ComplexMatrix& energy_basis() const noexcept { return basis_; }

 private:
  ComplexMatrix entries_;
  bool diagonal_ = false;
  std::vector<double> energies_;
  ComplexMatrix basis_;
};

struct ThermalSpectrum {
  Spectrum probabilities;  // descending
  double partition_function = 0.0;
  double log_partition_function = 0.0;
  double temperature = 0.0;
};

/// Boltzmann populations of the given levels. T = +inf gives the uniform
/// spectrum; T <= 0 throws InvalidArgument.
ThermalSpectrum gibbs_spectrum(std::span<const double> energies, double temperature);

DensityMatrix gibbs_state(const Hamiltonian& h, double temperature);

struct TransverseIsingParams {
  double j_coupling = 1.0;
  double h_field = 0.0;
};

struct IsingTemperatures {
  double order_parameter = 0.0;  // tanh(beta sqrt(1+h^2))
  double tau_scaled = 0.0;       // Hamiltonian-scaled SET, equals 1/beta
  double tau_unscaled = 0.0;     // generic spectral SET, 1/(beta sqrt(1+h^2))
};

/// H = -J sigma_z - h sigma_x with J = 1.
Hamiltonian transverse_ising_hamiltonian(const TransverseIsingParams& params);

IsingTemperatures transverse_ising(const TransverseIsingParams& params, double beta);

/// rho = (I + r.sigma)/2; |r| <= 1.
DensityMatrix bloch_qubit(const std::array<double, 3>& r);

/// Removes coherences in the basis given by the columns of `basis`.
DensityMatrix dephase(const DensityMatrix& rho, const ComplexMatrix& basis);

/// S(rho dephased in `basis`) - S(rho), clamped at zero.
double rel_entropy_coherence(const DensityMatrix& rho, const ComplexMatrix& basis);

SpectralSummary spectral_summary(const DensityMatrix& rho);

}  // namespace settherm
