#pragma once

// Open isotropic Heisenberg chains H = sum_i sigma_i . sigma_{i+1}, L = 2..9.
// Basis ordering: site 1 is the most significant bit, so H matches the
// Kronecker-product construction sigma (x) sigma (x) I (x) ... term by term.

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "settherm/states.hpp"

namespace settherm {

inline constexpr int kMinChainLength = 2;
inline constexpr int kMaxChainLength = 9;

/// Real symmetric 2^L x 2^L matrix in the computational basis.
Eigen::MatrixXd chain_matrix(int length);

Hamiltonian chain_hamiltonian(int length);

/// Ascending eigenvalues; computed once per length and cached (thread safe).
const std::vector<double>& chain_energies(int length);

struct VarianceCheck {
  double numeric = 0.0;  // Tr(H^2) / 2^L
  double theory = 0.0;   // 3 (L - 1)
};

VarianceCheck variance_check(int length);

struct ChainPoint {
  double temperature = 0.0;
  double tau = 0.0;
  double entropy = 0.0;
};

/// Gibbs state of the chain at each T of an ascending positive grid.
std::vector<ChainPoint> tau_vs_temperature(int length, std::span<const double> t_grid);

/// SET of the chain's Gibbs state at one temperature.
double chain_tau(int length, double temperature);

/// Levels within `tol` of the ground energy.
std::size_t ground_degeneracy(int length, double tol = 1e-8);

struct Plateau {
  double numeric = 0.0;  // tau at T = 1e-4
  double theory = 0.0;   // degeneracy_plateau(2^L, g)
};

inline constexpr double kPlateauTemperature = 1e-4;

/// Present only for odd L; even chains have a unique ground state.
std::optional<Plateau> plateau(int length);

struct SlopeFit {
  double fit = 0.0;                // least squares tau = a T through the origin, T in [10, 100]
  double theory = 0.0;             // sqrt((2^L - 1) / (3 (L - 1)))
  double printed_alternative = 0.0;  // sqrt((2^L - 1) / 3^(L - 1))
};

SlopeFit high_t_slope(int length);

/// Uniform grid of 91 temperatures 10, 11, ..., 100 used by high_t_slope.
std::vector<double> slope_grid();

struct ChainDiagnostics {
  int length = 2;
  std::size_t dimension = 4;
  double ground_energy = 0.0;
  std::size_t ground_degeneracy = 1;
  double variance = 0.0;
  double variance_theory = 0.0;
  double slope_fit = 0.0;
  double slope_theory = 0.0;
  std::optional<double> plateau_numeric;
  std::optional<double> plateau_theory;
};

ChainDiagnostics chain_diagnostics(int length);

}  // namespace settherm
