#pragma once

// Passive states, ergotropy and the structured-state work bounds.
// Energies are taken relative to the ground level (epsilon_1 = 0); ergotropy
// is shift invariant so nothing else changes.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "settherm/spectra.hpp"
#include "settherm/states.hpp"

namespace settherm {

struct ErgotropyRecord {
  double lambda_max = 0.0;
  double work = 0.0;
  double entropy = 0.0;
  double tau = 0.0;
  double coherence = 0.0;
};

struct PassiveState {
  DensityMatrix state;
  bool degenerate_hamiltonian = false;  // tie broken by eigenvector index
};

/// Largest eigenvalue on the lowest level, and so on. Energies closer than
/// 1e-12 are reported through degenerate_hamiltonian.
PassiveState passive_state(const DensityMatrix& rho, const Hamiltonian& h);

/// Tr(rho H) - Tr(rho_passive H), clamped to >= 0. Throws NumericalError if
/// the raw value is below -1e-10.
double ergotropy(const DensityMatrix& rho, const Hamiltonian& h);

/// Largest ergotropy over all unitary orbits of the spectrum: the diagonal
/// arrangement with the largest eigenvalue on the highest level.
double anti_aligned_ergotropy(const Spectrum& s, std::span<const double> ascending_energies);

struct StructuredState {
  std::size_t dimension = 2;
  double lambda1 = 1.0;
  double lambda_e = 0.0;
  double p_e = 1.0;

  static StructuredState from_lambda1(std::size_t d, double lambda1);
  static StructuredState from_pe(std::size_t d, double p_e);
};

/// (lambda1, lambda_e, ..., lambda_e).
Spectrum structured_spectrum(std::size_t d, double lambda1);

/// eps_top (d lambda1 - 1) / (d - 1); the intermediate levels do not enter.
double structured_ergotropy(std::size_t d, double lambda1, double eps_top);

/// Entropy of the structured spectrum as a function of its common index of
/// purity p_e:
///   -(1/d) [ (1 + (d-1) p_e) ln((1 + (d-1) p_e)/d) + (d-1)(1 - p_e) ln((1 - p_e)/d) ].
double structured_entropy(std::size_t d, double p_e);

/// SET of the structured state. Its degree of purity equals p_e exactly, so
/// this is set_temperature(p_e).
double structured_set(std::size_t d, double p_e);

/// Structured work bound at a given entropy in [0, ln d] (structured_entropy
/// inverted by bisection; it is strictly decreasing in p_e).
double structured_bound_at_entropy(std::size_t d, double entropy, double eps_top);

/// Structured work bound at a given SET; tau = +inf gives 0.
double structured_bound_at_set(std::size_t d, double tau, double eps_top);

struct BoundPoint {
  double p_e = 0.0;
  double lambda1 = 0.0;
  double work = 0.0;
  double entropy = 0.0;
  double tau = 0.0;
};

/// The structured curve sampled at `points` values of p_e spread evenly on [0, 1].
std::vector<BoundPoint> structured_bound_curve(std::size_t d, double eps_top, std::size_t points);

struct ScatterConfig {
  std::size_t count = 1000;
  std::uint64_t seed = 0;
  double ginibre_fraction = 0.5;  // rest drawn from the uniform-entropy sampler
};

/// Sampled spectra, each rotated by its own Haar unitary and evaluated
/// against h: (lambda_max, W, S, tau, C_rel.ent). The first
/// round(count * ginibre_fraction) records come from Ginibre spectra.
/// h must be diagonal and nondegenerate.
std::vector<ErgotropyRecord> ergotropy_scatter(const ScatterConfig& cfg, const Hamiltonian& h);

/// Same evaluation for caller-supplied spectra.
std::vector<ErgotropyRecord> ergotropy_scatter(std::span<const Spectrum> spectra, const Hamiltonian& h,
                                               std::uint64_t seed);

ErgotropyRecord evaluate_record(const DensityMatrix& rho, const Hamiltonian& h);

}  // namespace settherm
