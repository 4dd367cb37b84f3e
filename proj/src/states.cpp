#include "settherm/states.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numeric>
#include <sstream>

#include "settherm/error.hpp"

namespace settherm {

namespace {

using cd = std::complex<double>;

constexpr double kPhaseThreshold = 1e-12;

void require_square(const ComplexMatrix& m, const char* what) {
  if (m.rows() == 0 || m.rows() != m.cols()) {
    std::ostringstream msg;
    msg << what << " must be a non-empty square matrix, got " << m.rows() << "x" << m.cols();
    throw InvalidArgument(msg.str());
  }
}

double max_abs(const ComplexMatrix& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

void require_hermitian(const ComplexMatrix& m, double tol, const char* what) {
  require_square(m, what);
  const double defect = hermitian_defect(m);
  if (defect > tol * std::max(1.0, max_abs(m))) {
    std::ostringstream msg;
    msg << what << " is not Hermitian: max |m_ij - conj(m_ji)| = " << defect;
    throw InvalidArgument(msg.str());
  }
}

// First component above threshold made real and positive.
void fix_phase(ComplexMatrix& vectors) {
  for (Eigen::Index c = 0; c < vectors.cols(); ++c) {
    for (Eigen::Index r = 0; r < vectors.rows(); ++r) {
      const double mag = std::abs(vectors(r, c));
      if (mag > kPhaseThreshold) {
        vectors.col(c) *= std::conj(vectors(r, c)) / mag;
        vectors(r, c) = cd(mag, 0.0);
        break;
      }
    }
  }
}

void require_unitary_columns(const ComplexMatrix& basis, std::size_t d, const char* what) {
  if (static_cast<std::size_t>(basis.rows()) != d || basis.rows() != basis.cols()) {
    std::ostringstream msg;
    msg << what << " must be " << d << "x" << d;
    throw InvalidArgument(msg.str());
  }
  const ComplexMatrix gram = basis.adjoint() * basis;
  const double err = max_abs(gram - ComplexMatrix::Identity(basis.rows(), basis.cols()));
  if (err > 1e-10) {
    std::ostringstream msg;
    msg << what << " is not orthonormal: max |V^dagger V - I| = " << err;
    throw InvalidArgument(msg.str());
  }
}

ComplexMatrix hermitian_part(const ComplexMatrix& m) { return 0.5 * (m + m.adjoint()); }

}  // namespace

double hermitian_defect(const ComplexMatrix& m) {
  if (m.rows() != m.cols()) return std::numeric_limits<double>::infinity();
  return max_abs(m - m.adjoint());
}

EigenDecomposition eigendecompose(const ComplexMatrix& m, double hermitian_tol) {
  require_hermitian(m, hermitian_tol, "matrix");
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(hermitian_part(m));
  if (solver.info() != Eigen::Success) {
    throw NumericalError("Hermitian eigensolver failed to converge");
  }
  const Eigen::Index n = m.rows();
  // Eigen returns ascending order; reverse with a stable sort so exact ties
  // keep ascending-index order.
  std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  const auto& values = solver.eigenvalues();
  std::stable_sort(order.begin(), order.end(),
                   [&](Eigen::Index a, Eigen::Index b) { return values(a) > values(b); });

  EigenDecomposition out;
  out.eigenvalues.resize(static_cast<std::size_t>(n));
  out.eigenvectors.resize(n, n);
  for (Eigen::Index c = 0; c < n; ++c) {
    const Eigen::Index src = order[static_cast<std::size_t>(c)];
    out.eigenvalues[static_cast<std::size_t>(c)] = values(src);
    out.eigenvectors.col(c) = solver.eigenvectors().col(src);
  }
  fix_phase(out.eigenvectors);
  return out;
}

// --- DensityMatrix ---------------------------------------------------------

namespace {

Spectrum validated_spectrum(const ComplexMatrix& m) {
  require_hermitian(m, 1e-12, "density matrix");
  const double trace = m.trace().real();
  if (std::abs(trace - 1.0) > 1e-10) {
    std::ostringstream msg;
    msg << "density matrix trace is " << trace << ", expected 1";
    throw InvalidArgument(msg.str());
  }
  if (m.rows() < 2) throw InvalidArgument("density matrix dimension must be at least 2");
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(hermitian_part(m), Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw NumericalError("Hermitian eigensolver failed to converge");
  const double smallest = solver.eigenvalues()(0);
  if (smallest < -1e-10) {
    std::ostringstream msg;
    msg << "density matrix is not positive semidefinite: smallest eigenvalue " << smallest;
    throw InvalidArgument(msg.str());
  }
  std::vector<double> ev(solver.eigenvalues().data(),
                         solver.eigenvalues().data() + solver.eigenvalues().size());
  Tolerances tol;
  tol.clamp = 1e-10;
  return Spectrum(std::move(ev), tol);
}

}  // namespace

DensityMatrix::DensityMatrix(ComplexMatrix entries)
    : DensityMatrix(hermitian_part(entries), validated_spectrum(entries)) {}

DensityMatrix::DensityMatrix(ComplexMatrix entries, Spectrum spectrum)
    : entries_(std::move(entries)), spectrum_(std::move(spectrum)) {}

DensityMatrix DensityMatrix::maximally_mixed(std::size_t d) {
  if (d < 2) throw InvalidArgument("density matrix dimension must be at least 2");
  const auto n = static_cast<Eigen::Index>(d);
  return DensityMatrix(ComplexMatrix::Identity(n, n) / static_cast<double>(d), Spectrum::uniform(d));
}

DensityMatrix DensityMatrix::from_spectrum(const Spectrum& spectrum, const ComplexMatrix& unitary) {
  require_unitary_columns(unitary, spectrum.dimension(), "unitary");
  Eigen::VectorXd diag(static_cast<Eigen::Index>(spectrum.dimension()));
  for (std::size_t i = 0; i < spectrum.dimension(); ++i) diag(static_cast<Eigen::Index>(i)) = spectrum[i];
  ComplexMatrix m = unitary * diag.cast<cd>().asDiagonal() * unitary.adjoint();
  return DensityMatrix(hermitian_part(m), spectrum);
}

DensityMatrix DensityMatrix::diagonal(std::span<const double> populations) {
  Spectrum s(std::vector<double>(populations.begin(), populations.end()));
  const auto n = static_cast<Eigen::Index>(populations.size());
  ComplexMatrix m = ComplexMatrix::Zero(n, n);
  // Keep the caller's placement, renormalised the same way as the spectrum.
  const double total = std::accumulate(populations.begin(), populations.end(), 0.0);
  for (Eigen::Index i = 0; i < n; ++i) {
    m(i, i) = std::max(0.0, populations[static_cast<std::size_t>(i)]) / total;
  }
  return DensityMatrix(std::move(m), std::move(s));
}

// --- Hamiltonian -------------------------------------------------------------

Hamiltonian::Hamiltonian(ComplexMatrix entries) {
  require_hermitian(entries, 1e-12, "Hamiltonian");
  entries_ = hermitian_part(entries);
  const Eigen::Index n = entries_.rows();
  bool diag = true;
  for (Eigen::Index r = 0; r < n && diag; ++r) {
    for (Eigen::Index c = 0; c < n; ++c) {
      if (r != c && entries_(r, c) != cd(0.0, 0.0)) {
        diag = false;
        break;
      }
    }
  }
  diagonal_ = diag;
  if (diagonal_) {
    std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](Eigen::Index a, Eigen::Index b) {
      return entries_(a, a).real() < entries_(b, b).real();
    });
    energies_.resize(static_cast<std::size_t>(n));
    basis_ = ComplexMatrix::Zero(n, n);
    for (Eigen::Index c = 0; c < n; ++c) {
      const Eigen::Index src = order[static_cast<std::size_t>(c)];
      energies_[static_cast<std::size_t>(c)] = entries_(src, src).real();
      basis_(src, c) = 1.0;
    }
  } else {
    EigenDecomposition dec = eigendecompose(entries_);
    energies_.assign(dec.eigenvalues.rbegin(), dec.eigenvalues.rend());
    basis_ = dec.eigenvectors.rowwise().reverse();
  }
}

Hamiltonian Hamiltonian::diagonal(std::span<const double> energies) {
  const auto n = static_cast<Eigen::Index>(energies.size());
  if (n == 0) throw InvalidArgument("Hamiltonian needs at least one level");
  ComplexMatrix m = ComplexMatrix::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const double e = energies[static_cast<std::size_t>(i)];
    if (!std::isfinite(e)) throw InvalidArgument("energy levels must be finite");
    m(i, i) = e;
  }
  return Hamiltonian(std::move(m));
}

// --- thermal states ----------------------------------------------------------

ThermalSpectrum gibbs_spectrum(std::span<const double> energies, double temperature) {
  if (energies.size() < 2) throw InvalidArgument("need at least two energy levels");
  if (std::isnan(temperature) || temperature <= 0.0) {
    std::ostringstream msg;
    msg << "temperature must be positive, got " << temperature;
    throw InvalidArgument(msg.str());
  }
  for (double e : energies) {
    if (!std::isfinite(e)) throw InvalidArgument("energy levels must be finite");
  }
  const std::size_t d = energies.size();
  if (std::isinf(temperature)) {
    const double dd = static_cast<double>(d);
    return ThermalSpectrum{Spectrum::uniform(d), dd, std::log(dd), temperature};
  }
  const double e_min = *std::min_element(energies.begin(), energies.end());
  std::vector<double> weights(d);
  double shifted_z = 0.0;
  for (std::size_t i = 0; i < d; ++i) {
    weights[i] = std::exp(-(energies[i] - e_min) / temperature);
    shifted_z += weights[i];
  }
  for (double& w : weights) w /= shifted_z;
  const double log_z = std::log(shifted_z) - e_min / temperature;
  return ThermalSpectrum{Spectrum(std::move(weights)), std::exp(log_z), log_z, temperature};
}

DensityMatrix gibbs_state(const Hamiltonian& h, double temperature) {
  // energy_basis() is in ascending energy order, which is exactly the order of
  // the descending Boltzmann populations (ties share a population).
  ThermalSpectrum thermal = gibbs_spectrum(h.energies(), temperature);
  return DensityMatrix::from_spectrum(thermal.probabilities, h.energy_basis());
}

Hamiltonian transverse_ising_hamiltonian(const TransverseIsingParams& params) {
  if (params.j_coupling != 1.0) throw InvalidArgument("transverse Ising coupling J is fixed to 1");
  if (!(params.h_field >= 0.0) || !std::isfinite(params.h_field)) {
    throw InvalidArgument("transverse field h must be finite and non-negative");
  }
  ComplexMatrix m(2, 2);
  m << -1.0, -params.h_field, -params.h_field, 1.0;
  return Hamiltonian(std::move(m));
}

IsingTemperatures transverse_ising(const TransverseIsingParams& params, double beta) {
  if (params.j_coupling != 1.0) throw InvalidArgument("transverse Ising coupling J is fixed to 1");
  if (!(params.h_field >= 0.0) || !std::isfinite(params.h_field)) {
    throw InvalidArgument("transverse field h must be finite and non-negative");
  }
  if (!(beta > 0.0)) throw InvalidArgument("beta must be positive");
  const double omega = std::sqrt(1.0 + params.h_field * params.h_field);
  IsingTemperatures out;
  if (std::isinf(beta)) {
    out.order_parameter = 1.0;
    return out;
  }
  // Levels -omega, +omega. ln((1+P)/(1-P)) = ln(lambda_max/lambda_min) is taken
  // from the log-populations, which stays exact where tanh saturates.
  const double log_z = omega * beta + std::log1p(std::exp(-2.0 * omega * beta));
  const double log_p_max = omega * beta - log_z;
  const double log_p_min = -omega * beta - log_z;
  const double log_odds = log_p_max - log_p_min;
  out.order_parameter = std::tanh(beta * omega);
  out.tau_scaled = 2.0 * omega / log_odds;
  out.tau_unscaled = 2.0 / log_odds;
  return out;
}

DensityMatrix bloch_qubit(const std::array<double, 3>& r) {
  const double norm = std::sqrt(r[0] * r[0] + r[1] * r[1] + r[2] * r[2]);
  if (!std::isfinite(norm) || norm > 1.0 + 1e-12) {
    std::ostringstream msg;
    msg << "Bloch vector norm " << norm << " exceeds 1";
    throw InvalidArgument(msg.str());
  }
  ComplexMatrix m(2, 2);
  m << cd(1.0 + r[2], 0.0), cd(r[0], -r[1]), cd(r[0], r[1]), cd(1.0 - r[2], 0.0);
  return DensityMatrix(0.5 * m);
}

DensityMatrix dephase(const DensityMatrix& rho, const ComplexMatrix& basis) {
  require_unitary_columns(basis, rho.dimension(), "dephasing basis");
  const ComplexMatrix in_basis = basis.adjoint() * rho.matrix() * basis;
  const Eigen::VectorXcd diag = in_basis.diagonal().real().cast<cd>();
  ComplexMatrix m = basis * diag.asDiagonal() * basis.adjoint();
  return DensityMatrix(std::move(m));
}

double rel_entropy_coherence(const DensityMatrix& rho, const ComplexMatrix& basis) {
  require_unitary_columns(basis, rho.dimension(), "dephasing basis");
  const ComplexMatrix in_basis = basis.adjoint() * rho.matrix() * basis;
  std::vector<double> populations(rho.dimension());
  for (std::size_t i = 0; i < populations.size(); ++i) {
    populations[i] = std::max(0.0, in_basis(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)).real());
  }
  const double c = shannon_entropy(populations) - von_neumann_entropy(rho.spectrum());
  return std::max(0.0, c);
}

SpectralSummary spectral_summary(const DensityMatrix& rho) { return summarize(rho.spectrum()); }

}  // namespace settherm
