#include "settherm/heisenberg.hpp"

#include <array>
#include <cmath>
#include <memory>
#include <mutex>
#include <sstream>

#include "settherm/error.hpp"
#include "settherm/parallel.hpp"

namespace settherm {

namespace {

void require_length(int length) {
  if (length < kMinChainLength || length > kMaxChainLength) {
    std::ostringstream msg;
    msg << "chain length " << length << " outside [" << kMinChainLength << ", " << kMaxChainLength << "]";
    throw InvalidArgument(msg.str());
  }
}

std::size_t chain_dimension(int length) { return std::size_t{1} << length; }

struct EnergyCache {
  std::mutex mutex;
  std::array<std::unique_ptr<std::vector<double>>, kMaxChainLength + 1> energies;
};

EnergyCache& cache() {
  static EnergyCache c;
  return c;
}

}  // namespace

Eigen::MatrixXd chain_matrix(int length) {
  require_length(length);
  const auto d = static_cast<Eigen::Index>(chain_dimension(length));
  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(d, d);
  for (Eigen::Index s = 0; s < d; ++s) {
    for (int site = 0; site + 1 < length; ++site) {
      // site 0 is the most significant bit
      const int hi = length - 1 - site;
      const Eigen::Index mask = (Eigen::Index{1} << hi) | (Eigen::Index{1} << (hi - 1));
      const bool a = (s >> hi) & 1;
      const bool b = (s >> (hi - 1)) & 1;
      if (a == b) {
        h(s, s) += 1.0;
      } else {
        // zz gives -1; xx + yy swaps the antiparallel pair with weight 2
        h(s, s) -= 1.0;
        h(s ^ mask, s) += 2.0;
      }
    }
  }
  return h;
}

Hamiltonian chain_hamiltonian(int length) { return Hamiltonian(chain_matrix(length).cast<std::complex<double>>()); }

const std::vector<double>& chain_energies(int length) {
  require_length(length);
  EnergyCache& c = cache();
  std::lock_guard<std::mutex> lock(c.mutex);
  auto& slot = c.energies[static_cast<std::size_t>(length)];
  if (!slot) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(chain_matrix(length), Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) throw NumericalError("chain diagonalisation did not converge");
    const Eigen::VectorXd& ev = solver.eigenvalues();
    slot = std::make_unique<std::vector<double>>(ev.data(), ev.data() + ev.size());
  }
  return *slot;
}

VarianceCheck variance_check(int length) {
  const Eigen::MatrixXd h = chain_matrix(length);
  return {h.squaredNorm() / static_cast<double>(chain_dimension(length)), 3.0 * (length - 1)};
}

double chain_tau(int length, double temperature) {
  const ThermalSpectrum th = gibbs_spectrum(chain_energies(length), temperature);
  return spectral_set(th.probabilities);
}

std::vector<ChainPoint> tau_vs_temperature(int length, std::span<const double> t_grid) {
  for (std::size_t i = 0; i < t_grid.size(); ++i) {
    if (!(t_grid[i] > 0.0)) throw InvalidArgument("temperatures must be positive");
    if (i > 0 && !(t_grid[i] > t_grid[i - 1])) throw InvalidArgument("temperature grid must be ascending");
  }
  const std::vector<double>& energies = chain_energies(length);
  std::vector<ChainPoint> out(t_grid.size());
  parallel_for(t_grid.size(), [&](std::size_t i) {
    const ThermalSpectrum th = gibbs_spectrum(energies, t_grid[i]);
    out[i] = {t_grid[i], spectral_set(th.probabilities), von_neumann_entropy(th.probabilities)};
  });
  return out;
}

std::size_t ground_degeneracy(int length, double tol) {
  const std::vector<double>& e = chain_energies(length);
  std::size_t g = 0;
  while (g < e.size() && e[g] - e.front() <= tol) ++g;
  return g;
}

std::optional<Plateau> plateau(int length) {
  require_length(length);
  if (length % 2 == 0) return std::nullopt;
  const std::size_t g = ground_degeneracy(length);
  return Plateau{chain_tau(length, kPlateauTemperature), degeneracy_plateau(chain_dimension(length), g)};
}

std::vector<double> slope_grid() {
  std::vector<double> t(91);
  for (std::size_t i = 0; i < t.size(); ++i) t[i] = 10.0 + static_cast<double>(i);
  return t;
}

SlopeFit high_t_slope(int length) {
  require_length(length);
  const std::vector<double> grid = slope_grid();
  double num = 0.0;
  double den = 0.0;
  for (const ChainPoint& p : tau_vs_temperature(length, grid)) {
    num += p.temperature * p.tau;
    den += p.temperature * p.temperature;
  }
  const double states = static_cast<double>(chain_dimension(length)) - 1.0;
  SlopeFit out;
  out.fit = num / den;
  out.theory = std::sqrt(states / (3.0 * (length - 1)));
  out.printed_alternative = std::sqrt(states / std::pow(3.0, length - 1));
  return out;
}

ChainDiagnostics chain_diagnostics(int length) {
  require_length(length);
  ChainDiagnostics d;
  d.length = length;
  d.dimension = chain_dimension(length);
  d.ground_energy = chain_energies(length).front();
  d.ground_degeneracy = ground_degeneracy(length);
  const VarianceCheck v = variance_check(length);
  d.variance = v.numeric;
  d.variance_theory = v.theory;
  const SlopeFit s = high_t_slope(length);
  d.slope_fit = s.fit;
  d.slope_theory = s.theory;
  if (const auto p = plateau(length)) {
    d.plateau_numeric = p->numeric;
    d.plateau_theory = p->theory;
  }
  return d;
}

}  // namespace settherm
