#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "oracles.hpp"
#include "settherm/error.hpp"
#include "settherm/heisenberg.hpp"

using namespace settherm;

TEST_CASE("bit-flip builder matches the Kronecker construction") {
  for (int L = 2; L <= 7; ++L) {
    const oracle::Matrix ref = oracle::heisenberg_kron(L);
    const Eigen::MatrixXd h = chain_matrix(L);
    CHECK(ref.imag().norm() == 0.0);
    CHECK((ref.real() - h).norm() == 0.0);
  }
  CHECK_THROWS_AS(chain_matrix(1), InvalidArgument);
  CHECK_THROWS_AS(chain_matrix(10), InvalidArgument);
}

TEST_CASE("two-site spectrum is singlet plus triplet") {
  const auto& e = chain_energies(2);
  REQUIRE(e.size() == 4);
  CHECK(e[0] == doctest::Approx(-3.0));
  for (int k = 1; k < 4; ++k) CHECK(e[k] == doctest::Approx(1.0));
  CHECK(ground_degeneracy(2) == 1);
}

TEST_CASE("chain energies against a dense complex solve") {
  for (int L = 3; L <= 6; ++L) {
    Eigen::SelfAdjointEigenSolver<oracle::Matrix> es(oracle::heisenberg_kron(L), Eigen::EigenvaluesOnly);
    const auto& e = chain_energies(L);
    for (Eigen::Index k = 0; k < es.eigenvalues().size(); ++k) {
      CHECK(std::abs(es.eigenvalues()(k) - e[static_cast<std::size_t>(k)]) < 1e-10);
    }
    double sum = 0.0;
    for (double x : e) sum += x;
    CHECK(std::abs(sum) < 1e-9);
  }
}

TEST_CASE("ground degeneracy follows parity") {
  for (int L = 2; L <= 9; ++L) CHECK(ground_degeneracy(L) == (L % 2 ? 2u : 1u));
}

TEST_CASE("variance identity") {
  for (int L = 2; L <= 6; ++L) {
    const VarianceCheck v = variance_check(L);
    CHECK(v.theory == 3.0 * (L - 1));
    CHECK(std::abs(v.numeric - v.theory) < 1e-9);
  }
}

TEST_CASE("plateaus") {
  const auto p3 = plateau(3);
  REQUIRE(p3.has_value());
  CHECK(p3->theory == doctest::Approx(1.0 / std::atanh(std::sqrt(3.0 / 7.0))));
  CHECK(p3->numeric == doctest::Approx(p3->theory).epsilon(1e-10));
  CHECK(std::abs(p3->numeric - 1.2764) < 1e-4);
  CHECK_FALSE(plateau(4).has_value());
  CHECK(chain_tau(4, 1e-3) < 1e-2);
  CHECK(chain_tau(3, 1e6) > 1e3);
}

TEST_CASE("tau grows with temperature") {
  std::vector<double> grid;
  for (int k = 0; k < 60; ++k) grid.push_back(std::pow(10.0, -3.0 + 5.0 * k / 59.0));
  for (int L : {2, 3, 5}) {
    const auto pts = tau_vs_temperature(L, grid);
    REQUIRE(pts.size() == grid.size());
    for (std::size_t n = 1; n < pts.size(); ++n) {
      CHECK(pts[n].tau >= pts[n - 1].tau * (1 - 1e-12));
      CHECK(pts[n].entropy >= pts[n - 1].entropy - 1e-14);
    }
    CHECK(pts.back().entropy <= L * std::log(2.0));
  }
  const std::vector<double> bad{1.0, 0.5};
  CHECK_THROWS_AS(tau_vs_temperature(3, bad), InvalidArgument);
}

TEST_CASE("high-temperature slope") {
  const auto grid = slope_grid();
  CHECK(grid.size() == 91);
  CHECK(grid.front() == 10.0);
  CHECK(grid.back() == 100.0);

  CHECK(high_t_slope(2).theory == doctest::Approx(1.0));
  CHECK(high_t_slope(3).theory == doctest::Approx(std::sqrt(7.0 / 6.0)));
  double prev = 0.0;
  for (int L = 2; L <= 6; ++L) {
    const SlopeFit f = high_t_slope(L);
    CHECK(std::abs(f.fit / f.theory - 1.0) < 0.02);
    CHECK(f.fit > prev);
    prev = f.fit;
  }
}

TEST_CASE("diagnostics bundle") {
  const ChainDiagnostics d = chain_diagnostics(3);
  CHECK(d.dimension == 8);
  CHECK(d.ground_energy == doctest::Approx(-4.0));
  CHECK(d.ground_degeneracy == 2);
  CHECK(d.plateau_numeric.has_value());
  CHECK_FALSE(chain_diagnostics(2).plateau_theory.has_value());
}
