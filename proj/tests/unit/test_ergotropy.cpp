#include <doctest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "settherm/error.hpp"
#include "settherm/ergotropy.hpp"
#include "settherm/sampling.hpp"

using namespace settherm;

TEST_CASE("passive state and ergotropy of a diagonal qubit") {
  const std::vector<double> e{0.0, 1.0};
  const Hamiltonian h = Hamiltonian::diagonal(e);
  const std::vector<double> pop{0.3, 0.7};
  const DensityMatrix rho = DensityMatrix::diagonal(pop);
  const PassiveState ps = passive_state(rho, h);
  CHECK(ps.state.matrix()(0, 0).real() == doctest::Approx(0.7));
  CHECK_FALSE(ps.degenerate_hamiltonian);
  CHECK(ergotropy(rho, h) == doctest::Approx(0.4));

  const std::vector<double> flat{0.0, 0.0};
  CHECK(passive_state(rho, Hamiltonian::diagonal(flat)).degenerate_hamiltonian);
  CHECK(ergotropy(DensityMatrix::maximally_mixed(2), h) == 0.0);
}

TEST_CASE("anti-aligned arrangement is the brute-force maximum") {
  std::mt19937_64 rng(21);
  for (std::size_t d = 2; d <= 5; ++d) {
    std::vector<double> energies(d);
    for (std::size_t i = 0; i < d; ++i) energies[i] = static_cast<double>(i * i) * 0.7 + 0.1 * i;
    for (int n = 0; n < 20; ++n) {
      const auto l = oracle::random_spectrum(d, rng);
      CHECK(anti_aligned_ergotropy(Spectrum(l), energies) ==
            doctest::Approx(oracle::max_diagonal_work(l, energies)).epsilon(1e-12));
    }
  }
}

TEST_CASE("ergotropy of rotated states never exceeds the anti-aligned value") {
  std::mt19937_64 rng(22);
  const std::vector<double> e{0.0, 3.75, 7.32, 9.51};
  const Hamiltonian h = Hamiltonian::diagonal(e);
  for (int n = 0; n < 300; ++n) {
    const Spectrum s(oracle::random_spectrum(4, rng));
    const DensityMatrix rho = DensityMatrix::from_spectrum(s, haar_unitary(4, rng));
    const double w = ergotropy(rho, h);
    CHECK(w >= 0.0);
    CHECK(w <= anti_aligned_ergotropy(s, e) + 1e-12);
    // ergotropy is invariant under shifting all energies
    const std::vector<double> shifted{5.0, 8.75, 12.32, 14.51};
    CHECK(ergotropy(rho, Hamiltonian::diagonal(shifted)) == doctest::Approx(w).epsilon(1e-10));
  }
}

TEST_CASE("structured states") {
  const StructuredState s = StructuredState::from_lambda1(4, 0.7);
  CHECK(s.lambda_e == doctest::Approx(0.1));
  CHECK(s.p_e == doctest::Approx(0.6));
  const StructuredState back = StructuredState::from_pe(4, 0.6);
  CHECK(back.lambda1 == doctest::Approx(0.7));

  CHECK(structured_ergotropy(4, 1.0, 9.51) == doctest::Approx(9.51));
  CHECK(structured_ergotropy(4, 0.4, 9.51) == doctest::Approx(1.902));
  CHECK(structured_ergotropy(4, 0.25, 9.51) == 0.0);
  CHECK(structured_ergotropy(2, 0.7, 3.86) == doctest::Approx(1.544));

  // anti-aligned structured state: intermediate levels do not matter
  for (const auto& e : {std::vector<double>{0, 3.75, 7.32, 9.51}, std::vector<double>{0, 1.0, 2.0, 9.51}}) {
    CHECK(anti_aligned_ergotropy(structured_spectrum(4, 0.7), e) ==
          doctest::Approx(structured_ergotropy(4, 0.7, 9.51)).epsilon(1e-12));
  }

  for (std::size_t d = 2; d <= 8; ++d) {
    for (double pe : {0.0, 0.2, 0.6, 0.95, 1.0}) {
      const Spectrum sp = structured_spectrum(d, StructuredState::from_pe(d, pe).lambda1);
      CHECK(structured_entropy(d, pe) == doctest::Approx(oracle::shannon({sp.values().begin(), sp.values().end()})).epsilon(1e-12));
      CHECK(global_purity(sp) == doctest::Approx(pe).epsilon(1e-12));
    }
  }
  CHECK(structured_entropy(4, 0.6) == doctest::Approx(0.940).epsilon(1e-3));
  CHECK(structured_set(4, std::tanh(1.0)) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(std::isinf(structured_set(4, 0.0)));
  CHECK(structured_set(4, 1.0) == 0.0);
}

TEST_CASE("structured bounds invert the curve") {
  for (std::size_t d : {2, 3, 4}) {
    for (double pe : {0.05, 0.3, 0.8, 0.999}) {
      const double s = structured_entropy(d, pe);
      CHECK(structured_bound_at_entropy(d, s, 9.51) == doctest::Approx(9.51 * pe).epsilon(1e-10));
      CHECK(structured_bound_at_set(d, structured_set(d, pe), 9.51) == doctest::Approx(9.51 * pe).epsilon(1e-12));
    }
    CHECK(structured_bound_at_entropy(d, 0.0, 2.0) == doctest::Approx(2.0));
    CHECK(structured_bound_at_entropy(d, std::log(static_cast<double>(d)), 2.0) == doctest::Approx(0.0));
    CHECK(structured_bound_at_set(d, INFINITY, 2.0) == 0.0);
  }
  CHECK_THROWS_AS(structured_bound_at_entropy(3, 2.0, 1.0), InvalidArgument);

  const auto curve = structured_bound_curve(4, 9.51, 11);
  REQUIRE(curve.size() == 11);
  CHECK(curve.front().p_e == 0.0);
  CHECK(curve.back().work == doctest::Approx(9.51));
  for (std::size_t n = 1; n < curve.size(); ++n) CHECK(curve[n].work > curve[n - 1].work);
}

TEST_CASE("qubit scatter sits on the structured curve") {
  // every qubit spectrum is structured, so W <= bound with equality only
  // for the anti-aligned diagonal state
  const std::vector<double> e{0.0, 3.86};
  const Hamiltonian h = Hamiltonian::diagonal(e);
  const auto recs = ergotropy_scatter(ScatterConfig{2000, 5, 0.5}, h);
  REQUIRE(recs.size() == 2000);
  for (const auto& r : recs) {
    CHECK(r.work <= structured_bound_at_entropy(2, r.entropy, 3.86) + 1e-9);
    CHECK(r.work <= structured_bound_at_set(2, r.tau, 3.86) + 1e-9);
    CHECK(r.coherence >= 0.0);
  }
  const auto again = ergotropy_scatter(ScatterConfig{2000, 5, 0.5}, h);
  CHECK(again[1999].work == recs[1999].work);
}

TEST_CASE("scatter inputs") {
  const std::vector<Spectrum> mixed(3, Spectrum::uniform(3));
  const std::vector<double> e{0.0, 1.0, 2.0};
  for (const auto& r : ergotropy_scatter(mixed, Hamiltonian::diagonal(e), 1)) {
    CHECK(r.work < 1e-12);
    CHECK(r.coherence < 1e-12);
    CHECK(std::isinf(r.tau));
  }
  const std::vector<double> degenerate{0.0, 1.0, 1.0};
  CHECK_THROWS_AS(ergotropy_scatter(mixed, Hamiltonian::diagonal(degenerate), 1), InvalidArgument);
  ComplexMatrix offdiag(2, 2);
  offdiag << 0, 1, 1, 0;
  CHECK_THROWS_AS(ergotropy_scatter(ScatterConfig{4, 1, 0.5}, Hamiltonian(offdiag)), InvalidArgument);
}
