#include <doctest.h>

#include <array>
#include <cmath>

#include "settherm/error.hpp"
#include "settherm/parallel.hpp"
#include "settherm/sampling.hpp"

using namespace settherm;

namespace {

bool same_ips(const std::vector<IndicesOfPurity>& a, const std::vector<IndicesOfPurity>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t n = 0; n < a.size(); ++n) {
    for (std::size_t k = 0; k < a[n].size(); ++k) {
      if (a[n][k] != b[n][k]) return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("IP sphere samples are valid and reproducible") {
  const SamplerConfig cfg{4, 3000, 17, SamplingMethod::ip_sphere};
  const auto a = sample_ips(cfg);
  REQUIRE(a.size() == 3000);
  for (const auto& p : a) {
    for (std::size_t k = 0; k + 1 < p.size(); ++k) CHECK(p[k] <= p[k + 1]);
    CHECK(global_purity_from_ips(p) <= 1.0);
  }
  set_thread_limit(1);
  const auto b = sample_ips(cfg);
  set_thread_limit(3);
  const auto c = sample_ips(cfg);
  set_thread_limit(0);
  CHECK(same_ips(a, b));
  CHECK(same_ips(a, c));
  CHECK_FALSE(same_ips(a, sample_ips({4, 3000, 18, SamplingMethod::ip_sphere})));
}

TEST_CASE("IP sphere: d = 2 index is uniform on [0, 1)") {
  const auto s = sample_ips({2, 100000, 1, SamplingMethod::ip_sphere});
  std::array<int, 10> hist{};
  for (const auto& p : s) hist[static_cast<std::size_t>(p[0] * 10)]++;
  for (int h : hist) CHECK(std::abs(h - 10000) < 600);
}

TEST_CASE("Ginibre states") {
  std::mt19937_64 rng(4);
  const DensityMatrix rho = ginibre_state(3, rng);
  CHECK(std::abs(rho.matrix().trace() - 1.0) < 1e-12);
  CHECK(rho.spectrum()[2] >= 0.0);

  // Hilbert-Schmidt mean purity 2d/(d^2+1) for d = 2
  const auto states = sample_ginibre({2, 200000, 3, SamplingMethod::ginibre});
  double mean = 0.0;
  for (const auto& s : states) mean += purity_gamma(s.spectrum());
  mean /= static_cast<double>(states.size());
  CHECK(mean == doctest::Approx(0.8).epsilon(1e-2));
}

TEST_CASE("uniform-entropy sampler fills the bins evenly") {
  const auto r = sample_uniform_entropy({2, 10000, 2, SamplingMethod::uniform_entropy});
  REQUIRE(r.complete);
  REQUIRE(r.spectra.size() == 10000);
  std::array<int, 10> hist{};
  const double top = std::log(2.0);
  for (const auto& s : r.spectra) {
    const double e = von_neumann_entropy(s);
    hist[std::min<std::size_t>(9, static_cast<std::size_t>(e / top * 10))]++;
  }
  for (int h : hist) CHECK(std::abs(h - 1000) <= 300);

  const auto r4 = sample_uniform_entropy({4, 2000, 2, SamplingMethod::uniform_entropy});
  CHECK(r4.complete);
  const auto again = sample_uniform_entropy({4, 2000, 2, SamplingMethod::uniform_entropy});
  for (std::size_t n = 0; n < r4.spectra.size(); ++n) CHECK(r4.spectra[n][0] == again.spectra[n][0]);
}

TEST_CASE("Haar unitaries") {
  std::mt19937_64 rng(8);
  double mean00 = 0.0;
  double mean_re = 0.0;
  const int n = 50000;
  for (int k = 0; k < n; ++k) {
    const ComplexMatrix u = haar_unitary(3, rng);
    if (k < 100) {
      CHECK((u.adjoint() * u - ComplexMatrix::Identity(3, 3)).norm() < 1e-12);
      CHECK(std::abs(std::abs(u.determinant()) - 1.0) < 1e-12);
    }
    mean00 += std::norm(u(0, 0));
    mean_re += u(1, 2).real();
  }
  CHECK(mean00 / n == doctest::Approx(1.0 / 3).epsilon(2e-2));
  CHECK(std::abs(mean_re / n) < 1e-2);

  std::mt19937_64 r2(9);
  double q = 0.0;
  for (int k = 0; k < n; ++k) q += std::norm(haar_unitary(2, r2)(0, 0));
  CHECK(q / n == doctest::Approx(0.5).epsilon(1e-2));

  CHECK((haar_unitary(4, 77) - haar_unitary(4, 77)).norm() == 0.0);
}

TEST_CASE("PSA spectra") {
  const Spectrum flat = psa_spectrum(PsaParams::equispaced(2, 0.0));
  CHECK(flat[0] == 0.5);

  const Spectrum s = psa_spectrum(PsaParams::equispaced(3, 1.0));
  const double z = 1 + std::exp(-1.0) + std::exp(-2.0);
  CHECK(s[0] == doctest::Approx(1 / z).epsilon(1e-14));
  CHECK(s[1] == doctest::Approx(std::exp(-1.0) / z).epsilon(1e-14));
  CHECK(s[2] == doctest::Approx(std::exp(-2.0) / z).epsilon(1e-14));
  CHECK(s[0] == doctest::Approx(0.665241).epsilon(1e-6));
  CHECK(s[1] == doctest::Approx(0.244728).epsilon(1e-5));
  CHECK(s[2] == doctest::Approx(0.090031).epsilon(1e-5));

  const Spectrum frozen = psa_spectrum({{0.0, 0.0, 1.0}, INFINITY});
  CHECK(frozen[0] == 0.5);
  CHECK(frozen[1] == 0.5);

  const Spectrum big = psa_spectrum({{0.0, 1.0}, 1000.0});
  CHECK(big[1] == doctest::Approx(std::exp(-1000.0)));

  CHECK_THROWS_AS(psa_spectrum({{0.0, 1.0}, -1.0}), InvalidArgument);
  CHECK_THROWS_AS(psa_spectrum({{0.0}, 1.0}), InvalidArgument);
}

TEST_CASE("PSA path runs from the mixed state towards the ground level") {
  for (std::size_t d : {2, 3, 4}) {
    const std::vector<double> grid{0.0, 0.1, 0.5, 1.0, 3.0, 10.0};
    const auto path = psa_curve(PsaParams::equispaced(d), grid);
    CHECK(std::isinf(path.front().tau));
    CHECK(path.front().entropy == doctest::Approx(std::log(static_cast<double>(d))));
    for (std::size_t n = 1; n < path.size(); ++n) {
      CHECK(path[n].tau < path[n - 1].tau);
      CHECK(path[n].entropy < path[n - 1].entropy);
    }
  }
  const std::vector<double> bad{0.0, 1.0, 1.0};
  CHECK_THROWS_AS(psa_curve(PsaParams::equispaced(3), bad), InvalidArgument);
}
