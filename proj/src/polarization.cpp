#include "settherm/polarization.hpp"

#include <algorithm>
#include <complex>

#include <json.hpp>

#include "settherm/error.hpp"

namespace settherm {

CharacteristicDecomposition characteristic_decomposition(const DensityMatrix& rho) {
  if (rho.dimension() != 3) throw InvalidArgument("characteristic decomposition needs a 3x3 density matrix");
  const EigenDecomposition eig = eigendecompose(rho.matrix());
  const ComplexMatrix& u = eig.eigenvectors;
  const IndicesOfPurity ips = indices_of_purity(rho.spectrum());

  CharacteristicDecomposition dec;
  dec.pure_part = u.col(0) * u.col(0).adjoint();
  dec.discriminating_part = 0.5 * (u.col(0) * u.col(0).adjoint() + u.col(1) * u.col(1).adjoint());
  dec.unpolarized_part = ComplexMatrix::Identity(3, 3) / 3.0;
  dec.weights = {ips[0], ips[1] - ips[0], 1.0 - ips[1]};

  const Eigen::MatrixXd re = dec.discriminating_part.real();
  const Eigen::JacobiSVD<Eigen::MatrixXd> svd(re);
  const Eigen::VectorXd sv = svd.singularValues();
  int rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i) {
    if (sv(i) > kRankThreshold) ++rank;
    if (sv(i) > kRankThreshold / 10.0 && sv(i) < kRankThreshold * 10.0) dec.rank_borderline = true;
  }
  dec.discriminating_real_rank = rank;
  return dec;
}

ComplexMatrix reconstruct(const CharacteristicDecomposition& dec) {
  return dec.weights[0] * dec.pure_part + dec.weights[1] * dec.discriminating_part +
         dec.weights[2] * dec.unpolarized_part;
}

Regularity classify_regularity(const CharacteristicDecomposition& dec) {
  if (dec.weights[1] < kRankThreshold) return Regularity::no_discriminating_component;
  return dec.discriminating_real_rank == 2 ? Regularity::regular : Regularity::nonregular;
}

const char* regularity_name(Regularity r) {
  switch (r) {
    case Regularity::regular:
      return "regular";
    case Regularity::nonregular:
      return "nonregular";
    case Regularity::no_discriminating_component:
      return "no discriminating component";
  }
  return "unknown";
}

std::string polarization_report_json(const CharacteristicDecomposition& dec) {
  nlohmann::ordered_json j;
  j["weights"] = dec.weights;
  j["m"] = dec.discriminating_real_rank;
  j["borderline"] = dec.rank_borderline;
  j["label"] = regularity_name(classify_regularity(dec));
  return j.dump(2);
}

}  // namespace settherm
