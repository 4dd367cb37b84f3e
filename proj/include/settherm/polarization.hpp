#pragma once

// Characteristic decomposition of 3x3 polarization density matrices:
//   rho = P1 rho_p + (P2 - P1) rho_m + (1 - P2) I/3.

#include <array>
#include <string>

#include "settherm/states.hpp"

namespace settherm {

struct CharacteristicDecomposition {
  ComplexMatrix pure_part;            // U diag(1,0,0) U^dagger
  ComplexMatrix discriminating_part;  // U diag(1,1,0) U^dagger / 2
  ComplexMatrix unpolarized_part;     // I / 3
  std::array<double, 3> weights{};    // P1, P2 - P1, 1 - P2
  int discriminating_real_rank = 2;   // rank of Re(rho_m)
  bool rank_borderline = false;       // a singular value within 10x of the threshold
};

inline constexpr double kRankThreshold = 1e-9;

/// Throws InvalidArgument unless rho is 3x3.
CharacteristicDecomposition characteristic_decomposition(const DensityMatrix& rho);

/// Weighted sum of the three parts.
ComplexMatrix reconstruct(const CharacteristicDecomposition& dec);

enum class Regularity { regular, nonregular, no_discriminating_component };

/// Weight P2 - P1 below kRankThreshold means rho_m does not contribute and
/// no classification is made.
Regularity classify_regularity(const CharacteristicDecomposition& dec);

const char* regularity_name(Regularity r);

/// {"weights": [...], "m": .., "borderline": .., "label": ".."}.
std::string polarization_report_json(const CharacteristicDecomposition& dec);

}  // namespace settherm
