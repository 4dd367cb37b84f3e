#pragma once

// JSON matrix format: { "d": n, "re": [[...]], "im": [[...]] }.
// "im" may be omitted for real matrices. All failures throw InputError.

#include <filesystem>
#include <string>
#include <string_view>

#include "settherm/states.hpp"

namespace settherm {

ComplexMatrix parse_matrix_json(std::string_view text);
ComplexMatrix load_matrix_json(const std::filesystem::path& path);

DensityMatrix load_density_matrix(const std::filesystem::path& path);
Hamiltonian load_hamiltonian(const std::filesystem::path& path);

std::string matrix_to_json(const ComplexMatrix& m);

}  // namespace settherm
