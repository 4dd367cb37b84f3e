#include "settherm/matrix_io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "settherm/error.hpp"

namespace settherm {

namespace {

using json = nlohmann::json;

void fill_part(const json& rows, Eigen::Index d, const char* key, ComplexMatrix& out, bool imaginary) {
  if (!rows.is_array() || static_cast<Eigen::Index>(rows.size()) != d) {
    std::ostringstream msg;
    msg << "matrix field \"" << key << "\" must be an array of " << d << " rows";
    throw InputError(msg.str());
  }
  for (Eigen::Index r = 0; r < d; ++r) {
    const json& row = rows[static_cast<std::size_t>(r)];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != d) {
      std::ostringstream msg;
      msg << "row " << r << " of \"" << key << "\" must have " << d << " entries";
      throw InputError(msg.str());
    }
    for (Eigen::Index c = 0; c < d; ++c) {
      const json& v = row[static_cast<std::size_t>(c)];
      if (!v.is_number()) {
        std::ostringstream msg;
        msg << "entry (" << r << ", " << c << ") of \"" << key << "\" is not a number";
        throw InputError(msg.str());
      }
      const double x = v.get<double>();
      if (!std::isfinite(x)) throw InputError("matrix entries must be finite");
      if (imaginary) {
        out(r, c).imag(x);
      } else {
        out(r, c).real(x);
      }
    }
  }
}

}  // namespace

ComplexMatrix parse_matrix_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("malformed matrix JSON: ") + e.what());
  }
  if (!doc.is_object()) throw InputError("matrix JSON must be an object");
  if (!doc.contains("d") || !doc["d"].is_number_integer()) {
    throw InputError("matrix JSON needs an integer field \"d\"");
  }
  const auto d = doc["d"].get<long long>();
  if (d < 1 || d > 4096) throw InputError("matrix dimension \"d\" out of range");
  if (!doc.contains("re")) throw InputError("matrix JSON needs field \"re\"");
  const auto n = static_cast<Eigen::Index>(d);
  ComplexMatrix m = ComplexMatrix::Zero(n, n);
  fill_part(doc["re"], n, "re", m, false);
  if (doc.contains("im")) fill_part(doc["im"], n, "im", m, true);
  return m;
}

ComplexMatrix load_matrix_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open matrix file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_matrix_json(buf.str());
}

DensityMatrix load_density_matrix(const std::filesystem::path& path) {
  ComplexMatrix m = load_matrix_json(path);
  try {
    return DensityMatrix(std::move(m));
  } catch (const InvalidArgument& e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

Hamiltonian load_hamiltonian(const std::filesystem::path& path) {
  ComplexMatrix m = load_matrix_json(path);
  try {
    return Hamiltonian(std::move(m));
  } catch (const InvalidArgument& e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

std::string matrix_to_json(const ComplexMatrix& m) {
  json re = json::array();
  json im = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json rr = json::array();
    json ri = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      rr.push_back(m(r, c).real());
      ri.push_back(m(r, c).imag());
    }
    re.push_back(std::move(rr));
    im.push_back(std::move(ri));
  }
  json doc = {{"d", m.rows()}, {"re", std::move(re)}, {"im", std::move(im)}};
  return doc.dump();
}

}  // namespace settherm
