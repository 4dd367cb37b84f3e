#include "settherm/settherm.h"

#include <cmath>
#include <cstring>
#include <fstream>
#include <new>
#include <optional>
#include <string>
#include <vector>

#include "settherm/diagrams.hpp"
#include "settherm/ergotropy.hpp"
#include "settherm/error.hpp"
#include "settherm/heisenberg.hpp"
#include "settherm/matrix_io.hpp"
#include "settherm/parallel.hpp"
#include "settherm/polarization.hpp"
#include "settherm/sampling.hpp"
#include "settherm/table.hpp"

struct st_table {
  settherm::Table table;
};

struct st_matrix {
  settherm::ComplexMatrix m;
};

namespace {

using namespace settherm;

thread_local std::string g_last_error;

struct IoFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

template <typename F>
st_status guarded(F&& f) {
  g_last_error.clear();
  try {
    f();
    return ST_OK;
  } catch (const InvalidArgument& e) {
    g_last_error = e.what();
    return ST_INVALID_ARGUMENT;
  } catch (const InputError& e) {
    g_last_error = e.what();
    return ST_INVALID_INPUT;
  } catch (const NumericalError& e) {
    g_last_error = e.what();
    return ST_NUMERICAL;
  } catch (const IoFailure& e) {
    g_last_error = e.what();
    return ST_IO;
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return ST_NUMERICAL;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return ST_NUMERICAL;
  } catch (...) {
    g_last_error = "unknown error";
    return ST_NUMERICAL;
  }
}

#define ST_REQUIRE(p)                                          \
  do {                                                         \
    if ((p) == nullptr) {                                      \
      g_last_error = "null pointer argument: " #p;             \
      return ST_NULL_POINTER;                                  \
    }                                                          \
  } while (0)

void write_file(const char* path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoFailure(std::string("cannot open ") + path + " for writing");
  out << text;
  out.flush();
  if (!out) throw IoFailure(std::string("failed writing ") + path);
}

void fill_summary(const SpectralSummary& s, std::size_t d, st_summary* out) {
  out->dimension = d;
  out->gamma = s.gamma;
  out->p_global = s.p_global;
  out->p_pairwise = s.p_pairwise;
  out->tau = s.tau;
  out->beta = s.beta;
  out->entropy = s.entropy;
  out->bipartite_entropy = s.bipartite_entropy;
}

DensityMatrix as_density(const st_matrix* m) {
  try {
    return DensityMatrix(m->m);
  } catch (const InvalidArgument& e) {
    throw InputError(std::string("not a density matrix: ") + e.what());
  }
}

std::vector<std::string> ip_columns(std::size_t d) {
  std::vector<std::string> cols;
  for (std::size_t k = 1; k < d; ++k) cols.push_back("P" + std::to_string(k));
  return cols;
}

st_table* wrap(Table t) { return new st_table{std::move(t)}; }

void copy_out(const std::string& text, char* buf, size_t cap, size_t* needed) {
  if (needed) *needed = text.size() + 1;
  if (buf == nullptr && cap == 0) return;
  if (buf == nullptr || cap < text.size() + 1) throw InvalidArgument("output buffer too small");
  std::memcpy(buf, text.c_str(), text.size() + 1);
}

}  // namespace

extern "C" {

const char* st_version(void) { return "0.1.0"; }

const char* st_status_string(st_status s) {
  switch (s) {
    case ST_OK:
      return "ok";
    case ST_INVALID_ARGUMENT:
      return "invalid argument";
    case ST_INVALID_INPUT:
      return "invalid input";
    case ST_NUMERICAL:
      return "numerical failure";
    case ST_IO:
      return "i/o failure";
    case ST_NULL_POINTER:
      return "null pointer";
  }
  return "unknown status";
}

const char* st_last_error(void) { return g_last_error.c_str(); }

st_status st_set_thread_limit(size_t n) {
  return guarded([&] { set_thread_limit(n); });
}

void st_table_free(st_table* t) { delete t; }

size_t st_table_rows(const st_table* t) { return t ? t->table.rows() : 0; }

size_t st_table_cols(const st_table* t) { return t ? t->table.cols() : 0; }

const char* st_table_column(const st_table* t, size_t col) {
  if (!t || col >= t->table.cols()) return nullptr;
  return t->table.columns()[col].c_str();
}

const char* st_table_label(const st_table* t, size_t row) {
  if (!t || !t->table.has_labels() || row >= t->table.rows()) return nullptr;
  return t->table.label(row).c_str();
}

st_status st_table_value(const st_table* t, size_t row, size_t col, double* out) {
  ST_REQUIRE(t);
  ST_REQUIRE(out);
  return guarded([&] {
    if (row >= t->table.rows() || col >= t->table.cols()) throw InvalidArgument("table index out of range");
    *out = t->table.value(row, col);
  });
}

st_status st_table_format_csv(const st_table* t, char* buf, size_t cap, size_t* needed) {
  ST_REQUIRE(t);
  return guarded([&] { copy_out(t->table.to_csv(), buf, cap, needed); });
}

st_status st_table_format_json(const st_table* t, char* buf, size_t cap, size_t* needed) {
  ST_REQUIRE(t);
  return guarded([&] { copy_out(t->table.to_json().dump(1) + "\n", buf, cap, needed); });
}

st_status st_table_write_csv(const st_table* t, const char* path) {
  ST_REQUIRE(t);
  ST_REQUIRE(path);
  return guarded([&] { write_file(path, t->table.to_csv()); });
}

st_status st_table_write_json(const st_table* t, const char* path) {
  ST_REQUIRE(t);
  ST_REQUIRE(path);
  return guarded([&] { write_file(path, t->table.to_json().dump(1) + "\n"); });
}

st_status st_tables_write_json(const st_table* const* tables, const char* const* names, size_t count,
                               const char* path) {
  ST_REQUIRE(tables);
  ST_REQUIRE(names);
  ST_REQUIRE(path);
  return guarded([&] {
    nlohmann::ordered_json doc = nlohmann::ordered_json::object();
    for (size_t i = 0; i < count; ++i) {
      if (!tables[i] || !names[i]) throw InvalidArgument("null table or name");
      doc[names[i]] = tables[i]->table.to_json();
    }
    write_file(path, doc.dump(1) + "\n");
  });
}

st_status st_spectrum_summary(const double* spectrum, size_t d, st_summary* out) {
  ST_REQUIRE(spectrum);
  ST_REQUIRE(out);
  return guarded([&] {
    const Spectrum s(std::vector<double>(spectrum, spectrum + d));
    fill_summary(summarize(s), d, out);
  });
}

st_status st_indices_of_purity(const double* spectrum, size_t d, double* ips_out) {
  ST_REQUIRE(spectrum);
  ST_REQUIRE(ips_out);
  return guarded([&] {
    const IndicesOfPurity p = indices_of_purity(Spectrum(std::vector<double>(spectrum, spectrum + d)));
    for (std::size_t k = 0; k < p.size(); ++k) ips_out[k] = p[k];
  });
}

st_status st_spectrum_from_ips(const double* ips, size_t d, double* spectrum_out) {
  ST_REQUIRE(ips);
  ST_REQUIRE(spectrum_out);
  return guarded([&] {
    if (d < 2) throw InvalidArgument("dimension must be at least 2");
    const Spectrum s = spectrum_from_ips(IndicesOfPurity(std::vector<double>(ips, ips + d - 1)));
    for (std::size_t i = 0; i < d; ++i) spectrum_out[i] = s[i];
  });
}

st_status st_set_temperature(double p_d, double* tau_out) {
  ST_REQUIRE(tau_out);
  return guarded([&] { *tau_out = set_temperature(p_d); });
}

st_status st_matrix_load(const char* path, st_matrix** out) {
  ST_REQUIRE(path);
  ST_REQUIRE(out);
  *out = nullptr;
  return guarded([&] { *out = new st_matrix{load_matrix_json(path)}; });
}

st_status st_matrix_create(size_t d, const double* re, const double* im, st_matrix** out) {
  ST_REQUIRE(re);
  ST_REQUIRE(out);
  *out = nullptr;
  return guarded([&] {
    if (d < 1) throw InvalidArgument("matrix dimension must be positive");
    const auto n = static_cast<Eigen::Index>(d);
    ComplexMatrix m(n, n);
    for (Eigen::Index r = 0; r < n; ++r) {
      for (Eigen::Index c = 0; c < n; ++c) {
        const std::size_t k = static_cast<std::size_t>(r) * d + static_cast<std::size_t>(c);
        m(r, c) = {re[k], im ? im[k] : 0.0};
      }
    }
    *out = new st_matrix{std::move(m)};
  });
}

void st_matrix_free(st_matrix* m) { delete m; }

size_t st_matrix_dimension(const st_matrix* m) { return m ? static_cast<size_t>(m->m.rows()) : 0; }

st_status st_matrix_summary(const st_matrix* m, st_summary* out) {
  ST_REQUIRE(m);
  ST_REQUIRE(out);
  return guarded([&] {
    const DensityMatrix rho = as_density(m);
    fill_summary(spectral_summary(rho), rho.dimension(), out);
  });
}

st_status st_polarization_report(const st_matrix* m, st_polarization* out) {
  ST_REQUIRE(m);
  ST_REQUIRE(out);
  return guarded([&] {
    const DensityMatrix rho = as_density(m);
    const CharacteristicDecomposition dec = characteristic_decomposition(rho);
    for (int i = 0; i < 3; ++i) out->weights[i] = dec.weights[static_cast<std::size_t>(i)];
    out->real_rank = dec.discriminating_real_rank;
    out->borderline = dec.rank_borderline ? 1 : 0;
    switch (classify_regularity(dec)) {
      case Regularity::regular:
        out->regularity = ST_REGULAR;
        break;
      case Regularity::nonregular:
        out->regularity = ST_NONREGULAR;
        break;
      case Regularity::no_discriminating_component:
        out->regularity = ST_NO_DISCRIMINATING_COMPONENT;
        break;
    }
  });
}

const char* st_regularity_name(st_regularity r) {
  switch (r) {
    case ST_REGULAR:
      return regularity_name(Regularity::regular);
    case ST_NONREGULAR:
      return regularity_name(Regularity::nonregular);
    case ST_NO_DISCRIMINATING_COMPONENT:
      return regularity_name(Regularity::no_discriminating_component);
  }
  return "unknown";
}

st_status st_diagram_curves(size_t d, size_t resolution, double tau_max, st_table** out) {
  ST_REQUIRE(out);
  *out = nullptr;
  return guarded([&] {
    Table t({"t", "tau", "entropy"}, "curve_label");
    for (const DiagramCurve& c : boundary_curves(d, resolution, tau_max)) {
      for (const CurvePoint& p : c.points) t.add_row({p.t, p.tau, p.entropy}, c.label);
    }
    *out = wrap(std::move(t));
  });
}

st_status st_diagram_cusps(size_t d, st_table** out) {
  ST_REQUIRE(out);
  *out = nullptr;
  return guarded([&] {
    Table t({"k", "tau", "entropy"});
    for (const CuspPoint& c : cusp_points(d)) t.add_row({static_cast<double>(c.k), c.tau, c.entropy});
    *out = wrap(std::move(t));
  });
}

st_status st_diagram_cloud(size_t d, size_t count, uint64_t seed, st_table** out) {
  ST_REQUIRE(out);
  *out = nullptr;
  return guarded([&] {
    std::vector<std::string> cols{"tau", "entropy"};
    for (auto& c : ip_columns(d)) cols.push_back(std::move(c));
    Table t(std::move(cols));
    for (CloudPoint& p : diagram_cloud(d, count, seed)) {
      std::vector<double> row{p.tau, p.entropy};
      row.insert(row.end(), p.ips.begin(), p.ips.end());
      t.add_row(std::move(row));
    }
    *out = wrap(std::move(t));
  });
}

st_status st_psa_path(size_t d, const double* alphas, size_t points, st_table** out) {
  ST_REQUIRE(out);
  *out = nullptr;
  return guarded([&] {
    PsaParams p = PsaParams::equispaced(d);
    if (alphas) p.alphas.assign(alphas, alphas + d);
    const std::vector<double> grid = default_zeta_grid(points);
    Table t({"zeta", "tau", "entropy"});
    for (const PsaPoint& q : psa_curve(p, grid)) t.add_row({q.zeta, q.tau, q.entropy});
    *out = wrap(std::move(t));
  });
}

st_status st_thermal_curve(const double* energies, size_t d, const double* temperatures, size_t n,
                           st_table** out) {
  ST_REQUIRE(energies);
  ST_REQUIRE(temperatures);
  ST_REQUIRE(out);
  *out = nullptr;
  return guarded([&] {
    const std::vector<double> e(energies, energies + d);
    const std::vector<double> temps(temperatures, temperatures + n);
    Table t({"T", "entropy", "tau"});
    for (const ThermalPoint& p : thermal_entropy_curve(e, temps)) t.add_row({p.temperature, p.entropy, p.tau});
    *out = wrap(std::move(t));
  });
}

st_status st_envelope_contains(size_t d, double tau, double entropy, double tol, int* contained,
                               int* extrapolated) {
  ST_REQUIRE(contained);
  return guarded([&] {
    const std::vector<DiagramCurve> curves = boundary_curves(d, 512);
    const EnvelopeCheck c = envelope_contains(d, tau, entropy, curves, tol);
    *contained = c.contained ? 1 : 0;
    if (extrapolated) *extrapolated = c.extrapolated ? 1 : 0;
  });
}

st_status st_heisenberg_curve(int length, const double* temperatures, size_t n, st_table** out) {
  ST_REQUIRE(temperatures);
  ST_REQUIRE(out);
  *out = nullptr;
  return guarded([&] {
    const std::vector<double> temps(temperatures, temperatures + n);
    Table t({"T", "tau", "entropy"});
    for (const ChainPoint& p : tau_vs_temperature(length, temps)) t.add_row({p.temperature, p.tau, p.entropy});
    *out = wrap(std::move(t));
  });
}

st_status st_heisenberg_diagnostics(int length, st_chain_diagnostics* out) {
  ST_REQUIRE(out);
  return guarded([&] {
    const ChainDiagnostics d = chain_diagnostics(length);
    out->length = d.length;
    out->dimension = d.dimension;
    out->ground_energy = d.ground_energy;
    out->ground_degeneracy = d.ground_degeneracy;
    out->variance = d.variance;
    out->variance_theory = d.variance_theory;
    out->slope_fit = d.slope_fit;
    out->slope_theory = d.slope_theory;
    out->has_plateau = d.plateau_numeric.has_value() ? 1 : 0;
    out->plateau_numeric = d.plateau_numeric.value_or(std::nan(""));
    out->plateau_theory = d.plateau_theory.value_or(std::nan(""));
  });
}

st_status st_ergotropy_scatter(const double* energies, size_t d, size_t count, uint64_t seed,
                               double ginibre_fraction, st_table** out) {
  ST_REQUIRE(energies);
  ST_REQUIRE(out);
  *out = nullptr;
  return guarded([&] {
    const Hamiltonian h = Hamiltonian::diagonal(std::vector<double>(energies, energies + d));
    ScatterConfig cfg;
    cfg.count = count;
    cfg.seed = seed;
    cfg.ginibre_fraction = ginibre_fraction;
    Table t({"lambda_max", "work", "entropy", "tau", "coherence"});
    for (const ErgotropyRecord& r : ergotropy_scatter(cfg, h)) {
      t.add_row({r.lambda_max, r.work, r.entropy, r.tau, r.coherence});
    }
    *out = wrap(std::move(t));
  });
}

st_status st_ergotropy_bound(const double* energies, size_t d, size_t points, st_table** out) {
  ST_REQUIRE(energies);
  ST_REQUIRE(out);
  *out = nullptr;
  return guarded([&] {
    const Hamiltonian h = Hamiltonian::diagonal(std::vector<double>(energies, energies + d));
    const double eps_top = h.energies().back() - h.energies().front();
    Table t({"p_e", "lambda1", "work", "entropy", "tau"});
    for (const BoundPoint& b : structured_bound_curve(d, eps_top, points)) {
      t.add_row({b.p_e, b.lambda1, b.work, b.entropy, b.tau});
    }
    *out = wrap(std::move(t));
  });
}

st_status st_thirdlaw_sweep(size_t d, const double* levels, size_t n_levels, st_table** out) {
  ST_REQUIRE(levels);
  ST_REQUIRE(out);
  *out = nullptr;
  return guarded([&] {
    std::vector<std::string> cols = ip_columns(d);
    cols.insert(cols.end(), {"p_d", "beta", "diverging"});
    Table t(std::move(cols));
    const std::vector<double> lv(levels, levels + n_levels);
    for (const ThirdLawPoint& p : third_law_sweep(d, lv)) {
      std::vector<double> row = p.ips;
      row.insert(row.end(), {p.p_d, p.beta, p.diverging ? 1.0 : 0.0});
      t.add_row(std::move(row));
    }
    *out = wrap(std::move(t));
  });
}

}  // extern "C"
