// settherm: data for entropy-SET diagrams, Heisenberg chains, ergotropy
// bounds and third-law sweeps. Built only on the public C interface.

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "settherm/settherm.h"

namespace {

namespace fs = std::filesystem;
using ojson = nlohmann::ordered_json;

// Exit codes.
constexpr int kOk = 0;
constexpr int kBadFlags = 1;
constexpr int kBadInput = 2;
constexpr int kNumerical = 3;

struct Failure {
  int code;
  std::string message;
};

int exit_code(st_status s) {
  switch (s) {
    case ST_OK:
      return kOk;
    case ST_INVALID_ARGUMENT:
    case ST_IO:
      return kBadFlags;
    case ST_INVALID_INPUT:
      return kBadInput;
    case ST_NUMERICAL:
    case ST_NULL_POINTER:
      return kNumerical;
  }
  return kNumerical;
}

void check(st_status s, const char* what) {
  if (s != ST_OK) throw Failure{exit_code(s), std::string(what) + ": " + st_last_error()};
}

class TableHandle {
 public:
  TableHandle() = default;
  TableHandle(const TableHandle&) = delete;
  TableHandle& operator=(const TableHandle&) = delete;
  ~TableHandle() { st_table_free(t_); }
  st_table** out() { return &t_; }
  const st_table* get() const { return t_; }

 private:
  st_table* t_ = nullptr;
};

struct Options {
  std::size_t dim = 0;
  std::size_t samples = 0;
  std::uint64_t seed = 0;
  std::string out;
  std::string format = "csv";
  double tmin = 1e-4;
  double tmax = 100.0;
  std::size_t points = 0;
  int length = 3;
  std::string omega;
  double tau_max = 1e3;
  std::size_t resolution = 512;
  std::size_t psa_points = 241;
  double ginibre_fraction = 0.5;
  std::string input;
};

void bad_flag(const std::string& message) { throw Failure{kBadFlags, message}; }

fs::path sibling(const fs::path& out, const std::string& suffix) {
  return out.parent_path() / (out.stem().string() + suffix);
}

std::vector<double> parse_levels(const std::string& text) {
  std::vector<double> v;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      v.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      bad_flag("--omega: cannot parse '" + item + "' as a number");
    }
  }
  return v;
}

std::vector<double> log_grid(double lo, double hi, std::size_t n) {
  if (!(lo > 0.0) || !(hi > lo)) bad_flag("temperature grid needs 0 < --tmin < --tmax");
  if (n < 2) bad_flag("--points must be at least 2");
  std::vector<double> t(n);
  const double a = std::log(lo);
  const double b = std::log(hi);
  for (std::size_t i = 0; i < n; ++i) {
    t[i] = std::exp(a + (b - a) * static_cast<double>(i) / static_cast<double>(n - 1));
  }
  t.front() = lo;
  t.back() = hi;
  return t;
}

ojson number(double v) {
  if (std::isfinite(v)) return v;
  return std::isnan(v) ? "nan" : (v > 0 ? "inf" : "-inf");
}

std::string format_table(const st_table* t, bool json) {
  std::size_t needed = 0;
  check(json ? st_table_format_json(t, nullptr, 0, &needed) : st_table_format_csv(t, nullptr, 0, &needed),
        "formatting output");
  std::string buf(needed, '\0');
  check(json ? st_table_format_json(t, buf.data(), buf.size(), &needed)
             : st_table_format_csv(t, buf.data(), buf.size(), &needed),
        "formatting output");
  buf.resize(needed - 1);
  return buf;
}

void write_text(const fs::path& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Failure{kBadFlags, "cannot open " + path.string() + " for writing"};
  f << text;
  if (!f) throw Failure{kBadFlags, "failed writing " + path.string()};
}

void emit_text(const std::string& out, const std::string& text) {
  if (out.empty()) {
    std::cout << text;
  } else {
    write_text(out, text);
  }
}

void require_out(const Options& o) {
  if (o.out.empty()) bad_flag("--out is required for this subcommand");
}

// Writes named tables: CSV puts the first at `out` and the others next to it
// as <stem>_<name>.csv; JSON puts all of them in one object at `out`.
void write_tables(const Options& o, const std::vector<std::pair<std::string, const st_table*>>& tables) {
  if (o.format == "json") {
    std::vector<const st_table*> t;
    std::vector<const char*> names;
    for (const auto& [name, table] : tables) {
      t.push_back(table);
      names.push_back(name.c_str());
    }
    check(st_tables_write_json(t.data(), names.data(), t.size(), o.out.c_str()), "writing output");
    return;
  }
  const fs::path out(o.out);
  for (std::size_t i = 0; i < tables.size(); ++i) {
    const fs::path p = i == 0 ? out : sibling(out, "_" + tables[i].first + ".csv");
    check(st_table_write_csv(tables[i].second, p.string().c_str()), "writing output");
  }
}

void run_diagram(Options o) {
  require_out(o);
  if (o.dim == 0) o.dim = 3;
  if (o.samples == 0) o.samples = 10000;
  TableHandle curves, cusps, cloud, psa;
  check(st_diagram_curves(o.dim, o.resolution, o.tau_max, curves.out()), "boundary curves");
  check(st_diagram_cusps(o.dim, cusps.out()), "cusp points");
  check(st_diagram_cloud(o.dim, o.samples, o.seed, cloud.out()), "sample cloud");
  check(st_psa_path(o.dim, nullptr, o.psa_points, psa.out()), "PSA path");
  write_tables(o, {{"curves", curves.get()}, {"cloud", cloud.get()}, {"psa", psa.get()}, {"cusps", cusps.get()}});
}

ojson diagnostics_json(const st_chain_diagnostics& d) {
  ojson j;
  j["length"] = d.length;
  j["dimension"] = d.dimension;
  j["ground_energy"] = number(d.ground_energy);
  j["ground_degeneracy"] = d.ground_degeneracy;
  j["variance"] = number(d.variance);
  j["variance_theory"] = number(d.variance_theory);
  j["slope_fit"] = number(d.slope_fit);
  j["slope_theory"] = number(d.slope_theory);
  j["plateau_numeric"] = d.has_plateau ? number(d.plateau_numeric) : ojson(nullptr);
  j["plateau_theory"] = d.has_plateau ? number(d.plateau_theory) : ojson(nullptr);
  return j;
}

void run_heisenberg(Options o) {
  require_out(o);
  if (o.points == 0) o.points = 256;
  const std::vector<double> grid = log_grid(o.tmin, o.tmax, o.points);
  TableHandle curve;
  check(st_heisenberg_curve(o.length, grid.data(), grid.size(), curve.out()), "tau-T curve");
  st_chain_diagnostics diag{};
  check(st_heisenberg_diagnostics(o.length, &diag), "chain diagnostics");
  if (o.format == "json") {
    ojson doc;
    doc["curve"] = ojson::parse(format_table(curve.get(), true));
    doc["diagnostics"] = diagnostics_json(diag);
    write_text(o.out, doc.dump(1) + "\n");
    return;
  }
  check(st_table_write_csv(curve.get(), o.out.c_str()), "writing output");
  write_text(sibling(o.out, "_diagnostics.json"), diagnostics_json(diag).dump(1) + "\n");
}

void run_ergotropy(Options o) {
  require_out(o);
  std::vector<double> energies;
  if (!o.omega.empty()) {
    energies = parse_levels(o.omega);
    if (o.dim != 0 && o.dim != energies.size()) bad_flag("--dim does not match the number of --omega levels");
  } else {
    if (o.dim == 0) o.dim = 4;
    if (o.dim == 2) {
      energies = {0.0, 3.86};
    } else if (o.dim == 4) {
      energies = {0.0, 3.75, 7.32, 9.51};
    } else {
      bad_flag("--omega is required for dimensions other than 2 and 4");
    }
  }
  if (o.samples == 0) o.samples = 10000;
  if (o.points == 0) o.points = 201;
  TableHandle scatter, bound;
  check(st_ergotropy_scatter(energies.data(), energies.size(), o.samples, o.seed, o.ginibre_fraction, scatter.out()),
        "ergotropy scatter");
  check(st_ergotropy_bound(energies.data(), energies.size(), o.points, bound.out()), "structured bound");
  write_tables(o, {{"scatter", scatter.get()}, {"bound", bound.get()}});
}

void run_thirdlaw(Options o) {
  if (o.dim == 0) o.dim = 3;
  if (o.points == 0) o.points = 101;
  if (o.points < 2) bad_flag("--points must be at least 2");
  std::vector<double> levels(o.points);
  for (std::size_t i = 0; i < o.points; ++i) levels[i] = static_cast<double>(i) / static_cast<double>(o.points - 1);
  TableHandle sweep;
  check(st_thirdlaw_sweep(o.dim, levels.data(), levels.size(), sweep.out()), "third-law sweep");
  emit_text(o.out, format_table(sweep.get(), o.format == "json"));
}

void run_summary(const Options& o) {
  if (o.input.empty()) bad_flag("summary needs --input <matrix.json>");
  st_matrix* m = nullptr;
  check(st_matrix_load(o.input.c_str(), &m), "loading input");
  st_summary s{};
  const st_status status = st_matrix_summary(m, &s);
  st_polarization pol{};
  st_status pol_status = ST_INVALID_ARGUMENT;
  if (status == ST_OK && s.dimension == 3) pol_status = st_polarization_report(m, &pol);
  st_matrix_free(m);
  check(status, "summarising input");
  if (s.dimension == 3) check(pol_status, "polarization decomposition");

  const std::vector<std::pair<const char*, double>> fields = {
      {"gamma", s.gamma},      {"p_global", s.p_global}, {"p_pairwise", s.p_pairwise},
      {"tau", s.tau},          {"beta", s.beta},         {"entropy", s.entropy},
      {"bipartite_entropy", s.bipartite_entropy}};
  if (o.format == "json") {
    ojson j;
    j["dimension"] = s.dimension;
    for (const auto& [k, v] : fields) j[k] = number(v);
    if (s.dimension == 3) {
      ojson p;
      p["weights"] = {number(pol.weights[0]), number(pol.weights[1]), number(pol.weights[2])};
      p["m"] = pol.real_rank;
      p["borderline"] = pol.borderline != 0;
      p["label"] = st_regularity_name(pol.regularity);
      j["polarization"] = std::move(p);
    }
    emit_text(o.out, j.dump(1) + "\n");
    return;
  }
  std::string header = "dimension";
  std::string row = std::to_string(s.dimension);
  for (const auto& [k, v] : fields) {
    header += std::string(",") + k;
    char buf[32];
    if (std::isinf(v)) {
      std::snprintf(buf, sizeof buf, "%s", v > 0 ? "inf" : "-inf");
    } else {
      std::snprintf(buf, sizeof buf, "%.17g", v);
    }
    row += std::string(",") + buf;
  }
  emit_text(o.out, header + "\n" + row + "\n");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Entropy and statistical effective temperature data for finite-dimensional states"};
  app.set_config("--config", "", "key=value file; command-line flags take precedence");
  app.require_subcommand(1);

  Options o;
  app.add_option("--dim", o.dim, "Hilbert-space dimension d")->check(CLI::Range(std::size_t{2}, std::size_t{4096}));
  app.add_option("--samples", o.samples, "Number of random samples")->check(CLI::PositiveNumber);
  app.add_option("--seed", o.seed, "RNG seed");
  app.add_option("--out", o.out, "Output file");
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--tmin", o.tmin, "Lowest temperature");
  app.add_option("--tmax", o.tmax, "Highest temperature");
  app.add_option("--points", o.points, "Grid points (temperature grid, bound curve or IP levels)")
      ->check(CLI::PositiveNumber);
  app.add_option("--length", o.length, "Heisenberg chain length L (2..9)");
  app.add_option("--omega", o.omega, "Comma-separated energy levels");
  app.add_option("--tau-max", o.tau_max, "SET truncation for curve output")->check(CLI::PositiveNumber);
  app.add_option("--resolution", o.resolution, "Points per boundary curve")->check(CLI::Range(2, 1 << 20));
  app.add_option("--psa-points", o.psa_points, "Points on the PSA path")->check(CLI::Range(2, 1 << 20));
  app.add_option("--ginibre-fraction", o.ginibre_fraction, "Share of Ginibre samples in the ergotropy scatter")
      ->check(CLI::Range(0.0, 1.0));
  app.add_option("--input", o.input, "Density-matrix JSON file");

  auto* diagram = app.add_subcommand("diagram", "Boundary curves, cusps, IP-sphere cloud and PSA path");
  auto* heisenberg = app.add_subcommand("heisenberg", "SET vs temperature for an open Heisenberg chain");
  auto* ergotropy = app.add_subcommand("ergotropy", "Ergotropy scatter and structured-state bound");
  auto* thirdlaw = app.add_subcommand("thirdlaw", "Inverse SET over a grid of indices of purity");
  auto* summary = app.add_subcommand("summary", "Spectral summary of one density matrix");
  summary->add_option("input", o.input, "Density-matrix JSON file");
  for (auto* sub : {diagram, heisenberg, ergotropy, thirdlaw, summary}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kBadFlags;
  }

  try {
    if (*diagram) run_diagram(o);
    if (*heisenberg) run_heisenberg(o);
    if (*ergotropy) run_ergotropy(o);
    if (*thirdlaw) run_thirdlaw(o);
    if (*summary) run_summary(o);
  } catch (const Failure& f) {
    std::cerr << "settherm: " << f.message << "\n";
    return f.code;
  } catch (const std::exception& e) {
    std::cerr << "settherm: " << e.what() << "\n";
    return kNumerical;
  }
  return kOk;
}
