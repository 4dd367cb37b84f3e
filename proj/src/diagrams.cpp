#include "settherm/diagrams.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "settherm/error.hpp"
#include "settherm/parallel.hpp"
#include "settherm/sampling.hpp"
#include "settherm/states.hpp"

namespace settherm {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void require_dimension(std::size_t d) {
  if (d < 2) throw InvalidArgument("dimension must be at least 2");
}

void require_block(std::size_t d, Block b) {
  if (b.i < 1 || b.i > b.j || b.j > d - 1) {
    std::ostringstream msg;
    msg << "block (" << b.i << ", " << b.j << ") invalid for d = " << d;
    throw InvalidArgument(msg.str());
  }
}

// Ordered entropy and SET of a curve point, both from the IP map.
CurvePoint evaluate(std::size_t d, Block b, double t) {
  const IndicesOfPurity ips = block_ips(d, b, t);
  return {t, set_temperature(global_purity_from_ips(ips)), entropy_from_ips(ips)};
}

double xlogx(double x) { return x > 0.0 ? x * std::log(x) : 0.0; }

// 1 - P on the upper boundary at SET tau.
double upper_deficit(double tau) {
  const double q = std::exp(-2.0 / tau);
  return 2.0 * q / (1.0 + q);
}

}  // namespace

IndicesOfPurity block_ips(std::size_t d, Block b, double t) {
  require_dimension(d);
  require_block(d, b);
  if (!(t >= 0.0 && t <= 1.0)) throw InvalidArgument("curve parameter t must lie in [0, 1]");
  std::vector<double> p(d - 1);
  for (std::size_t k = 1; k <= d - 1; ++k) p[k - 1] = k < b.i ? 0.0 : (k <= b.j ? t : 1.0);
  return IndicesOfPurity(std::move(p));
}

std::vector<DiagramCurve> boundary_curves(std::size_t d, std::size_t resolution, double tau_max) {
  require_dimension(d);
  if (resolution < 2) throw InvalidArgument("curve resolution must be at least 2");
  if (!(tau_max > 0.0)) throw InvalidArgument("tau_max must be positive");
  std::vector<Block> blocks;
  for (std::size_t i = 1; i <= d - 1; ++i) {
    for (std::size_t j = i; j <= d - 1; ++j) blocks.push_back({i, j});
  }
  std::vector<double> grid(resolution);
  for (std::size_t n = 0; n < resolution; ++n) {
    grid[n] = 0.5 * (1.0 - std::cos(std::numbers::pi * static_cast<double>(n) / static_cast<double>(resolution - 1)));
  }
  grid.front() = 0.0;
  grid.back() = 1.0;

  std::vector<DiagramCurve> curves(blocks.size());
  parallel_for(blocks.size(), [&](std::size_t c) {
    const Block b = blocks[c];
    DiagramCurve& curve = curves[c];
    curve.label = "block_" + std::to_string(b.i) + "_" + std::to_string(b.j);
    curve.block = b;
    curve.endpoints = {degeneracy_plateau(d, b.j + 1), std::log(static_cast<double>(b.j + 1)),
                       degeneracy_plateau(d, b.i), std::log(static_cast<double>(b.i))};
    for (auto it = grid.rbegin(); it != grid.rend(); ++it) {
      const CurvePoint p = evaluate(d, b, *it);
      if (p.tau <= tau_max) curve.points.push_back(p);
    }
  });
  return curves;
}

std::optional<double> curve_entropy_at(std::size_t d, Block b, double tau) {
  require_dimension(d);
  require_block(d, b);
  if (std::isnan(tau) || tau < 0.0) throw InvalidArgument("SET must be non-negative");
  const double dd = static_cast<double>(d);
  const double p = std::isinf(tau) ? 0.0 : (tau == 0.0 ? 1.0 : std::tanh(1.0 / tau));
  const double a = 1.0 / static_cast<double>(b.i) - 1.0 / static_cast<double>(b.j + 1);
  const double base = 1.0 / static_cast<double>(b.j + 1) - 1.0 / dd;
  const double t2 = ((dd - 1.0) / dd * p * p - base) / a;
  // Allow round-off at the curve ends.
  constexpr double slack = 1e-12;
  if (t2 < -slack || t2 > 1.0 + slack) return std::nullopt;
  const double t = std::sqrt(std::clamp(t2, 0.0, 1.0));
  return entropy_from_ips(block_ips(d, b, t));
}

std::vector<CuspPoint> cusp_points(std::size_t d) {
  require_dimension(d);
  std::vector<CuspPoint> out;
  for (std::size_t k = 1; k + 2 <= d; ++k) {
    std::vector<double> p(d - 1, 1.0);
    std::fill(p.begin(), p.begin() + static_cast<std::ptrdiff_t>(k), 0.0);
    IndicesOfPurity ips(std::move(p));
    const double tau = set_temperature(global_purity_from_ips(ips));
    const double s = entropy_from_ips(ips);
    out.push_back({k, std::move(ips), tau, s});
  }
  return out;
}

EnvelopeCheck envelope_contains(std::size_t d, double tau, double entropy, std::span<const DiagramCurve> curves,
                                double tol) {
  require_dimension(d);
  if (curves.empty()) throw InvalidArgument("envelope needs at least one curve");
  if (std::isnan(tau) || tau < 0.0) throw InvalidArgument("SET must be non-negative");
  EnvelopeCheck out;
  double tau_lo = kInf;
  double tau_hi = -kInf;
  for (const DiagramCurve& c : curves) {
    if (!c.points.empty()) {
      tau_lo = std::min(tau_lo, c.points.front().tau);
      tau_hi = std::max(tau_hi, c.points.back().tau);
    }
  }
  out.extrapolated = !(tau >= tau_lo && tau <= tau_hi);

  bool any = false;
  out.lower = kInf;
  out.upper = -kInf;
  for (const DiagramCurve& c : curves) {
    const std::optional<double> s = curve_entropy_at(d, c.block, tau);
    if (!s) continue;
    any = true;
    out.lower = std::min(out.lower, *s);
    out.upper = std::max(out.upper, *s);
  }
  if (!any) {
    out.lower = out.upper = std::numeric_limits<double>::quiet_NaN();
    return out;
  }
  out.contained = entropy >= out.lower - tol && entropy <= out.upper + tol;
  return out;
}

std::vector<ThermalPoint> thermal_entropy_curve(std::span<const double> energies, std::span<const double> t_grid) {
  for (std::size_t i = 0; i < t_grid.size(); ++i) {
    if (!(t_grid[i] > 0.0)) throw InvalidArgument("temperatures must be positive");
    if (i > 0 && !(t_grid[i] > t_grid[i - 1])) throw InvalidArgument("temperature grid must be ascending");
  }
  std::vector<ThermalPoint> out;
  out.reserve(t_grid.size());
  for (double t : t_grid) {
    const ThermalSpectrum th = gibbs_spectrum(energies, t);
    out.push_back({t, von_neumann_entropy(th.probabilities), spectral_set(th.probabilities)});
  }
  return out;
}

std::vector<CloudPoint> diagram_cloud(std::size_t d, std::size_t count, std::uint64_t seed) {
  const std::vector<IndicesOfPurity> samples = sample_ips({d, count, seed, SamplingMethod::ip_sphere});
  std::vector<CloudPoint> out(samples.size());
  parallel_for(samples.size(), [&](std::size_t n) {
    const Spectrum s = spectrum_from_ips(samples[n]);
    const auto v = samples[n].values();
    out[n] = {spectral_set(s), von_neumann_entropy(s), std::vector<double>(v.begin(), v.end())};
  });
  return out;
}

std::vector<double> default_zeta_grid(std::size_t n) {
  if (n < 2) throw InvalidArgument("zeta grid needs at least two points");
  std::vector<double> z(n, 0.0);
  for (std::size_t k = 1; k < n; ++k) {
    const double f = n == 2 ? 1.0 : static_cast<double>(k - 1) / static_cast<double>(n - 2);
    z[k] = std::pow(10.0, -3.0 + 6.0 * f);
  }
  return z;
}

std::vector<ThirdLawPoint> third_law_sweep(std::size_t d, std::span<const double> levels) {
  require_dimension(d);
  if (levels.empty()) throw InvalidArgument("third-law sweep needs at least one level");
  for (std::size_t n = 0; n < levels.size(); ++n) {
    if (!(levels[n] >= 0.0 && levels[n] <= 1.0)) throw InvalidArgument("IP levels must lie in [0, 1]");
    if (n > 0 && !(levels[n] > levels[n - 1])) throw InvalidArgument("IP levels must be strictly ascending");
  }
  const std::size_t m = d - 1;
  std::vector<std::size_t> idx(m, 0);
  std::vector<ThirdLawPoint> out;
  while (true) {
    ThirdLawPoint pt;
    pt.ips.resize(m);
    for (std::size_t k = 0; k < m; ++k) pt.ips[k] = levels[idx[k]];
    pt.p_d = global_purity_from_ips(IndicesOfPurity(pt.ips));
    pt.beta = inverse_set(pt.p_d);
    pt.diverging = pt.p_d > 1.0 - 1e-12;
    out.push_back(std::move(pt));
    // next non-decreasing index tuple
    std::size_t k = m;
    while (k > 0 && idx[k - 1] + 1 == levels.size()) --k;
    if (k == 0) break;
    ++idx[k - 1];
    for (std::size_t r = k; r < m; ++r) idx[r] = idx[k - 1];
  }
  return out;
}

double upper_boundary_entropy(std::size_t d, double tau) {
  require_dimension(d);
  if (std::isnan(tau) || tau < 0.0) throw InvalidArgument("SET must be non-negative");
  const double dd = static_cast<double>(d);
  if (std::isinf(tau)) return std::log(dd);
  if (tau == 0.0) return 0.0;
  const double eps = upper_deficit(tau);
  const double rest = eps / dd;
  const double top_loss = (dd - 1.0) * eps / dd;  // 1 - lambda_1
  const double top_term = (1.0 - top_loss) * std::log1p(-top_loss);
  return std::max(0.0, -top_term - (dd - 1.0) * xlogx(rest));
}

double upper_boundary_slope(std::size_t d, double tau) {
  require_dimension(d);
  if (!(tau > 0.0) || std::isinf(tau)) throw InvalidArgument("slope needs a finite positive SET");
  const double dd = static_cast<double>(d);
  const double eps = upper_deficit(tau);
  if (eps == 0.0) return 0.0;
  const double log_top = std::log1p(-(dd - 1.0) * eps / dd);
  const double log_rest = std::log(eps / dd);
  const double ds_deps = (dd - 1.0) / dd * (log_top - log_rest);
  const double deps_dtau = 2.0 * eps * (1.0 - 0.5 * eps) / (tau * tau);
  return ds_deps * deps_dtau;
}

}  // namespace settherm
