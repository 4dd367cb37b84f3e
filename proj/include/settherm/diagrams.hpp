#pragma once

// Geometry of the entropy-SET region: boundary curves, cusps, envelope
// containment, thermal curves and third-law data.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "settherm/spectra.hpp"

namespace settherm {

/// Block (i, j), 1 <= i <= j <= d-1: P_(k) = 0 for k < i, t for i <= k <= j,
/// 1 for k > j.
struct Block {
  std::size_t i = 1;
  std::size_t j = 1;
};

struct CurvePoint {
  double t = 0.0;
  double tau = 0.0;
  double entropy = 0.0;
};

/// Analytic limits: t = 0 is the state uniform over j+1 levels, t = 1 the
/// state uniform over i levels. tau may be +inf.
struct CurveEndpoints {
  double tau_t0 = 0.0;
  double entropy_t0 = 0.0;
  double tau_t1 = 0.0;
  double entropy_t1 = 0.0;
};

struct DiagramCurve {
  std::string label;  // "block_i_j"
  Block block;
  std::vector<CurvePoint> points;  // ascending tau, tau <= tau_max
  CurveEndpoints endpoints;
};

IndicesOfPurity block_ips(std::size_t d, Block b, double t);

/// Exactly d(d-1)/2 curves ordered by (i, j), each sampled on a
/// cosine-spaced t grid of `resolution` points. Points with tau above
/// tau_max (including +inf) are left out of `points`.
std::vector<DiagramCurve> boundary_curves(std::size_t d, std::size_t resolution, double tau_max = 1e3);

/// Entropy of curve `b` at the given SET, or nullopt if the curve does not
/// reach it. The curve parameter is solved in closed form from
/// P_d^2 = d/(d-1) [ t^2 (1/i - 1/(j+1)) + 1/(j+1) - 1/d ].
std::optional<double> curve_entropy_at(std::size_t d, Block b, double tau);

struct CuspPoint {
  std::size_t k = 1;
  IndicesOfPurity ips;
  double tau = 0.0;
  double entropy = 0.0;
};

/// d-2 cusps; cusp k has IPs (0 x k, 1 x (d-1-k)). Empty for d = 2.
std::vector<CuspPoint> cusp_points(std::size_t d);

struct EnvelopeCheck {
  bool contained = false;
  bool extrapolated = false;  // tau outside the curves' sampled range
  double lower = 0.0;
  double upper = 0.0;
};

/// Lower and upper entropy over all curves at this tau, evaluated exactly
/// on each curve rather than interpolated between samples. tau = +inf is the
/// maximally mixed point with entropy ln d.
EnvelopeCheck envelope_contains(std::size_t d, double tau, double entropy, std::span<const DiagramCurve> curves,
                                double tol = 1e-6);

struct ThermalPoint {
  double temperature = 0.0;
  double entropy = 0.0;
  double tau = 0.0;
};

std::vector<ThermalPoint> thermal_entropy_curve(std::span<const double> energies, std::span<const double> t_grid);

struct CloudPoint {
  double tau = 0.0;
  double entropy = 0.0;
  std::vector<double> ips;
};

/// IP-sphere samples placed on the diagram.
std::vector<CloudPoint> diagram_cloud(std::size_t d, std::size_t count, std::uint64_t seed);

/// zeta = 0 followed by n-1 log-spaced values in [1e-3, 1e3].
std::vector<double> default_zeta_grid(std::size_t n);

struct ThirdLawPoint {
  std::vector<double> ips;
  double p_d = 0.0;
  double beta = 0.0;
  bool diverging = false;  // P_d > 1 - 1e-12
};

/// All non-decreasing (d-1)-tuples drawn from `levels` (ascending values in
/// [0, 1]), in lexicographic order.
std::vector<ThirdLawPoint> third_law_sweep(std::size_t d, std::span<const double> levels);

/// Upper boundary (all IPs equal) as a function of SET, parametrised by
/// 1 - P = 2 / (exp(2/tau) + 1) so it stays accurate as tau -> 0.
double upper_boundary_entropy(std::size_t d, double tau);

/// dS/dtau along the upper boundary.
double upper_boundary_slope(std::size_t d, double tau);

}  // namespace settherm
