#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "holoball/types.hpp"

namespace holoball {

/// A holomorphic self-map given by an evaluator, an optional analytic Jacobian
/// and a domain predicate (defaults to the open unit ball). Evaluators must be
/// pure and reentrant.
struct HoloMap {
  std::string id;
  int dim = 2;
  std::function<CPoint(const CPoint&)> eval;
  std::function<CMatrix(const CPoint&)> analytic_jacobian;  // may be empty
  std::function<bool(const CPoint&)> domain_guard;          // empty = open unit ball
  /// Largest safe finite-difference step at z; empty = ball default
  /// min(1e-6, (1 - |z|)/10).
  std::function<double(const CPoint&)> step_hint;

  bool in_domain(const CPoint& z) const;
};

/// Guarded evaluation: domain check on input, finiteness and domain check on
/// the output.
CPoint evaluate(const HoloMap& f, const CPoint& z);

/// Complex central differences column by column,
///   df/dz_j ~ (f(z + h e_j) - f(z - h e_j)) / (2h).
/// If the stencil leaves the domain the step is halved, up to 5 times.
CMatrix numeric_jacobian(const HoloMap& f, const CPoint& z, double h = 0.0);

/// Analytic Jacobian when available, numeric otherwise.
CMatrix map_jacobian(const HoloMap& f, const CPoint& z);

/// Spot-checks that the evaluator maps interior points to interior points and
/// that the analytic Jacobian (when present) matches the numeric one; throws
/// on violation. Returns the map unchanged.
HoloMap make_checked(HoloMap f, int interior_samples = 10000, int jacobian_samples = 100,
                     std::uint64_t seed = 0x51ed5eedULL);

/// Boundary dilation along the radial ray z = (1 - 2^{-k}) e_1:
/// quotients (1 - |f(z)|) / (1 - |z|) and their minimum.
struct DilationEstimate {
  double alpha_hat = 0.0;
  std::vector<double> radii;
  std::vector<double> per_radius;     // quotient per generation
  std::vector<double> distance_to_e1; // |f(r_k e_1) - e_1|
  bool radial_limit_e1 = false;       // deepest distance below 1e-3
};

DilationEstimate dilation_estimate(const HoloMap& f, int k_max);

/// liminf surrogate for |det df| along K(M, 2) sequences on the axis.
struct SuperRegularityEstimate {
  double c_hat = 0.0;   // min |det df| over the deepest dyadic generation
  double M = 0.0;
  double floor = 1e-3;
  std::vector<Complex> grid;
  std::vector<double> per_sample_det;
  DilationEstimate dilation;
  bool verdict = false;  // super-regular candidate
};

SuperRegularityEstimate super_regularity_estimate(const HoloMap& f, double M, int k_max,
                                                  int rays, double floor = 1e-3);

/// One boundary-limit quantity evaluated along the axis Stolz grid.
struct JwcItem {
  std::string name;
  bool has_target = false;
  double target = 0.0;               // limit items: alpha or 0
  Complex last_value;                // value at the deepest radial point
  double last_deviation = 0.0;       // |value - target| at the deepest generation
  double grid_max_abs = 0.0;         // max |value| over the whole grid
  std::vector<double> per_generation;  // max |value - target| (or |value|) per generation
  bool verdict = false;
};

struct JwcReport {
  double alpha_hat = 0.0;
  double limit_tolerance = 1e-3;
  std::vector<JwcItem> items;
  bool all_ok = false;
};

/// Numeric checks of the boundary one-jet description at a regular fixed
/// point: boundedness items (1'), (1''), (1''') and limit items (2)-(6),
/// evaluated along stolz_grid(M, s, k_max, rays) scaled onto the axis.
JwcReport jwc_limit_checks(const HoloMap& f, double M, int k_max, int rays = 3,
                           double limit_tolerance = 1e-3, double s = 0.5);

}  // namespace holoball
