#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "holoball/automorphisms.hpp"
#include "holoball/holo_maps.hpp"
#include "holoball/newton.hpp"
#include "holoball/parallel.hpp"
#include "holoball/rng.hpp"
#include "holoball/types.hpp"

namespace holoball {

/// Renormalization of f at the Stolz point zeta:
///
///   g = Phi_{t1}^{-1} o T o f o S^{-1} o Phi_{t0},
///
/// where S, T are the normalizing parabolics of x = zeta e_1 and y = f(x),
/// t0 = -log R(x)^{1/2} and t1 = -log R(y)^{1/2}. By construction g(0) = 0.
class RenormalizedMap {
 public:
  RenormalizedMap(HoloMap base, Complex zeta, double M, double s);

  const HoloMap& base() const { return base_; }
  Complex zeta() const { return zeta_; }
  const CPoint& curve_point() const { return x_; }
  const CPoint& image_point() const { return y_; }
  double t0() const { return t0_; }
  double t1() const { return t1_; }

  CPoint apply(const CPoint& u) const;
  HoloMap as_holomap() const;

  /// The five chain factors of the determinant identity at 0, in order
  /// Phi_{t1}^{-1}, T, f, S^{-1}, Phi_{t0}.
  struct ChainFactors {
    Complex phi1_inv;
    Complex dT;
    Complex df;
    Complex dS_inv;
    Complex phi0;
    Complex product() const { return phi1_inv * dT * df * dS_inv * phi0; }
  };
  ChainFactors chain_factors() const;

 private:
  HoloMap base_;
  Complex zeta_;
  CPoint x_, y_;
  double t0_ = 0.0, t1_ = 0.0;
  ParabolicAutomorphism S_, T_;
  HyperbolicAutomorphism phi0_, phi1_;
};

struct RenormBoundRow {
  Complex zeta;
  double chain_abs = 0.0;    // |det dg_0| from the factor product
  double direct_abs = 0.0;   // |det dg_0| by numeric differentiation of g
  double dS_abs = 0.0;       // |det dS_{zeta e1}|
  double dT_abs = 0.0;       // |det dT_{f(zeta e1)}|
  double cosh_ratio = 0.0;   // cosh t1 / cosh t0
  double ratio_floor = 0.0;  // (1/(1+Ms)) |1-zeta|/|1-f1| sqrt((1-|f|^2)/(1-|zeta|^2))
  double det_floor = 0.0;    // (c/4) (cosh t1 / cosh t0)^{n+1}
  double c_prime_floor = 0.0;  // asymptotic floor on cosh-ratio^{n+1} from alpha_hat
  bool chain_matches = false;
  bool bound_holds = false;
  bool floor_holds = false;
};

struct RenormBoundReport {
  double M = 0.0, s = 0.0;
  double c_hat = 0.0, alpha_hat = 0.0;
  std::vector<RenormBoundRow> rows;
  bool all_chain_match = false;
  bool all_bounds_hold = false;
  bool all_floors_hold = false;
};

/// Checks, on each grid point, that the chain product matches the direct
/// numeric determinant, that |det dg_0| >= (c/4)(cosh t1/cosh t0)^{n+1}, and
/// that the cosh ratio obeys its displayed lower bound (with the asymptotic
/// floor derived from the measured dilation alpha_hat).
RenormBoundReport renorm_determinant_bound(const HoloMap& f, double M, double s,
                                           std::span<const Complex> grid, double c_hat,
                                           double alpha_hat, double match_tol = 1e-6);

struct CurveDistanceRow {
  double s = 0.0;
  int probes = 0;
  double max_distance = 0.0;  // max over probes of the distance to the image curve
};

struct CurveDistanceReport {
  double M = 0.0, t = 0.0;
  int curve_points = 0;
  int substeps = 0;  // radial subdivisions per octave (discretization density)
  int rays = 0;
  std::vector<CurveDistanceRow> rows;

  bool monotone_nonincreasing(double tol) const;
  double final_max_distance() const { return rows.empty() ? 0.0 : rows.back().max_distance; }
};

/// For each truncation s (dyadic fractions of t), measures the largest
/// Kobayashi distance from probes on K(M, s) e_1 to a dense sampling of the
/// image curve f(K(M, t) e_1). Probe radii align with the curve radii so a map
/// whose image curve is the axis itself measures distance zero.
CurveDistanceReport curve_distance_suite(const HoloMap& f, double M, double t,
                                         std::span<const double> s_list, int probe_depth,
                                         int rays, int substeps, int octaves,
                                         const ExecPolicy& exec = {});

/// Family of normalized maps (f(0) = 0, |det df_0| >= c) probed for a common
/// covered radius.
class KoebeProbe {
 public:
  KoebeProbe(double c, double t_prime, std::vector<HoloMap> maps);

  double c() const { return c_; }
  double t_prime() const { return t_prime_; }
  const std::vector<HoloMap>& maps() const { return maps_; }

 private:
  double c_;
  double t_prime_;
  std::vector<HoloMap> maps_;
};

/// Largest radius rho (bisection to bisect_tol) such that every sampled
/// target in B(0, rho) has a Newton preimage inside B(0, t') for every probed
/// map. Lower-bounds the covered radius on the probed family.
double koebe_radius_probe(const KoebeProbe& probe, int boundary_samples, std::uint64_t seed,
                          double bisect_tol = 1e-4, const ExecPolicy& exec = {});

struct CoverageParams {
  double M = 2.0;
  double s = 0.05;
  double r = 0.1;    // Kobayashi radius of the sampled balls
  double eta = 0.3;  // Euclidean localization radius at e_1
  int curve_samples = 100;
  int ball_samples = 10;
  std::uint64_t seed = 1;
  NewtonOptions newton;
};

struct CoverageRecord {
  int curve_index = -1;
  Complex zeta;
  CPoint target;
  CPoint preimage;
  NewtonStatus status = NewtonStatus::max_iterations;
  double residual = 0.0;
  bool interior = false;
  bool in_eta_ball = false;
  bool reverified = false;
  bool hit = false;
  bool used_fallback_seed = false;
};

struct CoverageReport {
  CoverageParams params;
  std::vector<CoverageRecord> records;
  std::size_t hits = 0;
  double hit_ratio = 0.0;
  std::vector<std::size_t> failure_indices;
};

/// Samples Kobayashi balls B_k(f(zeta e_1), r) along the Stolz curve by
/// pushing Euclidean samples of B(0, tanh r) through the Mobius translation at
/// the center, then certifies each target by a Newton preimage seeded at
/// zeta e_1 (with one fallback seed from an already-solved neighbor). A hit
/// requires an interior preimage inside B(e_1, eta) whose image reproduces the
/// target to 10x the solver tolerance.
CoverageReport coverage_check(const HoloMap& f, const CoverageParams& params,
                              const ExecPolicy& exec = {},
                              std::span<const CPoint> extra_targets = {});

/// Point generator for an admissible set, with its declared witnesses.
struct SetSampler {
  std::string name;
  double M = 2.0;       // cone amplitude witness
  double eps = 0.1;     // admissibility distance witness
  std::function<CPoint(Rng&, double delta)> draw;  // a point of A within B(e1, delta)
};

SetSampler cone_sampler(double M, int n = 2);
SetSampler radial_sampler(int n = 2);

struct AdmissibleCoverageRow {
  double delta = 0.0;
  int samples = 0;
  int covered = 0;
  double fraction = 0.0;
  CPoint first_failure;
  bool has_failure = false;
};

struct AdmissibleCoverageReport {
  double eta = 0.0;
  std::vector<AdmissibleCoverageRow> rows;
  bool reaches_full_coverage = false;  // fraction 1.0 at the smallest delta
};

/// For each delta, samples A within B(e_1, delta) and certifies preimages in
/// B(e_1, eta) by Newton solves seeded at the axis projection.
AdmissibleCoverageReport admissible_coverage_check(const HoloMap& f, const SetSampler& sampler,
                                                   double eta, std::span<const double> deltas,
                                                   int samples_per_delta, std::uint64_t seed,
                                                   const ExecPolicy& exec = {});

struct BallSandwichReport {
  CPoint inner_center;
  double inner_radius = 0.0;
  double monotonicity_max_excess = 0.0;  // max over pairs of k(phi(u),phi(v)) - k(u,v)
  bool monotonicity_ok = false;
  AdmissibleCoverageReport restricted_coverage;
  std::string inclusion_note;
};

/// Restricts f to an inscribed ball internally tangent at e_1 (center must be
/// (1 - rho) e_1), rescales it to the unit ball and reruns the admissible
/// coverage check; also demonstrates the distance monotonicity of the
/// restriction on random pairs.
BallSandwichReport ball_sandwich_check(const HoloMap& f, const CPoint& inner_center,
                                       double inner_radius, double eta,
                                       std::span<const double> deltas, int samples_per_delta,
                                       std::uint64_t seed, const ExecPolicy& exec = {});

}  // namespace holoball
