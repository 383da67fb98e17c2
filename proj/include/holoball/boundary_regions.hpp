#pragma once

#include <span>
#include <vector>

#include "holoball/types.hpp"

namespace holoball {

/// Cone of vertex e_1 and amplitude M: { z : |e_1 - z| < M (1 - |z|) }.
struct ConeSpec {
  double M;
  explicit ConeSpec(double amplitude);
};

/// Koranyi region of vertex e_1 and amplitude R: { z : |1 - z_1| <= R (1 - |z|) }.
struct KoranyiSpec {
  double R;
  explicit KoranyiSpec(double amplitude);
};

/// Stolz angle in the disc:
///   K(M, s) = { zeta : |1 - zeta|/(1 - |zeta|) < M, |1 - zeta| < s }.
/// s may go up to 2 so the untruncated variant K(M, 2) is representable.
struct StolzSpec {
  double M;
  double s;
  StolzSpec(double amplitude, double diameter);
};

/// Quantifier witnesses (epsilon, delta, M) of the admissibility definition.
struct AdmissibleWitness {
  double epsilon;
  double delta;
  double M;
  AdmissibleWitness(double eps, double del, double amplitude);
};

bool in_cone(const ConeSpec& spec, const CPoint& z);
bool in_koranyi(const KoranyiSpec& spec, const CPoint& z);
bool in_stolz(const StolzSpec& spec, Complex zeta);

/// Deterministic discretization of K(M, s): points 1 - rho e^{i theta} with
/// rho = s 2^{-k} (k = 1..k_max) and `rays` angles spread across the aperture,
/// filtered by in_stolz. Ordered by generation, then by angle.
std::vector<Complex> stolz_grid(const StolzSpec& spec, int k_max, int rays);

/// |z - z_1 e_1|^2 / (1 - |z_1|^2); bounded by M |e_1 - z| on the cone C(M).
double cone_admissibility_margin(const ConeSpec& spec, const CPoint& z);

/// delta such that every z in C(M) within B(e_1, delta) has k(z, pi(z)) < eps:
/// the margin is at most M |e_1 - z| < M delta, and k < eps iff margin < tanh^2(eps).
double lemma_cone_delta(double eps, double M);

struct AdmissibilitySample {
  CPoint z;
  bool in_range = false;        // inside B(e_1, delta)
  bool projection_in_cone = false;
  double distance_to_projection = 0.0;  // k(z, pi(z))
  bool ok = true;
};

struct AdmissibilityReport {
  bool admissible = true;
  int in_range_count = 0;
  double max_distance = 0.0;            // over in-range samples
  double min_required_amplitude = 1.0;  // smallest M' putting every projection in a cone
  std::vector<AdmissibilitySample> rows;
};

/// Checks conditions (1) pi(z) in C(M) and (2) k(z, pi(z)) < epsilon for every
/// sample inside B(e_1, delta).
AdmissibilityReport admissibility_check(const AdmissibleWitness& witness,
                                        std::span<const CPoint> samples);

}  // namespace holoball
