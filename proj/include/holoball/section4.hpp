#pragma once

#include <cstdint>
#include <functional>
#include <numeric>
#include <string>
#include <vector>

#include "holoball/holo_maps.hpp"
#include "holoball/parallel.hpp"
#include "holoball/types.hpp"

namespace holoball {

/// One-variable holomorphic map of the right half-plane H = {Re > 0} together
/// with its radial dilation alpha = lim_{r->inf} phi(r)/r, supplied by the
/// provider and cross-checked numerically at construction.
struct HalfPlaneMap {
  std::string id;
  std::function<Complex(Complex)> eval;
  std::function<Complex(Complex)> deriv;  // may be empty
  double alpha = 1.0;
};

/// Default stand-in phi(zeta) = 4 + zeta: maps H into {Re > 3}, alpha = 1.
HalfPlaneMap standin_phi();

/// The two-variable map on the Siegel half-space H^2 = {(z,w): Re z > |w|^2},
///
///   Phi(z, w) = ( phi(z), sqrt(alpha) delta w / (1 + phi(z)) + eps z / (1 + z) ).
///
/// Hypotheses validated at construction: eps^2 < 3/4, delta < 2, and on a
/// sample sweep Re phi > 3 together with the growth bound Re phi(z) >= alpha Re z.
class Section4Map {
 public:
  Section4Map(HalfPlaneMap phi, double delta, double eps, int hypothesis_samples = 2000,
              std::uint64_t seed = 0x5ec4u);

  const HalfPlaneMap& phi() const { return phi_; }
  double delta() const { return delta_; }
  double eps() const { return eps_; }

  /// Evaluation in Siegel coordinates, packed as (z, w) in C^2.
  CPoint apply_siegel(const CPoint& zw) const;
  CMatrix jacobian_siegel(const CPoint& zw) const;  // needs phi.deriv

  /// As a self-map of H^2 (domain guard Re z > |w|^2).
  HoloMap as_siegel_selfmap() const;

  /// Conjugated by the Cayley transform into a self-map of the unit ball.
  HoloMap as_ball_map(const std::string& gallery_id = "section4_ball") const;

 private:
  HalfPlaneMap phi_;
  double delta_;
  double eps_;
};

/// Termwise record of the containment inequality chain at one sample: each
/// adjacent pair rhs_i <= rhs_{i+1} plus the final comparison with Re phi(z).
struct ChainSample {
  CPoint zw;
  std::vector<double> terms;  // |..|^2, 2(..+..), 2(../16+eps^2), a|w|^2/2+3/2, ..+Re phi/2, Re phi
  bool ok = true;
};

struct ContainmentResult {
  std::size_t samples = 0;
  std::size_t violations = 0;
  ChainSample worst;  // largest slack violation, or tightest margin when all pass
  double min_final_margin = 0.0;  // min over samples of Re phi(z) - |second coord|^2
  bool all_ok() const { return violations == 0; }
};

/// Sweeps random H^2 points and checks the displayed chain term by term.
ContainmentResult section4_containment_sweep(const Section4Map& map, std::size_t samples,
                                             std::uint64_t seed, const ExecPolicy& exec = {});

/// Exact rational arithmetic for the separation certificate.
struct Fraction {
  long long num = 0;
  long long den = 1;

  Fraction() = default;
  Fraction(long long n, long long d);
  static Fraction parse(const std::string& text);  // "p/q" or integer

  Fraction operator+(const Fraction& o) const;
  Fraction operator-(const Fraction& o) const;
  Fraction operator*(const Fraction& o) const;
  Fraction operator/(const Fraction& o) const;
  bool operator==(const Fraction& o) const { return num == o.num && den == o.den; }
  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
  std::string str() const;
};

/// Injectivity separation data for disc radii (r_{-1}, r_1):
///   R0 = r_{-1}/(2 - r_{-1}),  Rinf = (2 - r_1)/r_1,
///   factor = Rinf/(1 + Rinf) - R0/(1 - R0),
/// and a collision forces eps * factor <= 2 delta. The certificate is positive
/// when eps * factor - 2 delta > 0.
struct SeparationCertificate {
  Fraction R0, Rinf, factor;
  double eps = 0.0, delta = 0.0;
  double lhs = 0.0;     // eps * factor
  double margin = 0.0;  // eps * factor - 2 delta
  bool certified = false;
};

SeparationCertificate section4_separation(const Fraction& r_minus1, const Fraction& r_1,
                                          double eps, double delta);

}  // namespace holoball
