#pragma once

#include "holoball/types.hpp"

namespace holoball {

/// Mobius translation T_a of the unit ball: the involutive automorphism with
/// T_a(a) = 0 and T_a(0) = a,
///
///   T_a(z) = (a - P_a z - s_a Q_a z) / (1 - <z,a>),
///
/// where P_a is the orthogonal projection onto span{a}, Q_a = id - P_a and
/// s_a = sqrt(1 - |a|^2). For a = 0 this degenerates to z -> -z.
class MobiusTranslation {
 public:
  explicit MobiusTranslation(CPoint a);

  const CPoint& center() const { return a_; }
  int dim() const { return static_cast<int>(a_.size()); }

  CPoint apply(const CPoint& z) const;
  CPoint operator()(const CPoint& z) const { return apply(z); }

  /// Complex Jacobian matrix (column j = d/dz_j) at z.
  CMatrix jacobian(const CPoint& z) const;

  /// T_a is an involution.
  MobiusTranslation inverse() const { return *this; }

 private:
  CPoint a_;
  double s_;       // sqrt(1 - |a|^2)
  CMatrix linear_; // P_a + s_a Q_a
};

/// Hyperbolic automorphism fixing +-e_1:
///
///   Phi_t(z) = ((cosh t) z_1 + sinh t, z_2, ..., z_n) / ((sinh t) z_1 + cosh t).
///
/// Phi_t(0) = tanh(t) e_1 and the boundary dilation at e_1 is e^{-2t}.
class HyperbolicAutomorphism {
 public:
  HyperbolicAutomorphism(double t0, int n);

  double t0() const { return t0_; }
  int dim() const { return n_; }

  CPoint apply(const CPoint& z) const;
  CPoint operator()(const CPoint& z) const { return apply(z); }

  CMatrix jacobian(const CPoint& z) const;

  /// det dPhi_z = D^{-(n+1)} with D = (sinh t) z_1 + cosh t.
  Complex jacobian_det(const CPoint& z) const;

  HyperbolicAutomorphism inverse() const { return {-t0_, n_}; }

 private:
  double t0_;
  int n_;
  double ch_, sh_;
};

/// A point of the Siegel domain H^n = { (w_1, w'') : Re w_1 > |w''|^2 }.
struct SiegelPoint {
  Complex w1;
  CPoint w_tail;  // dimension n-1 (possibly 0)

  int dim() const { return static_cast<int>(w_tail.size()) + 1; }
  /// Re w_1 - |w''|^2; positive inside the domain.
  double height() const { return w1.real() - w_tail.squaredNorm(); }
  bool in_domain() const { return height() > 0.0; }
};

/// Generalized Cayley transform C(z_1, z'') = ((1+z_1)/(1-z_1), z''/(1-z_1)),
/// a biholomorphism from the unit ball onto the Siegel domain.
SiegelPoint cayley(const CPoint& z);
CPoint cayley_inverse(const SiegelPoint& w);

/// Jacobian matrices of the Cayley transform and its inverse.
CMatrix cayley_jacobian(const CPoint& z);
CMatrix cayley_inverse_jacobian(const SiegelPoint& w);

/// Automorphism fixing e_1, affine in Siegel coordinates:
///
///   (w_1, w'') -> (w_1 + 2<U w'', a> + c, U w'' + a)
///
/// with U unitary, a in C^{n-1} and Re c = |a|^2. Applied to ball points by
/// conjugation with the Cayley transform.
class ParabolicAutomorphism {
 public:
  /// c = |a|^2 + i * im_c is assembled internally so Re c = |a|^2 holds exactly.
  ParabolicAutomorphism(CMatrix U, CPoint a, double im_c);

  /// U = id convenience form.
  ParabolicAutomorphism(CPoint a, double im_c);

  int dim() const { return static_cast<int>(a_.size()) + 1; }
  const CMatrix& unitary() const { return U_; }
  const CPoint& translation() const { return a_; }
  Complex c() const { return {a_.squaredNorm(), im_c_}; }

  SiegelPoint siegel_apply(const SiegelPoint& w) const;
  CPoint apply(const CPoint& z) const;
  CPoint operator()(const CPoint& z) const { return apply(z); }

  CMatrix jacobian(const CPoint& z) const;

  ParabolicAutomorphism inverse() const;

 private:
  CMatrix U_;
  CPoint a_;
  double im_c_;
};

/// R(z) = |1 - z_1|^2 / (1 - |z|^2).
double boundary_ratio(const CPoint& z);

/// r(z) = (1 - R(z)) / (1 + R(z)); the axis radius a parabolic normalization
/// sends z to.
double normalized_radius(const CPoint& z);

/// The parabolic automorphism T with T(z0) = r(z0) e_1 (U = id, a = -w0'',
/// Im c = -Im (w0)_1 for w0 = C(z0)).
ParabolicAutomorphism normalizing_parabolic(const CPoint& z0);

Complex jacobian_det(const MobiusTranslation& t, const CPoint& z);
Complex jacobian_det(const HyperbolicAutomorphism& t, const CPoint& z);
Complex jacobian_det(const ParabolicAutomorphism& t, const CPoint& z);

}  // namespace holoball
