#include "holoball/automorphisms.hpp"

#include <cmath>

namespace holoball {

namespace {

constexpr double kPoleGuard = 1e-14;

void require_nonpole(Complex denom, const char* who) {
  if (std::abs(denom) < kPoleGuard)
    throw std::domain_error(std::string(who) + ": evaluation at a pole of the map");
}

}  // namespace

MobiusTranslation::MobiusTranslation(CPoint a) : a_(std::move(a)) {
  require_interior(a_, "MobiusTranslation");
  const double q = a_.squaredNorm();
  s_ = std::sqrt(1.0 - q);
  const int n = static_cast<int>(a_.size());
  CMatrix proj = CMatrix::Zero(n, n);
  if (q > 0.0) proj = (a_ * a_.adjoint()) / q;  // P_a z = (<z,a>/|a|^2) a
  linear_ = proj + s_ * (CMatrix::Identity(n, n) - proj);
}

CPoint MobiusTranslation::apply(const CPoint& z) const {
  require_same_dim(z, a_, "MobiusTranslation::apply");
  require_interior(z, "MobiusTranslation::apply");
  const Complex denom = 1.0 - hermitian_inner(z, a_);
  require_nonpole(denom, "MobiusTranslation::apply");
  return ((a_ - linear_ * z) / denom).eval();
}

CMatrix MobiusTranslation::jacobian(const CPoint& z) const {
  require_same_dim(z, a_, "MobiusTranslation::jacobian");
  const Complex denom = 1.0 - hermitian_inner(z, a_);
  require_nonpole(denom, "MobiusTranslation::jacobian");
  const CPoint num = a_ - linear_ * z;
  // d/dz [num/denom] = -linear/denom + num * conj(a)^T / denom^2
  return (-linear_ / denom + (num * a_.conjugate().transpose()) / (denom * denom)).eval();
}

HyperbolicAutomorphism::HyperbolicAutomorphism(double t0, int n) : t0_(t0), n_(n) {
  if (n < 1) throw std::invalid_argument("HyperbolicAutomorphism: dimension must be >= 1");
  if (!std::isfinite(t0)) throw std::invalid_argument("HyperbolicAutomorphism: non-finite parameter");
  ch_ = std::cosh(t0);
  sh_ = std::sinh(t0);
}

CPoint HyperbolicAutomorphism::apply(const CPoint& z) const {
  if (z.size() != n_) throw std::invalid_argument("HyperbolicAutomorphism::apply: dimension mismatch");
  if (!is_finite(z)) throw std::domain_error("HyperbolicAutomorphism::apply: non-finite point");
  if (z.squaredNorm() > 1.0 + 1e-12)
    throw std::domain_error("HyperbolicAutomorphism::apply: point outside the closed ball");
  const Complex denom = sh_ * z[0] + ch_;
  require_nonpole(denom, "HyperbolicAutomorphism::apply");
  CPoint out = z / denom;
  out[0] = (ch_ * z[0] + sh_) / denom;
  return out;
}

CMatrix HyperbolicAutomorphism::jacobian(const CPoint& z) const {
  const Complex denom = sh_ * z[0] + ch_;
  require_nonpole(denom, "HyperbolicAutomorphism::jacobian");
  CMatrix jac = CMatrix::Zero(n_, n_);
  jac(0, 0) = 1.0 / (denom * denom);  // cosh^2 - sinh^2 = 1
  for (int j = 1; j < n_; ++j) {
    jac(j, 0) = -z[j] * sh_ / (denom * denom);
    jac(j, j) = 1.0 / denom;
  }
  return jac;
}

Complex HyperbolicAutomorphism::jacobian_det(const CPoint& z) const {
  const Complex denom = sh_ * z[0] + ch_;
  require_nonpole(denom, "HyperbolicAutomorphism::jacobian_det");
  return std::pow(denom, -static_cast<double>(n_ + 1));
}

SiegelPoint cayley(const CPoint& z) {
  if (z.size() < 1) throw std::invalid_argument("cayley: empty point");
  const Complex denom = 1.0 - z[0];
  require_nonpole(denom, "cayley");
  SiegelPoint w;
  w.w1 = (1.0 + z[0]) / denom;
  w.w_tail = z.tail(z.size() - 1) / denom;
  return w;
}

CPoint cayley_inverse(const SiegelPoint& w) {
  if (!w.in_domain())
    throw std::domain_error("cayley_inverse: point not in the Siegel domain");
  const Complex denom = w.w1 + 1.0;
  require_nonpole(denom, "cayley_inverse");
  CPoint z(w.dim());
  z[0] = (w.w1 - 1.0) / denom;
  z.tail(z.size() - 1) = 2.0 * w.w_tail / denom;
  return z;
}

CMatrix cayley_jacobian(const CPoint& z) {
  const int n = static_cast<int>(z.size());
  const Complex denom = 1.0 - z[0];
  require_nonpole(denom, "cayley_jacobian");
  CMatrix jac = CMatrix::Zero(n, n);
  jac(0, 0) = 2.0 / (denom * denom);
  for (int j = 1; j < n; ++j) {
    jac(j, 0) = z[j] / (denom * denom);
    jac(j, j) = 1.0 / denom;
  }
  return jac;
}

CMatrix cayley_inverse_jacobian(const SiegelPoint& w) {
  const int n = w.dim();
  const Complex denom = w.w1 + 1.0;
  require_nonpole(denom, "cayley_inverse_jacobian");
  CMatrix jac = CMatrix::Zero(n, n);
  jac(0, 0) = 2.0 / (denom * denom);
  for (int j = 1; j < n; ++j) {
    jac(j, 0) = -2.0 * w.w_tail[j - 1] / (denom * denom);
    jac(j, j) = 2.0 / denom;
  }
  return jac;
}

ParabolicAutomorphism::ParabolicAutomorphism(CMatrix U, CPoint a, double im_c)
    : U_(std::move(U)), a_(std::move(a)), im_c_(im_c) {
  const int m = static_cast<int>(a_.size());
  if (U_.rows() != m || U_.cols() != m)
    throw std::invalid_argument("ParabolicAutomorphism: U must be (n-1)x(n-1)");
  if (m > 0) {
    const double dev = (U_.adjoint() * U_ - CMatrix::Identity(m, m)).cwiseAbs().maxCoeff();
    if (dev > 1e-12)
      throw std::invalid_argument("ParabolicAutomorphism: U is not unitary");
  }
  if (!is_finite(a_) || !std::isfinite(im_c))
    throw std::invalid_argument("ParabolicAutomorphism: non-finite parameters");
}

ParabolicAutomorphism::ParabolicAutomorphism(CPoint a, double im_c)
    : ParabolicAutomorphism(CMatrix::Identity(a.size(), a.size()), std::move(a), im_c) {}

SiegelPoint ParabolicAutomorphism::siegel_apply(const SiegelPoint& w) const {
  SiegelPoint out;
  const CPoint rotated = U_ * w.w_tail;
  out.w1 = w.w1 + 2.0 * hermitian_inner(rotated, a_) + c();
  out.w_tail = rotated + a_;
  return out;
}

CPoint ParabolicAutomorphism::apply(const CPoint& z) const {
  if (z.size() != dim()) throw std::invalid_argument("ParabolicAutomorphism::apply: dimension mismatch");
  require_interior(z, "ParabolicAutomorphism::apply");
  return cayley_inverse(siegel_apply(cayley(z)));
}

CMatrix ParabolicAutomorphism::jacobian(const CPoint& z) const {
  const int n = dim();
  const SiegelPoint w = cayley(z);
  CMatrix siegel_jac = CMatrix::Zero(n, n);
  siegel_jac(0, 0) = 1.0;
  if (n > 1) {
    siegel_jac.block(0, 1, 1, n - 1) = 2.0 * (a_.adjoint() * U_);
    siegel_jac.block(1, 1, n - 1, n - 1) = U_;
  }
  return cayley_inverse_jacobian(siegel_apply(w)) * siegel_jac * cayley_jacobian(z);
}

ParabolicAutomorphism ParabolicAutomorphism::inverse() const {
  // Solving (w1 + 2<Uw'',a> + c, Uw'' + a) = w' gives another map of the same
  // family with U* and -U*a; Re of the new c is |a|^2 again.
  const CPoint a_inv = (-(U_.adjoint() * a_)).eval();
  const double im_c_inv = (2.0 * a_.squaredNorm() - c()).imag();
  return {U_.adjoint(), a_inv, im_c_inv};
}

double boundary_ratio(const CPoint& z) {
  require_interior(z, "boundary_ratio");
  return std::norm(1.0 - z[0]) / (1.0 - z.squaredNorm());
}

double normalized_radius(const CPoint& z) {
  const double R = boundary_ratio(z);
  return (1.0 - R) / (1.0 + R);
}

ParabolicAutomorphism normalizing_parabolic(const CPoint& z0) {
  require_interior(z0, "normalizing_parabolic");
  const SiegelPoint w0 = cayley(z0);
  return {(-w0.w_tail).eval(), -w0.w1.imag()};
}

Complex jacobian_det(const MobiusTranslation& t, const CPoint& z) {
  return t.jacobian(z).determinant();
}

Complex jacobian_det(const HyperbolicAutomorphism& t, const CPoint& z) {
  return t.jacobian_det(z);
}

Complex jacobian_det(const ParabolicAutomorphism& t, const CPoint& z) {
  return t.jacobian(z).determinant();
}

}  // namespace holoball
