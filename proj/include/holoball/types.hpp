#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace holoball {

using Complex = std::complex<double>;
using CPoint  = Eigen::VectorXcd;
using CMatrix = Eigen::MatrixXcd;

/// Points with 1 - |z|^2 below this are treated as boundary points and
/// rejected by the interior guard.
inline constexpr double kInteriorGuard = 1e-14;

inline bool is_finite(const Complex& v) {
  return std::isfinite(v.real()) && std::isfinite(v.imag());
}

inline bool is_finite(const CPoint& z) {
  for (Eigen::Index i = 0; i < z.size(); ++i)
    if (!is_finite(z[i])) return false;
  return true;
}

inline double squared_norm(const CPoint& z) { return z.squaredNorm(); }

/// Strictly inside the unit ball, with the interior guard applied.
inline bool is_interior(const CPoint& z) {
  return is_finite(z) && z.size() >= 1 && z.squaredNorm() < 1.0 - kInteriorGuard;
}

inline void require_interior(const CPoint& z, const char* who) {
  if (z.size() < 1) throw std::invalid_argument(std::string(who) + ": empty point");
  if (!is_finite(z)) throw std::domain_error(std::string(who) + ": non-finite coordinates");
  if (z.squaredNorm() >= 1.0 - kInteriorGuard)
    throw std::domain_error(std::string(who) + ": point not strictly inside the unit ball");
}

inline void require_same_dim(const CPoint& a, const CPoint& b, const char* who) {
  if (a.size() != b.size())
    throw std::invalid_argument(std::string(who) + ": dimension mismatch");
}

/// Hermitian inner product sum_i a_i * conj(b_i). Conjugate-linear in b.
inline Complex hermitian_inner(const CPoint& a, const CPoint& b) {
  require_same_dim(a, b, "hermitian_inner");
  return (a.array() * b.array().conjugate()).sum();
}

/// First-coordinate projection pi(z) = (z_1, 0, ..., 0).
inline CPoint axis_projection(const CPoint& z) {
  CPoint p = CPoint::Zero(z.size());
  p[0] = z[0];
  return p;
}

inline CPoint unit_vector(int n, int j) {
  CPoint e = CPoint::Zero(n);
  e[j] = 1.0;
  return e;
}

/// zeta * e_1 as a point of C^n.
inline CPoint axis_point(Complex zeta, int n) {
  CPoint z = CPoint::Zero(n);
  z[0] = zeta;
  return z;
}

inline CPoint make_point(std::initializer_list<Complex> coords) {
  CPoint z(static_cast<Eigen::Index>(coords.size()));
  Eigen::Index i = 0;
  for (const auto& c : coords) z[i++] = c;
  return z;
}

}  // namespace holoball
