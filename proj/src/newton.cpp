#include "holoball/newton.hpp"

#include <cmath>

namespace holoball {

const char* to_string(NewtonStatus s) {
  switch (s) {
    case NewtonStatus::converged: return "converged";
    case NewtonStatus::singular_jacobian: return "singular_jacobian";
    case NewtonStatus::stalled: return "stalled";
    case NewtonStatus::max_iterations: return "max_iterations";
  }
  return "unknown";
}

NewtonResult newton_preimage(const HoloMap& f, const CPoint& target, const CPoint& seed,
                             const NewtonOptions& opts) {
  if (!(opts.tol > 0.0)) throw std::invalid_argument("newton_preimage: tol must be > 0");
  if (!f.in_domain(seed))
    throw std::invalid_argument("newton_preimage: seed outside the map domain");

  NewtonResult result;
  CPoint z = seed;
  double res = (f.eval(z) - target).norm();
  result.z = z;
  result.residual = res;

  for (int iter = 0; iter < opts.max_iter; ++iter) {
    if (res < opts.tol) {
      result.status = NewtonStatus::converged;
      result.z = z;
      result.residual = res;
      result.iterations = iter;
      return result;
    }
    const CMatrix jac = map_jacobian(f, z);
    const Eigen::JacobiSVD<CMatrix> svd(jac, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const double smin = svd.singularValues().minCoeff();
    const double smax = svd.singularValues().maxCoeff();
    if (!(smin > 0.0) || smax / smin > opts.cond_limit) {
      result.status = NewtonStatus::singular_jacobian;
      result.iterations = iter;
      result.note = "condition estimate " +
                    std::to_string(smin > 0.0 ? smax / smin : std::numeric_limits<double>::infinity());
      return result;
    }
    const CPoint step = svd.solve((f.eval(z) - target).eval());

    double lambda = 1.0;
    bool improved = false;
    for (int h = 0; h <= opts.max_halvings; ++h, lambda /= 2.0) {
      const CPoint trial = z - lambda * step;
      if (!f.in_domain(trial)) continue;
      const double trial_res = (f.eval(trial) - target).norm();
      if (trial_res < res) {
        z = trial;
        res = trial_res;
        improved = true;
        break;
      }
    }
    if (!improved) {
      result.status = NewtonStatus::stalled;
      result.z = z;
      result.residual = res;
      result.iterations = iter;
      return result;
    }
    if (res < result.residual) {
      result.z = z;
      result.residual = res;
    }
  }
  if (res < opts.tol) {
    result.status = NewtonStatus::converged;
    result.z = z;
    result.residual = res;
    result.iterations = opts.max_iter;
    return result;
  }
  result.status = NewtonStatus::max_iterations;
  result.iterations = opts.max_iter;
  return result;
}

}  // namespace holoball
