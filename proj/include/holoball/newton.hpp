#pragma once

#include <string>

#include "holoball/holo_maps.hpp"
#include "holoball/types.hpp"

namespace holoball {

struct NewtonOptions {
  double tol = 1e-10;
  int max_iter = 50;
  int max_halvings = 20;
  double cond_limit = 1e12;
};

enum class NewtonStatus {
  converged,
  singular_jacobian,
  stalled,           // damping could not reduce the residual
  max_iterations,
};

const char* to_string(NewtonStatus s);

struct NewtonResult {
  NewtonStatus status = NewtonStatus::max_iterations;
  CPoint z;          // best iterate
  double residual = 0.0;
  int iterations = 0;
  std::string note;

  bool ok() const { return status == NewtonStatus::converged; }
};

/// Damped Newton iteration for f(z) = w. Steps are halved (up to
/// max_halvings) until the residual decreases and the iterate stays in the
/// map's domain; a Jacobian with condition estimate above cond_limit aborts
/// with singular_jacobian. On failure the best iterate and residual are kept.
NewtonResult newton_preimage(const HoloMap& f, const CPoint& target, const CPoint& seed,
                             const NewtonOptions& opts = {});

}  // namespace holoball
