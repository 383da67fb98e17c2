#pragma once

#include <cstddef>
#include <utility>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace holoball {

/// Worker budget for data-parallel sweeps. jobs == 1 runs the serial path,
/// jobs == 0 uses every available core. Results must be written per-index so
/// outputs do not depend on the schedule.
struct ExecPolicy {
  int jobs = 0;

  static ExecPolicy serial() { return ExecPolicy{1}; }
  static ExecPolicy all() { return ExecPolicy{0}; }

  bool parallel() const {
#ifdef _OPENMP
    return jobs != 1;
#else
    return false;
#endif
  }
};

template <class F>
void par_for(const ExecPolicy& policy, std::ptrdiff_t n, F&& body) {
#ifdef _OPENMP
  if (policy.parallel()) {
    if (policy.jobs > 0) {
#pragma omp parallel for schedule(static) num_threads(policy.jobs)
      for (std::ptrdiff_t i = 0; i < n; ++i) body(static_cast<std::size_t>(i));
    } else {
#pragma omp parallel for schedule(static)
      for (std::ptrdiff_t i = 0; i < n; ++i) body(static_cast<std::size_t>(i));
    }
    return;
  }
#endif
  for (std::ptrdiff_t i = 0; i < n; ++i) body(static_cast<std::size_t>(i));
}

}  // namespace holoball
