#pragma once

#include <span>
#include <vector>

#include "holoball/holo_maps.hpp"
#include "holoball/newton.hpp"
#include "holoball/parallel.hpp"
#include "holoball/types.hpp"

namespace holoball {

/// Batch kernels behind the sample sweeps. Each kernel has a plain serial
/// reference implementation (the _serial variant) used by the tests and the
/// benchmark; the primary entry point runs the same per-index computation
/// under OpenMP and must produce identical output.

std::vector<double> distance_pairs(std::span<const CPoint> a, std::span<const CPoint> b,
                                   const ExecPolicy& exec = {});
std::vector<double> distance_pairs_serial(std::span<const CPoint> a,
                                          std::span<const CPoint> b);

/// k(z, pi(z)) per point.
std::vector<double> projection_distances(std::span<const CPoint> pts,
                                         const ExecPolicy& exec = {});
std::vector<double> projection_distances_serial(std::span<const CPoint> pts);

/// min over the set of k(probe_i, set_j) per probe.
std::vector<double> min_distances_to_set(std::span<const CPoint> probes,
                                         std::span<const CPoint> set,
                                         const ExecPolicy& exec = {});
std::vector<double> min_distances_to_set_serial(std::span<const CPoint> probes,
                                                std::span<const CPoint> set);

std::vector<NewtonResult> newton_batch(const HoloMap& f, std::span<const CPoint> targets,
                                       std::span<const CPoint> seeds,
                                       const NewtonOptions& opts = {},
                                       const ExecPolicy& exec = {});
std::vector<NewtonResult> newton_batch_serial(const HoloMap& f,
                                              std::span<const CPoint> targets,
                                              std::span<const CPoint> seeds,
                                              const NewtonOptions& opts = {});

}  // namespace holoball
