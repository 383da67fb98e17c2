#include "holoball/kernels.hpp"

#include "holoball/ball_geometry.hpp"

namespace holoball {

std::vector<double> distance_pairs(std::span<const CPoint> a, std::span<const CPoint> b,
                                   const ExecPolicy& exec) {
  if (a.size() != b.size())
    throw std::invalid_argument("distance_pairs: length mismatch");
  std::vector<double> out(a.size());
  par_for(exec, static_cast<std::ptrdiff_t>(a.size()),
          [&](std::size_t i) { out[i] = kobayashi_distance(a[i], b[i]); });
  return out;
}

std::vector<double> distance_pairs_serial(std::span<const CPoint> a,
                                          std::span<const CPoint> b) {
  if (a.size() != b.size())
    throw std::invalid_argument("distance_pairs_serial: length mismatch");
  std::vector<double> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = kobayashi_distance(a[i], b[i]);
  return out;
}

std::vector<double> projection_distances(std::span<const CPoint> pts,
                                         const ExecPolicy& exec) {
  std::vector<double> out(pts.size());
  par_for(exec, static_cast<std::ptrdiff_t>(pts.size()), [&](std::size_t i) {
    out[i] = kobayashi_distance(pts[i], axis_projection(pts[i]));
  });
  return out;
}

std::vector<double> projection_distances_serial(std::span<const CPoint> pts) {
  std::vector<double> out(pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i)
    out[i] = kobayashi_distance(pts[i], axis_projection(pts[i]));
  return out;
}

std::vector<double> min_distances_to_set(std::span<const CPoint> probes,
                                         std::span<const CPoint> set,
                                         const ExecPolicy& exec) {
  std::vector<double> out(probes.size());
  par_for(exec, static_cast<std::ptrdiff_t>(probes.size()),
          [&](std::size_t i) { out[i] = distance_to_sample_set(probes[i], set); });
  return out;
}

std::vector<double> min_distances_to_set_serial(std::span<const CPoint> probes,
                                                std::span<const CPoint> set) {
  std::vector<double> out(probes.size());
  for (std::size_t i = 0; i < probes.size(); ++i)
    out[i] = distance_to_sample_set(probes[i], set);
  return out;
}

std::vector<NewtonResult> newton_batch(const HoloMap& f, std::span<const CPoint> targets,
                                       std::span<const CPoint> seeds,
                                       const NewtonOptions& opts, const ExecPolicy& exec) {
  if (targets.size() != seeds.size())
    throw std::invalid_argument("newton_batch: length mismatch");
  std::vector<NewtonResult> out(targets.size());
  par_for(exec, static_cast<std::ptrdiff_t>(targets.size()),
          [&](std::size_t i) { out[i] = newton_preimage(f, targets[i], seeds[i], opts); });
  return out;
}

std::vector<NewtonResult> newton_batch_serial(const HoloMap& f,
                                              std::span<const CPoint> targets,
                                              std::span<const CPoint> seeds,
                                              const NewtonOptions& opts) {
  if (targets.size() != seeds.size())
    throw std::invalid_argument("newton_batch_serial: length mismatch");
  std::vector<NewtonResult> out(targets.size());
  for (std::size_t i = 0; i < targets.size(); ++i)
    out[i] = newton_preimage(f, targets[i], seeds[i], opts);
  return out;
}

}  // namespace holoball
