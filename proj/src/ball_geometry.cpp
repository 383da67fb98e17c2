#include "holoball/ball_geometry.hpp"

#include <algorithm>
#include <cmath>

#include "holoball/automorphisms.hpp"

namespace holoball {

double kobayashi_distance(const CPoint& a, const CPoint& b) {
  require_same_dim(a, b, "kobayashi_distance");
  require_interior(a, "kobayashi_distance");
  require_interior(b, "kobayashi_distance");
  const MobiusTranslation t(a);
  const double u = t(b).norm();
  return std::atanh(std::min(u, 1.0 - 1e-17));
}

double special_projection_norm(const CPoint& a) {
  require_interior(a, "special_projection_norm");
  const CPoint p = axis_projection(a);
  return (a - p).squaredNorm() / (1.0 - p.squaredNorm());
}

KobayashiBallSpec::KobayashiBallSpec(CPoint c, double r) : center(std::move(c)), radius(r) {
  require_interior(center, "KobayashiBallSpec");
  if (!(r >= 0.0)) throw std::invalid_argument("KobayashiBallSpec: radius must be >= 0");
}

bool in_kobayashi_ball(const KobayashiBallSpec& spec, const CPoint& z) {
  return kobayashi_distance(spec.center, z) < spec.radius;
}

double distance_to_sample_set(const CPoint& z, std::span<const CPoint> samples) {
  if (samples.empty())
    throw std::invalid_argument("distance_to_sample_set: empty sample list");
  double best = std::numeric_limits<double>::infinity();
  for (const CPoint& s : samples) best = std::min(best, kobayashi_distance(z, s));
  return best;
}

}  // namespace holoball
