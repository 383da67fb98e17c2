#pragma once

#include <span>
#include <vector>

#include "holoball/types.hpp"

namespace holoball {

/// Kobayashi distance on the unit ball,
///   k(a, b) = (1/2) log((1 + |T_a(b)|) / (1 - |T_a(b)|)) = atanh |T_a(b)|.
/// Both points must be strictly interior.
double kobayashi_distance(const CPoint& a, const CPoint& b);

/// Right-hand side of the special-projection identity
///   |T_a(pi(a))|^2 = |a - pi(a)|^2 / (1 - |pi(a)|^2).
double special_projection_norm(const CPoint& a);

struct KobayashiBallSpec {
  CPoint center;
  double radius = 0.0;  // Kobayashi-distance units

  KobayashiBallSpec(CPoint c, double r);
};

bool in_kobayashi_ball(const KobayashiBallSpec& spec, const CPoint& z);

/// min over the samples of k(z, sample); a finite-sample upper bound for the
/// distance to the sampled set.
double distance_to_sample_set(const CPoint& z, std::span<const CPoint> samples);

}  // namespace holoball
