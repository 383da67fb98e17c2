#pragma once

#include <string>
#include <vector>

#include "holoball/holo_maps.hpp"

namespace holoball {

/// Identifiers of the built-in maps, in registry order.
const std::vector<std::string>& gallery_ids();

/// Builds a gallery map by id. Maps specific to the two-dimensional ball
/// (thin_proj, thin_sq, section4_ball, mobius, parabolic_std) reject n != 2.
///
///   identity             z -> z
///   half_shrink          (z1, z'') -> (z1, z''/2)
///   thin_proj            (z1, z2) -> (z1, 0)
///   thin_sq              (z1, z2) -> (z1, z2 (1 - z1)^2 / 4)
///   hyperbolic_t1        hyperbolic automorphism, t0 = 1
///   hyperbolic_half_log3 hyperbolic automorphism, t0 = log(3)/2
///   mobius               Mobius translation at a = (0.3, 0.2i)
///   parabolic_std        normalizing parabolic of z0 = (0.5, 0.3)
///   section4_ball        the H^2 construction conjugated to the ball
///                        (stand-in phi, delta = 1, eps = 0.5)
HoloMap gallery_map(const std::string& id, int n = 2);

bool is_gallery_id(const std::string& id);

}  // namespace holoball
