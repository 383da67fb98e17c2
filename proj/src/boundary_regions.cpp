#include "holoball/boundary_regions.hpp"

#include <algorithm>
#include <cmath>

#include "holoball/ball_geometry.hpp"

namespace holoball {

ConeSpec::ConeSpec(double amplitude) : M(amplitude) {
  if (!(M > 1.0)) throw std::invalid_argument("ConeSpec: amplitude must be > 1");
}

KoranyiSpec::KoranyiSpec(double amplitude) : R(amplitude) {
  if (!(R >= 1.0)) throw std::invalid_argument("KoranyiSpec: amplitude must be >= 1");
}

StolzSpec::StolzSpec(double amplitude, double diameter) : M(amplitude), s(diameter) {
  if (!(M > 1.0)) throw std::invalid_argument("StolzSpec: amplitude must be > 1");
  if (!(s > 0.0 && s <= 2.0)) throw std::invalid_argument("StolzSpec: diameter must be in (0, 2]");
}

AdmissibleWitness::AdmissibleWitness(double eps, double del, double amplitude)
    : epsilon(eps), delta(del), M(amplitude) {
  if (!(epsilon > 0.0) || !(delta > 0.0) || !(M > 1.0))
    throw std::invalid_argument("AdmissibleWitness: need epsilon, delta > 0 and M > 1");
}

bool in_cone(const ConeSpec& spec, const CPoint& z) {
  require_interior(z, "in_cone");
  CPoint e1 = unit_vector(static_cast<int>(z.size()), 0);
  return (e1 - z).norm() < spec.M * (1.0 - z.norm());
}

bool in_koranyi(const KoranyiSpec& spec, const CPoint& z) {
  require_interior(z, "in_koranyi");
  return std::abs(1.0 - z[0]) <= spec.R * (1.0 - z.norm());
}

bool in_stolz(const StolzSpec& spec, Complex zeta) {
  const double mod = std::abs(zeta);
  if (mod >= 1.0) return false;
  const double gap = std::abs(1.0 - zeta);
  return gap / (1.0 - mod) < spec.M && gap < spec.s;
}

std::vector<Complex> stolz_grid(const StolzSpec& spec, int k_max, int rays) {
  if (k_max < 1 || rays < 1)
    throw std::invalid_argument("stolz_grid: k_max and rays must be >= 1");
  // Aperture limited by |1-zeta|/(1-|zeta|) -> 1/cos(theta) along 1 - rho e^{i theta}.
  const double theta_max = 0.95 * std::acos(1.0 / spec.M);
  std::vector<Complex> grid;
  grid.reserve(static_cast<std::size_t>(k_max) * rays);
  for (int k = 1; k <= k_max; ++k) {
    const double rho = spec.s * std::pow(2.0, -k);
    for (int j = 0; j < rays; ++j) {
      const double theta =
          rays == 1 ? 0.0 : theta_max * (2.0 * j / (rays - 1.0) - 1.0);
      const Complex zeta = 1.0 - rho * std::polar(1.0, theta);
      if (in_stolz(spec, zeta)) grid.push_back(zeta);
    }
  }
  if (grid.empty()) throw std::runtime_error("stolz_grid: parameters exclude every point");
  return grid;
}

double cone_admissibility_margin(const ConeSpec& spec, const CPoint& z) {
  require_interior(z, "cone_admissibility_margin");
  if (!in_cone(spec, z))
    throw std::domain_error("cone_admissibility_margin: point not in the cone");
  const double denom = 1.0 - std::norm(z[0]);
  if (!(denom > 0.0)) throw std::domain_error("cone_admissibility_margin: |z_1| >= 1");
  return (z - axis_projection(z)).squaredNorm() / denom;
}

double lemma_cone_delta(double eps, double M) {
  if (!(eps > 0.0) || !(M > 1.0)) throw std::invalid_argument("lemma_cone_delta");
  const double t = std::tanh(eps);
  return t * t / M;
}

AdmissibilityReport admissibility_check(const AdmissibleWitness& witness,
                                        std::span<const CPoint> samples) {
  AdmissibilityReport report;
  report.rows.reserve(samples.size());
  const ConeSpec cone(witness.M);
  for (const CPoint& z : samples) {
    require_interior(z, "admissibility_check");
    if (std::norm(z[0]) >= 1.0)
      throw std::domain_error("admissibility_check: sample with |z_1| >= 1");
    AdmissibilitySample row;
    row.z = z;
    const int n = static_cast<int>(z.size());
    row.in_range = (unit_vector(n, 0) - z).norm() < witness.delta;
    const CPoint proj = axis_projection(z);
    row.projection_in_cone = in_cone(cone, proj);
    row.distance_to_projection = kobayashi_distance(z, proj);
    if (row.in_range) {
      ++report.in_range_count;
      row.ok = row.projection_in_cone && row.distance_to_projection < witness.epsilon;
      report.admissible = report.admissible && row.ok;
      report.max_distance = std::max(report.max_distance, row.distance_to_projection);
      // smallest amplitude whose cone contains this projection
      const double quot = std::abs(1.0 - z[0]) / (1.0 - std::abs(z[0]));
      report.min_required_amplitude = std::max(report.min_required_amplitude, quot);
    }
    report.rows.push_back(std::move(row));
  }
  return report;
}

}  // namespace holoball
