#include "holoball/holo_maps.hpp"

#include <algorithm>
#include <cmath>

#include "holoball/boundary_regions.hpp"
#include "holoball/rng.hpp"

namespace holoball {

bool HoloMap::in_domain(const CPoint& z) const {
  if (domain_guard) return domain_guard(z);
  return is_interior(z);
}

CPoint evaluate(const HoloMap& f, const CPoint& z) {
  if (z.size() != f.dim)
    throw std::invalid_argument("evaluate(" + f.id + "): dimension mismatch");
  if (!f.in_domain(z))
    throw std::domain_error("evaluate(" + f.id + "): point outside the map domain");
  CPoint out = f.eval(z);
  if (!is_finite(out))
    throw std::domain_error("evaluate(" + f.id + "): non-finite output");
  if (!f.in_domain(out))
    throw std::domain_error("evaluate(" + f.id + "): image left the domain");
  return out;
}

namespace {

double default_step(const HoloMap& f, const CPoint& z) {
  if (f.step_hint) return f.step_hint(z);
  if (f.domain_guard) return 1e-6;
  return std::min(1e-6, (1.0 - z.norm()) / 10.0);
}

}  // namespace

CMatrix numeric_jacobian(const HoloMap& f, const CPoint& z, double h) {
  const int n = f.dim;
  if (h <= 0.0) h = default_step(f, z);
  for (int halving = 0; halving <= 5; ++halving, h /= 2.0) {
    bool stencil_ok = true;
    CMatrix jac(n, n);
    for (int j = 0; j < n && stencil_ok; ++j) {
      CPoint zp = z, zm = z;
      zp[j] += h;
      zm[j] -= h;
      if (!f.in_domain(zp) || !f.in_domain(zm)) {
        stencil_ok = false;
        break;
      }
      jac.col(j) = (f.eval(zp) - f.eval(zm)) / (2.0 * h);
    }
    if (stencil_ok) return jac;
  }
  throw std::domain_error("numeric_jacobian(" + f.id + "): stencil leaves the domain");
}

CMatrix map_jacobian(const HoloMap& f, const CPoint& z) {
  if (f.analytic_jacobian) return f.analytic_jacobian(z);
  return numeric_jacobian(f, z);
}

HoloMap make_checked(HoloMap f, int interior_samples, int jacobian_samples,
                     std::uint64_t seed) {
  if (!f.eval) throw std::invalid_argument("make_checked: evaluator missing");
  if (f.domain_guard) {
    // Non-ball domains supply their own sampling story; nothing generic to do.
    return f;
  }
  Rng rng(seed);
  for (int i = 0; i < interior_samples; ++i) {
    const CPoint z = rng.in_ball(f.dim, 0.999);
    const CPoint w = f.eval(z);
    if (!is_finite(w) || w.squaredNorm() >= 1.0)
      throw std::domain_error("make_checked(" + f.id + "): image left the unit ball");
  }
  if (f.analytic_jacobian) {
    for (int i = 0; i < jacobian_samples; ++i) {
      const CPoint z = rng.in_ball(f.dim, 0.9);
      const double dev =
          (f.analytic_jacobian(z) - numeric_jacobian(f, z)).cwiseAbs().maxCoeff();
      if (dev > 1e-6)
        throw std::domain_error("make_checked(" + f.id +
                                "): analytic and numeric Jacobians disagree");
    }
  }
  return f;
}

DilationEstimate dilation_estimate(const HoloMap& f, int k_max) {
  if (k_max < 1 || k_max > 40)
    throw std::invalid_argument("dilation_estimate: k_max must be in [1, 40]");
  DilationEstimate est;
  const CPoint e1 = unit_vector(f.dim, 0);
  est.alpha_hat = std::numeric_limits<double>::infinity();
  for (int k = 1; k <= k_max; ++k) {
    const double gap = std::pow(2.0, -k);
    const CPoint z = axis_point(1.0 - gap, f.dim);
    const CPoint w = evaluate(f, z);
    const double quotient = (1.0 - w.norm()) / gap;
    est.radii.push_back(1.0 - gap);
    est.per_radius.push_back(quotient);
    est.distance_to_e1.push_back((w - e1).norm());
    est.alpha_hat = std::min(est.alpha_hat, quotient);
  }
  est.radial_limit_e1 = est.distance_to_e1.back() < 1e-3;
  return est;
}

SuperRegularityEstimate super_regularity_estimate(const HoloMap& f, double M, int k_max,
                                                  int rays, double floor) {
  if (!(M > 1.0)) throw std::invalid_argument("super_regularity_estimate: M must be > 1");
  SuperRegularityEstimate est;
  est.M = M;
  est.floor = floor;
  est.grid = stolz_grid(StolzSpec(M, 2.0), k_max, rays);
  est.per_sample_det.reserve(est.grid.size());
  double deepest_rho = std::abs(1.0 - est.grid.back());
  est.c_hat = std::numeric_limits<double>::infinity();
  for (const Complex& zeta : est.grid) {
    const CPoint z = axis_point(zeta, f.dim);
    const double det = std::abs(map_jacobian(f, z).determinant());
    est.per_sample_det.push_back(det);
    // deepest dyadic generation: same modulus of 1 - zeta up to the ray sweep
    if (std::abs(1.0 - zeta) < 1.5 * deepest_rho) est.c_hat = std::min(est.c_hat, det);
  }
  est.dilation = dilation_estimate(f, std::min(k_max, 40));
  est.verdict = est.c_hat > floor && std::isfinite(est.dilation.alpha_hat) &&
                est.dilation.radial_limit_e1;
  return est;
}

JwcReport jwc_limit_checks(const HoloMap& f, double M, int k_max, int rays,
                           double limit_tolerance, double s) {
  JwcReport report;
  report.limit_tolerance = limit_tolerance;
  report.alpha_hat = dilation_estimate(f, std::min(k_max, 40)).alpha_hat;
  const double alpha = report.alpha_hat;

  const StolzSpec spec(M, s);
  const int n = f.dim;

  struct Quantity {
    std::string name;
    bool has_target;
    double target;
    bool bounded_only;
    std::function<Complex(const CPoint&, const CPoint&, const CMatrix&)> value;
  };
  // value(z, f(z), df_z); for j-indexed items the max over j >= 2 is taken by
  // evaluating each j and keeping the largest modulus.
  auto sqrt_gap = [](const CPoint& z) { return std::sqrt(Complex(1.0) - z[0]); };

  std::vector<Quantity> quantities;
  quantities.push_back({"(1') <df(e1),e1> bounded", false, 0.0, true,
                        [](const CPoint&, const CPoint&, const CMatrix& J) { return J(0, 0); }});
  quantities.push_back({"(1'') <df(ej),e1>/(1-z1)^{1/2} bounded", false, 0.0, true,
                        [&, n](const CPoint& z, const CPoint&, const CMatrix& J) {
                          Complex worst = 0.0;
                          for (int j = 1; j < n; ++j) {
                            const Complex v = J(0, j) / sqrt_gap(z);
                            if (std::abs(v) > std::abs(worst)) worst = v;
                          }
                          return worst;
                        }});
  quantities.push_back({"(1''') (1-z1)^{1/2}<df(e1),ej> bounded", false, 0.0, true,
                        [&, n](const CPoint& z, const CPoint&, const CMatrix& J) {
                          Complex worst = 0.0;
                          for (int j = 1; j < n; ++j) {
                            const Complex v = sqrt_gap(z) * J(j, 0);
                            if (std::abs(v) > std::abs(worst)) worst = v;
                          }
                          return worst;
                        }});
  quantities.push_back({"(2) (1-<f,e1>)/(1-z1) -> alpha", true, alpha, false,
                        [](const CPoint& z, const CPoint& w, const CMatrix&) {
                          return (1.0 - w[0]) / (1.0 - z[0]);
                        }});
  quantities.push_back({"(3) <df(e1),e1> -> alpha", true, alpha, false,
                        [](const CPoint&, const CPoint&, const CMatrix& J) { return J(0, 0); }});
  quantities.push_back({"(4) <df(ej),e1> -> 0", true, 0.0, false,
                        [n](const CPoint&, const CPoint&, const CMatrix& J) {
                          Complex worst = 0.0;
                          for (int j = 1; j < n; ++j)
                            if (std::abs(J(0, j)) > std::abs(worst)) worst = J(0, j);
                          return worst;
                        }});
  quantities.push_back({"(5) <f,ej>/(1-z1)^{1/2} -> 0", true, 0.0, false,
                        [&, n](const CPoint& z, const CPoint& w, const CMatrix&) {
                          Complex worst = 0.0;
                          for (int j = 1; j < n; ++j) {
                            const Complex v = w[j] / sqrt_gap(z);
                            if (std::abs(v) > std::abs(worst)) worst = v;
                          }
                          return worst;
                        }});
  quantities.push_back({"(6) (1-z1)^{1/2}<df(e1),ej> -> 0", true, 0.0, false,
                        [&, n](const CPoint& z, const CPoint&, const CMatrix& J) {
                          Complex worst = 0.0;
                          for (int j = 1; j < n; ++j) {
                            const Complex v = sqrt_gap(z) * J(j, 0);
                            if (std::abs(v) > std::abs(worst)) worst = v;
                          }
                          return worst;
                        }});

  for (auto& q : quantities) {
    JwcItem item;
    item.name = q.name;
    item.has_target = q.has_target;
    item.target = q.target;
    const int radial_ray = (rays - 1) / 2;
    for (int k = 1; k <= k_max; ++k) {
      const double rho = spec.s * std::pow(2.0, -k);
      double gen_dev = 0.0;
      for (int j = 0; j < rays; ++j) {
        const double theta_max = 0.95 * std::acos(1.0 / spec.M);
        const double theta = rays == 1 ? 0.0 : theta_max * (2.0 * j / (rays - 1.0) - 1.0);
        const Complex zeta = 1.0 - rho * std::polar(1.0, theta);
        if (!in_stolz(spec, zeta)) continue;
        const CPoint z = axis_point(zeta, f.dim);
        const CPoint w = evaluate(f, z);
        const CMatrix jac = map_jacobian(f, z);
        const Complex v = q.value(z, w, jac);
        item.grid_max_abs = std::max(item.grid_max_abs, std::abs(v));
        const double dev = q.has_target ? std::abs(v - Complex(q.target)) : std::abs(v);
        gen_dev = std::max(gen_dev, dev);
        if (j == radial_ray) item.last_value = v;
      }
      item.per_generation.push_back(gen_dev);
    }
    item.last_deviation = item.per_generation.back();
    item.verdict = q.bounded_only ? std::isfinite(item.grid_max_abs)
                                  : item.last_deviation < limit_tolerance;
    report.items.push_back(std::move(item));
  }
  report.all_ok = std::all_of(report.items.begin(), report.items.end(),
                              [](const JwcItem& it) { return it.verdict; });
  return report;
}

}  // namespace holoball
