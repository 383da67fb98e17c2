#include "holoball/range_verifier.hpp"

#include <algorithm>
#include <cmath>

#include "holoball/ball_geometry.hpp"
#include "holoball/boundary_regions.hpp"

namespace holoball {

RenormalizedMap::RenormalizedMap(HoloMap base, Complex zeta, double M, double s)
    : base_(std::move(base)),
      zeta_(zeta),
      x_(axis_point(zeta, base_.dim)),
      y_(CPoint()),
      S_(CPoint::Zero(base_.dim - 1), 0.0),
      T_(CPoint::Zero(base_.dim - 1), 0.0),
      phi0_(0.0, base_.dim),
      phi1_(0.0, base_.dim) {
  if (!in_stolz(StolzSpec(M, s), zeta))
    throw std::invalid_argument("RenormalizedMap: zeta outside the Stolz angle");
  y_ = evaluate(base_, x_);
  const double R0 = boundary_ratio(x_);
  const double R1 = boundary_ratio(y_);
  if (!(R0 > 0.0) || !(R1 > 0.0) || !std::isfinite(R0) || !std::isfinite(R1))
    throw std::domain_error("RenormalizedMap: degenerate boundary ratio");
  t0_ = -0.5 * std::log(R0);
  t1_ = -0.5 * std::log(R1);
  S_ = normalizing_parabolic(x_);
  T_ = normalizing_parabolic(y_);
  phi0_ = HyperbolicAutomorphism(t0_, base_.dim);
  phi1_ = HyperbolicAutomorphism(t1_, base_.dim);
}

CPoint RenormalizedMap::apply(const CPoint& u) const {
  const CPoint a = phi0_(u);
  const CPoint b = S_.inverse()(a);
  const CPoint c = evaluate(base_, b);
  const CPoint d = T_(c);
  return phi1_.inverse()(d);
}

HoloMap RenormalizedMap::as_holomap() const {
  HoloMap map;
  map.id = base_.id + "_renormalized";
  map.dim = base_.dim;
  const RenormalizedMap self = *this;
  map.eval = [self](const CPoint& u) { return self.apply(u); };
  return map;
}

RenormalizedMap::ChainFactors RenormalizedMap::chain_factors() const {
  ChainFactors factors;
  const CPoint r1e1 = axis_point(normalized_radius(y_), base_.dim);
  factors.phi1_inv = phi1_.inverse().jacobian_det(r1e1);
  factors.dT = jacobian_det(T_, y_);
  factors.df = map_jacobian(base_, x_).determinant();
  const CPoint r0e1 = axis_point(normalized_radius(x_), base_.dim);
  factors.dS_inv = S_.inverse().jacobian(r0e1).determinant();
  factors.phi0 = phi0_.jacobian_det(CPoint::Zero(base_.dim));
  return factors;
}

RenormBoundReport renorm_determinant_bound(const HoloMap& f, double M, double s,
                                           std::span<const Complex> grid, double c_hat,
                                           double alpha_hat, double match_tol) {
  RenormBoundReport report;
  report.M = M;
  report.s = s;
  report.c_hat = c_hat;
  report.alpha_hat = alpha_hat;
  const int n = f.dim;
  const double exponent = n + 1.0;
  // asymptotic floor on (cosh t1 / cosh t0)^{n+1}: the displayed bound with
  // (1-|f|^2)/(1-|zeta|^2) >= alpha/4 and |1-f1|/|1-zeta| <= 2 alpha
  report.rows.reserve(grid.size());
  for (const Complex& zeta : grid) {
    const RenormalizedMap renorm(f, zeta, M, s);
    RenormBoundRow row;
    row.zeta = zeta;
    const auto factors = renorm.chain_factors();
    row.chain_abs = std::abs(factors.product());
    row.direct_abs =
        std::abs(numeric_jacobian(renorm.as_holomap(), CPoint::Zero(n), 1e-5).determinant());
    row.dS_abs = std::abs(jacobian_det(normalizing_parabolic(renorm.curve_point()),
                                       renorm.curve_point()));
    row.dT_abs = std::abs(factors.dT);
    row.cosh_ratio = std::cosh(renorm.t1()) / std::cosh(renorm.t0());

    const CPoint& y = renorm.image_point();
    const double image_gap = std::abs(1.0 - y[0]);
    const double quotient = (1.0 - y.squaredNorm()) / (1.0 - std::norm(zeta));
    row.ratio_floor = 1.0 / (1.0 + M * s) * (std::abs(1.0 - zeta) / image_gap) *
                      std::sqrt(quotient);
    row.det_floor = (c_hat / 4.0) * std::pow(row.cosh_ratio, exponent);
    row.c_prime_floor = std::pow(
        (1.0 / (1.0 + M * s)) * (1.0 / (2.0 * alpha_hat)) * std::sqrt(alpha_hat / 4.0),
        exponent);

    row.chain_matches = std::abs(row.chain_abs - row.direct_abs) < match_tol;
    row.bound_holds = row.chain_abs >= row.det_floor - 1e-6;
    row.floor_holds =
        row.cosh_ratio >= row.ratio_floor - 1e-12 &&
        std::pow(row.cosh_ratio, exponent) >= row.c_prime_floor - 1e-12;
    report.rows.push_back(row);
  }
  auto all = [&](auto pred) {
    return std::all_of(report.rows.begin(), report.rows.end(), pred);
  };
  report.all_chain_match = all([](const RenormBoundRow& r) { return r.chain_matches; });
  report.all_bounds_hold = all([](const RenormBoundRow& r) { return r.bound_holds; });
  report.all_floors_hold = all([](const RenormBoundRow& r) { return r.floor_holds; });
  return report;
}

bool CurveDistanceReport::monotone_nonincreasing(double tol) const {
  for (std::size_t i = 1; i < rows.size(); ++i)
    if (rows[i].max_distance > rows[i - 1].max_distance + tol) return false;
  return true;
}

CurveDistanceReport curve_distance_suite(const HoloMap& f, double M, double t,
                                         std::span<const double> s_list, int probe_depth,
                                         int rays, int substeps, int octaves,
                                         const ExecPolicy& exec) {
  if (!(M > 1.0) || !(t > 0.0 && t < 1.0))
    throw std::invalid_argument("curve_distance_suite: need M > 1 and t in (0, 1)");
  if (probe_depth < 1 || rays < 1 || substeps < 1 || octaves < 1)
    throw std::invalid_argument("curve_distance_suite: counts must be >= 1");

  CurveDistanceReport report;
  report.M = M;
  report.t = t;
  report.substeps = substeps;
  report.rays = rays;

  const double theta_max = 0.95 * std::acos(1.0 / M);
  auto ray_angle = [&](int j) {
    return rays == 1 ? 0.0 : theta_max * (2.0 * j / (rays - 1.0) - 1.0);
  };

  // dense image curve: radii t 2^{-m/substeps} on the shared ray family
  const StolzSpec curve_spec(M, t);
  std::vector<CPoint> image;
  for (int m = substeps; m <= substeps * octaves; ++m) {
    const double rho = t * std::pow(2.0, -static_cast<double>(m) / substeps);
    for (int j = 0; j < rays; ++j) {
      const Complex zeta = 1.0 - rho * std::polar(1.0, ray_angle(j));
      if (!in_stolz(curve_spec, zeta)) continue;
      image.push_back(evaluate(f, axis_point(zeta, f.dim)));
    }
  }
  report.curve_points = static_cast<int>(image.size());

  for (double s : s_list) {
    const StolzSpec probe_spec(M, s);
    std::vector<CPoint> probes;
    for (int k = 1; k <= probe_depth; ++k) {
      const double rho = s * std::pow(2.0, -k);
      for (int j = 0; j < rays; ++j) {
        const Complex zeta = 1.0 - rho * std::polar(1.0, ray_angle(j));
        if (in_stolz(probe_spec, zeta)) probes.push_back(axis_point(zeta, f.dim));
      }
    }
    std::vector<double> dist(probes.size(), 0.0);
    par_for(exec, static_cast<std::ptrdiff_t>(probes.size()), [&](std::size_t i) {
      dist[i] = distance_to_sample_set(probes[i], image);
    });
    CurveDistanceRow row;
    row.s = s;
    row.probes = static_cast<int>(probes.size());
    row.max_distance = dist.empty() ? 0.0 : *std::max_element(dist.begin(), dist.end());
    report.rows.push_back(row);
  }
  return report;
}

KoebeProbe::KoebeProbe(double c, double t_prime, std::vector<HoloMap> maps)
    : c_(c), t_prime_(t_prime), maps_(std::move(maps)) {
  if (!(c_ > 0.0)) throw std::invalid_argument("KoebeProbe: c must be > 0");
  if (!(t_prime_ > 0.0 && t_prime_ < 1.0))
    throw std::invalid_argument("KoebeProbe: t' must be in (0, 1)");
  if (maps_.empty()) throw std::invalid_argument("KoebeProbe: no probed maps");
  for (const HoloMap& f : maps_) {
    const CPoint zero = CPoint::Zero(f.dim);
    if (evaluate(f, zero).norm() > 1e-12)
      throw std::invalid_argument("KoebeProbe: map " + f.id + " does not fix 0");
    if (std::abs(map_jacobian(f, zero).determinant()) < c_)
      throw std::invalid_argument("KoebeProbe: map " + f.id + " has |det df_0| < c");
  }
}

double koebe_radius_probe(const KoebeProbe& probe, int boundary_samples, std::uint64_t seed,
                          double bisect_tol, const ExecPolicy& exec) {
  const double t_prime = probe.t_prime();
  NewtonOptions newton;
  newton.tol = 1e-10;

  auto covered = [&](double rho) {
    for (const HoloMap& f : probe.maps()) {
      std::vector<std::uint8_t> ok(boundary_samples, 0);
      par_for(exec, boundary_samples, [&](std::size_t i) {
        Rng rng = Rng::substream(seed, i);
        const CPoint target = rng.in_ball(f.dim, 1.0) * rho;
        NewtonResult res = newton_preimage(f, target, CPoint::Zero(f.dim), newton);
        if (!res.ok()) {
          // fallback seed: the target itself scaled into the probe ball
          res = newton_preimage(f, target, (target * (t_prime / 2.0)).eval(), newton);
        }
        ok[i] = res.ok() && res.z.norm() < t_prime;
      });
      if (std::find(ok.begin(), ok.end(), 0) != ok.end()) return false;
    }
    return true;
  };

  double lo = 0.0, hi = t_prime;
  if (covered(hi)) return hi;
  while (hi - lo > bisect_tol) {
    const double mid = 0.5 * (lo + hi);
    (covered(mid) ? lo : hi) = mid;
  }
  return lo;
}

namespace {

Complex draw_stolz_point(Rng& rng, double M, double s) {
  const double theta_max = std::acos(1.0 / M);
  for (int tries = 0; tries < 10000; ++tries) {
    // dyadic-biased radius so the curve reaches deep toward the vertex
    const double rho = s * std::pow(2.0, -rng.uniform(1.0, 12.0));
    const double theta = rng.uniform(-theta_max, theta_max);
    const Complex zeta = 1.0 - rho * std::polar(1.0, theta);
    if (in_stolz(StolzSpec(M, s), zeta)) return zeta;
  }
  throw std::runtime_error("draw_stolz_point: rejection failed");
}

}  // namespace

CoverageReport coverage_check(const HoloMap& f, const CoverageParams& params,
                              const ExecPolicy& exec, std::span<const CPoint> extra_targets) {
  if (!(params.r > 0.0) || !(params.eta > 0.0) || params.curve_samples < 1 ||
      params.ball_samples < 1)
    throw std::invalid_argument("coverage_check: invalid parameters");

  CoverageReport report;
  report.params = params;
  const int n = f.dim;
  const CPoint e1 = unit_vector(n, 0);
  const double euclid_r = std::tanh(params.r);

  struct Task {
    int curve_index;
    Complex zeta;
    CPoint seed;
    CPoint target;
  };
  std::vector<Task> tasks;
  tasks.reserve(static_cast<std::size_t>(params.curve_samples) * params.ball_samples +
                extra_targets.size());

  for (int j = 0; j < params.curve_samples; ++j) {
    Rng rng = Rng::substream(params.seed, 1000003ull + j);
    const Complex zeta = draw_stolz_point(rng, params.M, params.s);
    const CPoint x = axis_point(zeta, n);
    const CPoint center = evaluate(f, x);
    const MobiusTranslation push(center);
    for (int b = 0; b < params.ball_samples; ++b) {
      const CPoint u = rng.in_ball(n, 1.0) * euclid_r;
      tasks.push_back({j, zeta, x, push(u)});
    }
  }
  for (const CPoint& w : extra_targets) {
    // obstruction probes supplied by the caller; seeded from their projection
    Rng rng = Rng::substream(params.seed, 2000003ull);
    const Complex zeta = draw_stolz_point(rng, params.M, params.s);
    tasks.push_back({-1, zeta, axis_point(zeta, n), w});
  }

  report.records.assign(tasks.size(), CoverageRecord{});
  auto solve_one = [&](std::size_t i, const CPoint& seed, bool fallback) {
    const Task& task = tasks[i];
    CoverageRecord rec;
    rec.curve_index = task.curve_index;
    rec.zeta = task.zeta;
    rec.target = task.target;
    rec.used_fallback_seed = fallback;
    const NewtonResult res = newton_preimage(f, task.target, seed, params.newton);
    rec.status = res.status;
    rec.residual = res.residual;
    rec.preimage = res.z;
    if (res.ok()) {
      rec.interior = is_interior(res.z);
      rec.in_eta_ball = (res.z - e1).norm() < params.eta;
      rec.reverified = (evaluate(f, res.z) - task.target).norm() < 10.0 * params.newton.tol;
      rec.hit = rec.interior && rec.in_eta_ball && rec.reverified;
    }
    return rec;
  };

  par_for(exec, static_cast<std::ptrdiff_t>(tasks.size()),
          [&](std::size_t i) { report.records[i] = solve_one(i, tasks[i].seed, false); });

  // one fallback: retry misses from the first successful preimage of the same
  // curve point, in deterministic index order
  for (std::size_t i = 0; i < tasks.size(); ++i) {
    if (report.records[i].hit) continue;
    for (std::size_t k = 0; k < tasks.size(); ++k) {
      if (tasks[k].curve_index == tasks[i].curve_index && report.records[k].hit) {
        const CoverageRecord retry = solve_one(i, report.records[k].preimage, true);
        if (retry.hit) report.records[i] = retry;
        break;
      }
    }
  }

  for (std::size_t i = 0; i < report.records.size(); ++i) {
    if (report.records[i].hit)
      ++report.hits;
    else
      report.failure_indices.push_back(i);
  }
  report.hit_ratio =
      report.records.empty() ? 0.0 : static_cast<double>(report.hits) / report.records.size();
  return report;
}

SetSampler cone_sampler(double M, int n) {
  SetSampler sampler;
  sampler.name = "cone";
  sampler.M = M;
  sampler.eps = 0.1;
  sampler.draw = [M, n](Rng& rng, double delta) {
    const ConeSpec cone(M);
    const CPoint e1 = unit_vector(n, 0);
    for (int tries = 0; tries < 100000; ++tries) {
      CPoint z = e1 + rng.in_ball(n, 1.0) * delta;
      if (!is_interior(z)) continue;
      if (in_cone(cone, z)) return z;
    }
    throw std::runtime_error("cone_sampler: rejection failed");
  };
  return sampler;
}

SetSampler radial_sampler(int n) {
  SetSampler sampler;
  sampler.name = "radial";
  sampler.M = 2.0;
  sampler.eps = 0.1;
  sampler.draw = [n](Rng& rng, double delta) {
    const double u = rng.uniform(1e-9, delta * (1.0 - 1e-9));
    return axis_point(1.0 - u, n);
  };
  return sampler;
}

AdmissibleCoverageReport admissible_coverage_check(const HoloMap& f, const SetSampler& sampler,
                                                   double eta, std::span<const double> deltas,
                                                   int samples_per_delta, std::uint64_t seed,
                                                   const ExecPolicy& exec) {
  AdmissibleCoverageReport report;
  report.eta = eta;
  const int n = f.dim;
  const CPoint e1 = unit_vector(n, 0);
  NewtonOptions newton;

  for (double delta : deltas) {
    AdmissibleCoverageRow row;
    row.delta = delta;
    row.samples = samples_per_delta;
    std::vector<std::uint8_t> covered(samples_per_delta, 0);
    std::vector<CPoint> targets(samples_per_delta);
    par_for(exec, samples_per_delta, [&](std::size_t i) {
      Rng rng = Rng::substream(seed ^ std::uint64_t(delta * 1e9), i);
      const CPoint w = sampler.draw(rng, delta);
      targets[i] = w;
      const CPoint proj_seed = axis_projection(w);
      NewtonResult res = newton_preimage(f, w, proj_seed, newton);
      if (!res.ok()) res = newton_preimage(f, w, (0.99 * proj_seed).eval(), newton);
      covered[i] = res.ok() && is_interior(res.z) && (res.z - e1).norm() < eta &&
                   (evaluate(f, res.z) - w).norm() < 10.0 * newton.tol;
    });
    for (int i = 0; i < samples_per_delta; ++i) {
      if (covered[i])
        ++row.covered;
      else if (!row.has_failure) {
        row.first_failure = targets[i];
        row.has_failure = true;
      }
    }
    row.fraction = static_cast<double>(row.covered) / row.samples;
    report.rows.push_back(std::move(row));
  }
  report.reaches_full_coverage = !report.rows.empty() && report.rows.back().fraction == 1.0;
  return report;
}

BallSandwichReport ball_sandwich_check(const HoloMap& f, const CPoint& inner_center,
                                       double inner_radius, double eta,
                                       std::span<const double> deltas, int samples_per_delta,
                                       std::uint64_t seed, const ExecPolicy& exec) {
  const int n = f.dim;
  const CPoint e1 = unit_vector(n, 0);
  if (!(inner_radius > 0.0 && inner_radius <= 1.0))
    throw std::invalid_argument("ball_sandwich_check: radius must be in (0, 1]");
  if ((inner_center - (1.0 - inner_radius) * e1).norm() > 1e-10)
    throw std::invalid_argument(
        "ball_sandwich_check: inner ball is not internally tangent at e_1");

  BallSandwichReport report;
  report.inner_center = inner_center;
  report.inner_radius = inner_radius;

  // affine rescale of the unit ball onto the inner ball; contact point fixed
  auto rescale = [inner_center, inner_radius](const CPoint& u) {
    return (inner_center + inner_radius * u).eval();
  };

  HoloMap restricted;
  restricted.id = f.id + "_sandwich";
  restricted.dim = n;
  restricted.eval = [f, rescale](const CPoint& u) { return f.eval(rescale(u)); };
  if (f.analytic_jacobian)
    restricted.analytic_jacobian = [f, rescale, inner_radius](const CPoint& u) {
      return (f.analytic_jacobian(rescale(u)) * inner_radius).eval();
    };

  // distance monotonicity of the inclusion: k_ball(rescale(u), rescale(v)) <= k_ball(u, v)
  Rng rng(seed);
  double max_excess = -std::numeric_limits<double>::infinity();
  for (int i = 0; i < 2000; ++i) {
    const CPoint u = rng.in_ball(n, 0.99);
    const CPoint v = rng.in_ball(n, 0.99);
    const double inner = kobayashi_distance(rescale(u), rescale(v));
    const double outer = kobayashi_distance(u, v);
    max_excess = std::max(max_excess, inner - outer);
  }
  report.monotonicity_max_excess = max_excess;
  report.monotonicity_ok = max_excess <= 1e-12;

  report.restricted_coverage = admissible_coverage_check(
      restricted, radial_sampler(n), eta, deltas, samples_per_delta, seed, exec);
  report.inclusion_note =
      "coverage of the rescaled restriction implies coverage for the ambient map: "
      "g(B^n inter B(e1,eta)) is contained in f(D inter B(e1,eta))";
  return report;
}

}  // namespace holoball
