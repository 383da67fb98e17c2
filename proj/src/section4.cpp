#include "holoball/section4.hpp"

#include <cmath>

#include "holoball/automorphisms.hpp"
#include "holoball/rng.hpp"

namespace holoball {

HalfPlaneMap standin_phi() {
  HalfPlaneMap phi;
  phi.id = "standin_4_plus_z";
  phi.eval = [](Complex z) { return 4.0 + z; };
  phi.deriv = [](Complex) { return Complex(1.0); };
  phi.alpha = 1.0;
  return phi;
}

namespace {

CPoint sample_siegel2(Rng& rng, double span = 10.0) {
  const Complex w = 2.0 * rng.in_unit_disc();
  const Complex z(std::norm(w) + rng.uniform(1e-6, span), rng.uniform(-span, span));
  return make_point({z, w});
}

}  // namespace

Section4Map::Section4Map(HalfPlaneMap phi, double delta, double eps, int hypothesis_samples,
                         std::uint64_t seed)
    : phi_(std::move(phi)), delta_(delta), eps_(eps) {
  if (!phi_.eval) throw std::invalid_argument("Section4Map: phi evaluator missing");
  if (!(eps_ > 0.0 && eps_ * eps_ < 0.75))
    throw std::invalid_argument("Section4Map: hypothesis eps^2 < 3/4 violated");
  if (!(delta_ > 0.0 && delta_ < 2.0))
    throw std::invalid_argument("Section4Map: hypothesis delta < 2 violated");
  if (!(phi_.alpha > 0.0))
    throw std::invalid_argument("Section4Map: dilation alpha must be positive");

  Rng rng(seed);
  for (int i = 0; i < hypothesis_samples; ++i) {
    const CPoint zw = sample_siegel2(rng);
    const Complex v = phi_.eval(zw[0]);
    if (!(v.real() > 3.0))
      throw std::invalid_argument("Section4Map: hypothesis Re phi > 3 violated at a sample");
    if (v.real() < phi_.alpha * zw[0].real() - 1e-12)
      throw std::invalid_argument(
          "Section4Map: hypothesis Re phi(z) >= alpha Re z violated at a sample");
  }
  // radial dilation consistency: phi(r)/r -> alpha on a dyadic ray
  const double r = std::pow(2.0, 30);
  const double measured = (phi_.eval(Complex(r)) / r).real();
  if (std::abs(measured - phi_.alpha) > 1e-3 * std::max(1.0, phi_.alpha))
    throw std::invalid_argument("Section4Map: declared alpha does not match phi(r)/r");
}

CPoint Section4Map::apply_siegel(const CPoint& zw) const {
  const Complex z = zw[0], w = zw[1];
  const Complex pz = phi_.eval(z);
  const Complex second =
      std::sqrt(phi_.alpha) * delta_ * w / (1.0 + pz) + eps_ * z / (1.0 + z);
  return make_point({pz, second});
}

CMatrix Section4Map::jacobian_siegel(const CPoint& zw) const {
  if (!phi_.deriv)
    throw std::invalid_argument("Section4Map::jacobian_siegel: phi derivative missing");
  const Complex z = zw[0], w = zw[1];
  const Complex pz = phi_.eval(z);
  const Complex dpz = phi_.deriv(z);
  CMatrix jac(2, 2);
  jac(0, 0) = dpz;
  jac(0, 1) = 0.0;
  jac(1, 0) = -std::sqrt(phi_.alpha) * delta_ * w * dpz / ((1.0 + pz) * (1.0 + pz)) +
              eps_ / ((1.0 + z) * (1.0 + z));
  jac(1, 1) = std::sqrt(phi_.alpha) * delta_ / (1.0 + pz);
  return jac;
}

HoloMap Section4Map::as_siegel_selfmap() const {
  HoloMap map;
  map.id = "section4_siegel";
  map.dim = 2;
  const Section4Map self = *this;
  map.eval = [self](const CPoint& zw) { return self.apply_siegel(zw); };
  if (phi_.deriv)
    map.analytic_jacobian = [self](const CPoint& zw) { return self.jacobian_siegel(zw); };
  map.domain_guard = [](const CPoint& zw) {
    return is_finite(zw) && zw.size() == 2 && zw[0].real() > std::norm(zw[1]);
  };
  map.step_hint = [](const CPoint&) { return 1e-6; };
  return map;
}

HoloMap Section4Map::as_ball_map(const std::string& gallery_id) const {
  HoloMap map;
  map.id = gallery_id;
  map.dim = 2;
  const Section4Map self = *this;
  map.eval = [self](const CPoint& z) {
    const SiegelPoint w = cayley(z);
    const CPoint img = self.apply_siegel(make_point({w.w1, w.w_tail[0]}));
    return cayley_inverse(SiegelPoint{img[0], img.tail(1)});
  };
  if (phi_.deriv) {
    map.analytic_jacobian = [self](const CPoint& z) -> CMatrix {
      const SiegelPoint w = cayley(z);
      const CPoint zw = make_point({w.w1, w.w_tail[0]});
      const CPoint img = self.apply_siegel(zw);
      return cayley_inverse_jacobian(SiegelPoint{img[0], img.tail(1)}) *
             self.jacobian_siegel(zw) * cayley_jacobian(z);
    };
  }
  return map;
}

ContainmentResult section4_containment_sweep(const Section4Map& map, std::size_t samples,
                                             std::uint64_t seed, const ExecPolicy& exec) {
  const double alpha = map.phi().alpha;
  const double delta = map.delta();
  const double eps = map.eps();

  std::vector<ChainSample> rows(samples);
  par_for(exec, static_cast<std::ptrdiff_t>(samples), [&](std::size_t i) {
    Rng rng = Rng::substream(seed, i);
    ChainSample row;
    row.zw = sample_siegel2(rng);
    const Complex z = row.zw[0], w = row.zw[1];
    const Complex pz = map.phi().eval(z);
    const Complex second =
        std::sqrt(alpha) * delta * w / (1.0 + pz) + eps * z / (1.0 + z);

    const double t0 = std::norm(second);
    const double t1 = 2.0 * (alpha * delta * delta * std::norm(w) / std::norm(1.0 + pz) +
                             eps * eps * std::norm(z) / std::norm(1.0 + z));
    const double t2 =
        2.0 * (alpha * delta * delta * std::norm(w) / 16.0 + eps * eps);
    const double t3 = alpha * std::norm(w) / 2.0 + 1.5;
    const double t4 = alpha * std::norm(w) / 2.0 + pz.real() / 2.0;
    const double t5 = alpha * z.real() / 2.0 + pz.real() / 2.0;
    const double t6 = pz.real();
    row.terms = {t0, t1, t2, t3, t4, t5, t6};
    row.ok = true;
    for (std::size_t t = 0; t + 1 < row.terms.size(); ++t)
      row.ok = row.ok && row.terms[t] <= row.terms[t + 1] * (1.0 + 1e-12) + 1e-12;
    rows[i] = std::move(row);
  });

  // worst = the first violating row if any, else the tightest final margin
  ContainmentResult result;
  result.samples = samples;
  result.min_final_margin = std::numeric_limits<double>::infinity();
  bool have_violation = false;
  for (auto& row : rows) {
    if (!row.ok) {
      ++result.violations;
      if (!have_violation) {
        result.worst = row;
        have_violation = true;
      }
    }
    const double margin = row.terms.back() - row.terms.front();
    if (margin < result.min_final_margin) {
      result.min_final_margin = margin;
      if (!have_violation) result.worst = row;
    }
  }
  return result;
}

Fraction::Fraction(long long n, long long d) : num(n), den(d) {
  if (den == 0) throw std::invalid_argument("Fraction: zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const long long g = std::gcd(num < 0 ? -num : num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
}

Fraction Fraction::parse(const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos) return {std::stoll(text), 1};
  return {std::stoll(text.substr(0, slash)), std::stoll(text.substr(slash + 1))};
}

Fraction Fraction::operator+(const Fraction& o) const {
  return {num * o.den + o.num * den, den * o.den};
}
Fraction Fraction::operator-(const Fraction& o) const {
  return {num * o.den - o.num * den, den * o.den};
}
Fraction Fraction::operator*(const Fraction& o) const { return {num * o.num, den * o.den}; }
Fraction Fraction::operator/(const Fraction& o) const { return {num * o.den, den * o.num}; }

std::string Fraction::str() const {
  if (den == 1) return std::to_string(num);
  return std::to_string(num) + "/" + std::to_string(den);
}

SeparationCertificate section4_separation(const Fraction& r_minus1, const Fraction& r_1,
                                          double eps, double delta) {
  const Fraction one(1, 1), two(2, 1);
  SeparationCertificate cert;
  cert.R0 = r_minus1 / (two - r_minus1);
  cert.Rinf = (two - r_1) / r_1;
  cert.factor = cert.Rinf / (one + cert.Rinf) - cert.R0 / (one - cert.R0);
  cert.eps = eps;
  cert.delta = delta;
  cert.lhs = eps * cert.factor.value();
  cert.margin = cert.lhs - 2.0 * delta;
  cert.certified = cert.margin > 0.0;
  return cert;
}

}  // namespace holoball
