#include "holoball/gallery.hpp"

#include <algorithm>
#include <cmath>

#include "holoball/automorphisms.hpp"
#include "holoball/section4.hpp"

namespace holoball {

namespace {

HoloMap identity_map(int n) {
  HoloMap map;
  map.id = "identity";
  map.dim = n;
  map.eval = [](const CPoint& z) { return z; };
  map.analytic_jacobian = [n](const CPoint&) { return CMatrix::Identity(n, n); };
  return map;
}

HoloMap half_shrink_map(int n) {
  HoloMap map;
  map.id = "half_shrink";
  map.dim = n;
  map.eval = [](const CPoint& z) {
    CPoint w = z / 2.0;
    w[0] = z[0];
    return w;
  };
  map.analytic_jacobian = [n](const CPoint&) {
    CMatrix jac = CMatrix::Identity(n, n) / 2.0;
    jac(0, 0) = 1.0;
    return jac;
  };
  return map;
}

HoloMap thin_proj_map() {
  HoloMap map;
  map.id = "thin_proj";
  map.dim = 2;
  map.eval = [](const CPoint& z) { return make_point({z[0], 0.0}); };
  map.analytic_jacobian = [](const CPoint&) {
    CMatrix jac = CMatrix::Zero(2, 2);
    jac(0, 0) = 1.0;
    return jac;
  };
  return map;
}

HoloMap thin_sq_map() {
  HoloMap map;
  map.id = "thin_sq";
  map.dim = 2;
  map.eval = [](const CPoint& z) {
    const Complex g = 1.0 - z[0];
    return make_point({z[0], 0.25 * z[1] * g * g});
  };
  map.analytic_jacobian = [](const CPoint& z) {
    const Complex g = 1.0 - z[0];
    CMatrix jac(2, 2);
    jac(0, 0) = 1.0;
    jac(0, 1) = 0.0;
    jac(1, 0) = -0.5 * z[1] * g;
    jac(1, 1) = 0.25 * g * g;
    return jac;
  };
  return map;
}

HoloMap hyperbolic_map(double t0, int n, const std::string& id) {
  const HyperbolicAutomorphism phi(t0, n);
  HoloMap map;
  map.id = id;
  map.dim = n;
  map.eval = [phi](const CPoint& z) { return phi(z); };
  map.analytic_jacobian = [phi](const CPoint& z) { return phi.jacobian(z); };
  return map;
}

HoloMap mobius_map() {
  const MobiusTranslation t(make_point({0.3, Complex(0.0, 0.2)}));
  HoloMap map;
  map.id = "mobius";
  map.dim = 2;
  map.eval = [t](const CPoint& z) { return t(z); };
  map.analytic_jacobian = [t](const CPoint& z) { return t.jacobian(z); };
  return map;
}

HoloMap parabolic_std_map() {
  const ParabolicAutomorphism t = normalizing_parabolic(make_point({0.5, 0.3}));
  HoloMap map;
  map.id = "parabolic_std";
  map.dim = 2;
  map.eval = [t](const CPoint& z) { return t(z); };
  map.analytic_jacobian = [t](const CPoint& z) { return t.jacobian(z); };
  return map;
}

HoloMap section4_ball_map() {
  const Section4Map phi(standin_phi(), 1.0, 0.5);
  return phi.as_ball_map();
}

}  // namespace

const std::vector<std::string>& gallery_ids() {
  static const std::vector<std::string> ids = {
      "identity",      "half_shrink", "thin_proj",     "thin_sq",
      "hyperbolic_t1", "hyperbolic_half_log3", "mobius", "parabolic_std",
      "section4_ball"};
  return ids;
}

bool is_gallery_id(const std::string& id) {
  const auto& ids = gallery_ids();
  return std::find(ids.begin(), ids.end(), id) != ids.end();
}

HoloMap gallery_map(const std::string& id, int n) {
  if (n < 1) throw std::invalid_argument("gallery_map: dimension must be >= 1");
  const bool planar_only =
      id == "thin_proj" || id == "thin_sq" || id == "mobius" ||
      id == "parabolic_std" || id == "section4_ball";
  if (planar_only && n != 2)
    throw std::invalid_argument("gallery_map: " + id + " is defined on the 2-ball only");

  if (id == "identity") return identity_map(n);
  if (id == "half_shrink") return half_shrink_map(n);
  if (id == "thin_proj") return thin_proj_map();
  if (id == "thin_sq") return thin_sq_map();
  if (id == "hyperbolic_t1") return hyperbolic_map(1.0, n, id);
  if (id == "hyperbolic_half_log3") return hyperbolic_map(0.5 * std::log(3.0), n, id);
  if (id == "mobius") return mobius_map();
  if (id == "parabolic_std") return parabolic_std_map();
  if (id == "section4_ball") return section4_ball_map();
  throw std::invalid_argument("gallery_map: unknown id '" + id + "'");
}

}  // namespace holoball
