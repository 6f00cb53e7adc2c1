#include "hopf/ansatz.hpp"

#include <complex>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace hopf {

namespace {

using cd = std::complex<double>;

// Unit vector obtained from the direction d by the rational map z -> z^q on the
// stereographic coordinate; negative q uses conj(z).
Vec3 rational_direction(const Vec3& d, int q) {
  const int p = std::abs(q);
  const double sgn = q < 0 ? -1.0 : 1.0;
  if (d.z() >= 0.0) {
    const cd z = cd(d.x(), sgn * d.y()) / (1.0 + d.z());
    const cd w = std::pow(z, p);
    const double m = std::norm(w);
    return Vec3{2.0 * w.real(), 2.0 * w.imag(), 1.0 - m} / (1.0 + m);
  }
  // Chart around the south pole: zeta = 1/z, v = zeta^p = 1/w.
  const cd zeta = cd(d.x(), -sgn * d.y()) / (1.0 - d.z());
  const cd v = std::pow(zeta, p);
  const double m = std::norm(v);
  return Vec3{2.0 * v.real(), -2.0 * v.imag(), m - 1.0} / (m + 1.0);
}

LiftField ball_lift(const Grid& grid, int q) {
  LiftField u(grid);
  const double c = 0.5 * grid.length;
  const double radius = grid.length / 3.0;
  for (std::size_t s = 0; s < grid.sites(); ++s) {
    const auto x = grid.position(s);
    const Vec3 rel{x[0] - c, x[1] - c, x[2] - c};
    const double r = rel.norm();
    const double f = ansatz_profile(r, radius);
    if (f == 0.0) {
      u.set(s, Quaternion::identity());
      continue;
    }
    const Vec3 n = r > 0.0 ? rational_direction(rel / r, q) : Vec3::UnitZ();
    const double sf = std::sin(f);
    u.set(s, Quaternion{std::cos(f), sf * n.x(), sf * n.y(), sf * n.z()});
  }
  return u;
}

}  // namespace

std::string to_string(AnsatzKind kind) {
  switch (kind) {
    case AnsatzKind::constant: return "constant";
    case AnsatzKind::hopf: return "hopf";
    case AnsatzKind::ball_degree: return "ball_degree";
    case AnsatzKind::great_circle: return "great_circle";
  }
  return "unknown";
}

AnsatzKind parse_ansatz_kind(const std::string& name) {
  for (auto k : {AnsatzKind::constant, AnsatzKind::hopf, AnsatzKind::ball_degree,
                 AnsatzKind::great_circle})
    if (to_string(k) == name) return k;
  throw std::invalid_argument("unknown ansatz kind '" + name + "'");
}

double ansatz_profile(double r, double radius) {
  if (r >= radius) return 0.0;
  const double t = r / radius;
  const double smooth = t * t * t * (10.0 + t * (-15.0 + 6.0 * t));
  return std::numbers::pi * (1.0 - smooth);
}

Ansatz make_ansatz(AnsatzKind kind, const Grid& grid, int charge, double noise, std::uint64_t seed) {
  if (kind == AnsatzKind::hopf && charge == 0) kind = AnsatzKind::constant;

  LiftField u = LiftField::identity(grid);
  MapTarget target = MapTarget::sphere;
  switch (kind) {
    case AnsatzKind::constant:
      break;
    case AnsatzKind::hopf:
      u = ball_lift(grid, charge);
      break;
    case AnsatzKind::ball_degree:
      u = ball_lift(grid, charge);
      target = MapTarget::group;
      break;
    case AnsatzKind::great_circle: {
      // exp(k pi x / L) rotates i towards j by 2 pi x / L; the stabilizer factor
      // exp(i pi x / L) makes the lift periodic.
      const double w = std::numbers::pi / grid.length;
      for (std::size_t s = 0; s < grid.sites(); ++s) {
        const double x = grid.position(s)[0];
        u.set(s, Quaternion::exp(Vec3{0.0, 0.0, w * x}) * Quaternion::exp(Vec3{w * x, 0.0, 0.0}));
      }
      break;
    }
  }
  if (noise > 0.0) u = smooth_random_lift(grid, seed, noise) * u;
  u.renormalize();
  return {act(u, MapField::constant(grid, target)), std::move(u)};
}

}  // namespace hopf
