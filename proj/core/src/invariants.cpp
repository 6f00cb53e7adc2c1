#include "hopf/invariants.hpp"

#include "hopf/coisotropy.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace hopf {

namespace {

IdentityResidual entry(std::string name, int n, double residual) {
  IdentityResidual r;
  r.name = std::move(name);
  r.algebraic = true;
  r.sizes = {n};
  r.residual = {residual};
  r.budget = 1e-12;
  r.passed = residual <= r.budget;
  return r;
}

Vec3 random_unit(std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  return Vec3(g(rng), g(rng), g(rng)).normalized();
}

}  // namespace

std::vector<IdentityResidual> invariant_suite(int n, std::uint64_t seed, int samples) {
  std::vector<IdentityResidual> out;
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss;

  // |omega(S)| = |S| with the quotient norm, on the fast path and through SU2 matrices.
  const HomogeneousPair su2u1 = HomogeneousPair::su2_u1();
  double cp1 = 0.0, generic = 0.0;
  for (int i = 0; i < samples; ++i) {
    const Vec3 q = random_unit(rng);
    const Vec3 raw(gauss(rng), gauss(rng), gauss(rng));
    const Vec3 eta = raw - raw.dot(q) * q;
    cp1 = std::max(cp1, std::abs(coisotropy_form(q, eta).norm() - cp1_tangent_norm(eta)));

    const Quaternion g = Quaternion::exp(Vec3(gauss(rng), gauss(rng), gauss(rng))).normalized();
    const Vec3 xi(gauss(rng), gauss(rng), gauss(rng));
    const Vec3 phi = rotate(g, Vec3::UnitX());
    const LieVector omega = coisotropy_form(su2u1, su2_matrix(g), LieVector(xi));
    const double tangent = cp1_tangent_norm(cp1_infinitesimal_action(xi, phi));
    generic = std::max(generic, std::abs(omega.norm() - tangent));
  }
  out.push_back(entry("coisotropy_isometry_cp1", n, cp1));
  out.push_back(entry("coisotropy_isometry_generic", n, generic));

  const Grid grid(n);
  const LiftField u = smooth_random_lift(grid, seed + 1, 1.0);
  PotentialField a = pure_gauge_potential(u);
  out.push_back(entry("plaquette_triviality", n, plaquette_defect(a)));

  const LatticeField f0 = smooth_random_scalar(grid, seed + 2, 1.0);
  out.push_back(entry("dd_zero_0form", n, d(d(f0)).max_abs() / std::max(1.0, f0.max_abs())));
  out.push_back(entry("dd_zero_1form", n, d(d(a.a)).max_abs() / std::max(1.0, a.a.max_abs())));

  const MapField phi = smooth_random_map(grid, seed + 3, 1.0);
  split_potential(a, phi);
  const SplitResidual split = split_residual(a);
  const double scale = std::max(1.0, a.a.max_abs());
  out.push_back(entry("split_reconstruction", n, split.reconstruction / scale));
  out.push_back(entry("split_orthogonality", n, split.orthogonality / (scale * scale)));

  for (const auto& pair : {HomogeneousPair::su2_u1(), HomogeneousPair::su3_flag()})
    out.push_back(entry("subalgebra_" + pair.name(), n, pair.subalgebra_residual()));
  out.push_back(entry("symmetric_su2_u1", n, HomogeneousPair::su2_u1().symmetric_residual()));
  return out;
}

}  // namespace hopf
