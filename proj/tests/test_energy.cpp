#include "hopf/ansatz.hpp"
#include "hopf/energy.hpp"
#include "hopf/fields.hpp"
#include "hopf/lie.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

using namespace hopf;

TEST(Energy, ConstantMapIsZero) {
  const MapField psi = MapField::constant(Grid(8));
  for (EnergyVariant v : {EnergyVariant::coisotropy, EnergyVariant::cross_product,
                          EnergyVariant::isotropic_skyrme})
    EXPECT_EQ(energy_map(psi, v).total, 0.0);
  EXPECT_EQ(energy_gradient(psi).max_abs(), 0.0);
}

TEST(Energy, VariantNames) {
  for (EnergyVariant v : {EnergyVariant::coisotropy, EnergyVariant::cross_product,
                          EnergyVariant::isotropic_skyrme})
    EXPECT_EQ(parse_energy_variant(to_string(v)), v);
  EXPECT_THROW(parse_energy_variant("faddeev"), std::invalid_argument);
}

TEST(Energy, GreatCircleDirichlet) {
  // omega_x = 1/2 k (sin h / h): dirichlet density 1/8 (sin h / h)^2, no Skyrme term.
  const Grid grid(32);
  const MapField psi = make_ansatz(AnsatzKind::great_circle, grid).psi;
  const double c = std::sin(grid.h()) / grid.h();
  const double volume = std::pow(grid.length, 3);
  const EnergyReport cois = energy_map(psi);
  EXPECT_NEAR(cois.dirichlet, 0.125 * c * c * volume, 1e-10 * volume);
  EXPECT_NEAR(cois.skyrme, 0.0, 1e-12);
  const EnergyReport cross = energy_map(psi, EnergyVariant::cross_product);
  EXPECT_NEAR(cross.dirichlet, 0.5 * c * c * volume, 1e-10 * volume);
  EXPECT_NEAR(cross.total, kCrossProductRatio * cois.total, 1e-10 * cross.total);
}

TEST(Energy, DensityIntegratesToTotal) {
  const Grid grid(16);
  const MapField psi = smooth_random_map(grid, 2, 1.0);
  const EnergyReport r = energy_map(psi);
  EXPECT_NEAR(integrate_density(r.density), r.total, 1e-12 * r.total);
  EXPECT_NEAR(r.dirichlet + r.skyrme, r.total, 1e-13 * r.total);
  EXPECT_GT(r.skyrme, 0.0);
}

TEST(Energy, ScalesMultiplyTerms) {
  const Grid grid(12);
  const MapField psi = smooth_random_map(grid, 3, 1.0);
  const EnergyReport base = energy_map(psi);
  const EnergyReport scaled = energy_map(psi, EnergyVariant::coisotropy, {2.0, 0.5});
  EXPECT_NEAR(scaled.dirichlet, 2.0 * base.dirichlet, 1e-12 * base.dirichlet);
  EXPECT_NEAR(scaled.skyrme, 0.5 * base.skyrme, 1e-12 * base.skyrme);
}

TEST(Energy, SkyrmeRatioIsSitewiseConstant) {
  const Grid grid(16);
  const MapField psi = make_ansatz(AnsatzKind::hopf, grid, 1).psi;
  const EnergyReport cois = energy_map(psi, EnergyVariant::coisotropy, {0.0, 1.0});
  const EnergyReport cross = energy_map(psi, EnergyVariant::cross_product, {0.0, 1.0});
  for (std::size_t s = 0; s < grid.sites(); ++s) {
    const double a = cois.density.at(s)[0];
    if (a > 1e-8) {
      EXPECT_NEAR(cross.density.at(s)[0] / a, kCrossProductRatio, 1e-10);
    }
  }
}

TEST(Energy, IsotropicSkyrmeVanishesOnCp1) {
  // For CP1 the bracket of two perpendicular vectors lies in h_psi, so the isotropic
  // Skyrme term is the full one.
  const Grid grid(12);
  const MapField psi = smooth_random_map(grid, 4, 1.0);
  const EnergyReport full = energy_map(psi);
  const EnergyReport iso = energy_map(psi, EnergyVariant::isotropic_skyrme);
  EXPECT_NEAR(iso.skyrme, full.skyrme, 1e-12 * full.skyrme);
}

TEST(Energy, GradientMatchesFiniteDifferences) {
  const Grid grid(16);
  MapField psi = make_ansatz(AnsatzKind::hopf, grid, 1).psi;
  const LatticeField grad = energy_gradient(psi);
  std::mt19937_64 rng(5);
  std::normal_distribution<double> gauss;
  const double eps = 1e-5;
  for (int t = 0; t < 5; ++t) {
    LatticeField dir(grid, 0, 3);
    for (std::size_t s = 0; s < grid.sites(); ++s) {
      const Vec3 p = psi.point(s);
      Vec3 v(gauss(rng), gauss(rng), gauss(rng));
      dir.set_vec3(s, 0, v - v.dot(p) * p);
    }
    auto shifted = [&](double step) {
      MapField q = psi;
      for (std::size_t s = 0; s < grid.sites(); ++s) q.set_point(s, psi.point(s) + step * dir.vec3(s));
      return energy_map(q).total;
    };
    const double fd = (shifted(eps) - shifted(-eps)) / (2.0 * eps);
    double analytic = 0.0;
    for (std::size_t s = 0; s < grid.sites(); ++s) analytic += grad.vec3(s).dot(dir.vec3(s));
    EXPECT_NEAR(analytic, fd, 1e-6 * std::abs(fd));
  }
}

TEST(Energy, GradientIsTangent) {
  const Grid grid(12);
  const MapField psi = smooth_random_map(grid, 6, 1.0);
  const LatticeField g = energy_gradient(psi);
  for (std::size_t s = 0; s < grid.sites(); ++s) EXPECT_NEAR(g.vec3(s).dot(psi.point(s)), 0.0, 1e-12);
}

TEST(Energy, CovariantPotentialOfZeroIsPullback) {
  const Grid grid(12);
  const MapField phi = smooth_random_map(grid, 7, 1.0);
  const PotentialField zero(LatticeField(grid, 1, 3));
  EXPECT_LE(max_abs_diff(covariant_potential(zero, phi), pullback_coisotropy(phi)), 0.0);
  EXPECT_NEAR(energy_potential(zero, phi).total, energy_map(phi).total, 1e-12 * energy_map(phi).total);
}

TEST(Energy, GenericPairRejectsCrossProduct) {
  const HomogeneousPair pair = HomogeneousPair::su3_flag();
  const CosetMapField psi = smooth_random_coset(Grid(4), pair, 1, 0.3, 1);
  EXPECT_THROW(energy_map(psi, EnergyVariant::cross_product), std::invalid_argument);
  EXPECT_GT(energy_map(psi).total, 0.0);
}

TEST(Energy, GroupTargetSkyrme) {
  const Grid grid(16);
  const MapField u = make_ansatz(AnsatzKind::ball_degree, grid, 1).psi;
  const EnergyReport r = energy_map(u);
  EXPECT_GT(r.dirichlet, 0.0);
  EXPECT_GT(r.skyrme, 0.0);
  EXPECT_THROW(energy_map(u, EnergyVariant::cross_product), std::invalid_argument);
  EXPECT_THROW(energy_gradient(u), std::invalid_argument);
}
