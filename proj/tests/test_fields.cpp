#include "hopf/ansatz.hpp"
#include "hopf/coisotropy.hpp"
#include "hopf/fields.hpp"
#include "hopf/lie.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

using namespace hopf;

TEST(Ansatz, ProfileEndpoints) {
  EXPECT_DOUBLE_EQ(ansatz_profile(0.0, 2.0), std::numbers::pi);
  EXPECT_DOUBLE_EQ(ansatz_profile(2.0, 2.0), 0.0);
  EXPECT_DOUBLE_EQ(ansatz_profile(5.0, 2.0), 0.0);
  EXPECT_NEAR(ansatz_profile(1.0, 2.0), 0.5 * std::numbers::pi, 1e-15);
}

TEST(Ansatz, KindNames) {
  for (AnsatzKind k : {AnsatzKind::constant, AnsatzKind::hopf, AnsatzKind::ball_degree,
                       AnsatzKind::great_circle})
    EXPECT_EQ(parse_ansatz_kind(to_string(k)), k);
  EXPECT_THROW(parse_ansatz_kind("torus"), std::invalid_argument);
}

TEST(Ansatz, HopfIsUnitAndMatchesLift) {
  const Grid grid(16);
  const Ansatz a = make_ansatz(AnsatzKind::hopf, grid, 1);
  EXPECT_EQ(a.psi.target, MapTarget::sphere);
  EXPECT_LE(a.psi.constraint_violation(), 1e-14);
  EXPECT_LE(a.u.constraint_violation(), 1e-14);
  for (std::size_t s = 0; s < grid.sites(); s += 13)
    EXPECT_LE((a.psi.point(s) - rotate(a.u.at(s), Vec3::UnitX())).norm(), 1e-14);
  // Identity outside the ball of radius L/3 around the centre; the corner is outside.
  EXPECT_LE((a.psi.point(0) - Vec3::UnitX()).norm(), 1e-15);
}

TEST(Ansatz, HopfZeroIsConstant) {
  const Grid grid(8);
  const Ansatz a = make_ansatz(AnsatzKind::hopf, grid, 0);
  for (std::size_t s = 0; s < grid.sites(); ++s) EXPECT_EQ(a.psi.point(s), Vec3::UnitX());
}

TEST(Ansatz, BallDegreeIsGroupValued) {
  const Ansatz a = make_ansatz(AnsatzKind::ball_degree, Grid(12), 2);
  EXPECT_EQ(a.psi.target, MapTarget::group);
  EXPECT_EQ(a.psi.components(), 4);
  EXPECT_LE(a.psi.constraint_violation(), 1e-14);
}

TEST(Ansatz, GreatCircleWindsOnce) {
  const Grid grid(16);
  const Ansatz a = make_ansatz(AnsatzKind::great_circle, grid);
  for (int x = 0; x < grid.n; ++x) {
    const double t = 2.0 * std::numbers::pi * x / grid.n;
    const Vec3 p = a.psi.point(grid.index(x, 3, 5));
    EXPECT_LE((p - Vec3(std::cos(t), std::sin(t), 0.0)).norm(), 1e-14);
  }
}

TEST(Ansatz, NoiseIsSeeded) {
  const Grid grid(8);
  const Ansatz a = make_ansatz(AnsatzKind::hopf, grid, 1, 0.1, 42);
  const Ansatz b = make_ansatz(AnsatzKind::hopf, grid, 1, 0.1, 42);
  const Ansatz c = make_ansatz(AnsatzKind::hopf, grid, 1, 0.1, 43);
  EXPECT_EQ(a.psi.values.data(), b.psi.values.data());
  EXPECT_NE(a.psi.values.data(), c.psi.values.data());
}

TEST(Fields, RenormalizeRejectsZero) {
  MapField psi = MapField::constant(Grid(4));
  psi.set_point(3, Vec3::Zero());
  EXPECT_THROW(psi.renormalize(), std::domain_error);
}

TEST(Fields, GenericCosetPullbackMatchesCp1) {
  // The su2/u1 coset map with representatives u agrees with the quaternion fast path on
  // psi = u i u^-1, up to the O(h^2) difference of the two centered rules.
  const HomogeneousPair pair = HomogeneousPair::su2_u1();
  double previous = 0.0;
  for (int n : {16, 32}) {
    const Grid grid(n);
    const LiftField u = smooth_random_lift(grid, 21, 0.7, 1);
    CosetMapField coset(grid, pair);
    for (std::size_t s = 0; s < grid.sites(); ++s) coset.reps[s] = su2_matrix(u.at(s));
    const LatticeField generic = pullback_coisotropy(coset);
    const LatticeField fast = pullback_coisotropy(act(u, MapField::constant(grid)));
    const double err = max_abs_diff(generic, fast);
    EXPECT_LE(err, 0.1);
    if (previous > 0.0) {
      EXPECT_LT(err, 0.5 * previous);
    }
    previous = err;
  }
}

TEST(Fields, FlagCosetPullbackIsPerpendicular) {
  const HomogeneousPair pair = HomogeneousPair::su3_flag();
  const Grid grid(6);
  const CosetMapField psi = smooth_random_coset(grid, pair, 8, 0.5, 1);
  const LatticeField w = pullback_coisotropy(psi);
  ASSERT_EQ(w.dim(), 8);
  for (std::size_t s = 0; s < grid.sites(); s += 7)
    for (int mu = 0; mu < 3; ++mu) {
      const Eigen::Map<const LieVector> xi(w.at(s, mu), 8);
      const auto split = project_isotropy(pair, psi.reps[s], LieVector(xi));
      EXPECT_LE(split.parallel.norm(), 1e-12);
    }
}
