#pragma once

#include "hopf/form.hpp"
#include "hopf/lie.hpp"
#include "hopf/quaternion.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace hopf {

/// Target of a quaternionic map field.
enum class MapTarget {
  sphere,  ///< CP1 = SU2/U1 as unit imaginary quaternions (3 components)
  group,   ///< SU2 as unit quaternions (4 components, w first)
};

std::string to_string(MapTarget target);

/// A map M -> G/H on the lattice, for the quaternionic pairs (SU2,U1) and (SU2,{1}).
struct MapField {
  LatticeField values;
  MapTarget target = MapTarget::sphere;

  MapField() = default;
  MapField(const Grid& grid, MapTarget target);
  /// psi = i everywhere (sphere) or psi = 1 (group).
  static MapField constant(const Grid& grid, MapTarget target = MapTarget::sphere);

  const Grid& grid() const { return values.grid(); }
  int components() const { return values.dim(); }

  Vec3 point(std::size_t site) const { return values.vec3(site); }
  void set_point(std::size_t site, const Vec3& p) { values.set_vec3(site, 0, p); }
  Quaternion element(std::size_t site) const;
  void set_element(std::size_t site, const Quaternion& q);

  /// Largest | |psi(x)| - 1 | over sites.
  double constraint_violation() const;
  /// Rescales every value to unit norm; throws std::domain_error on a zero value.
  void renormalize();
};

/// A lift u: M -> SU2, stored as unit quaternions (w, x, y, z).
struct LiftField {
  LatticeField values;

  LiftField() = default;
  explicit LiftField(const Grid& grid);
  static LiftField identity(const Grid& grid);

  const Grid& grid() const { return values.grid(); }
  Quaternion at(std::size_t site) const {
    const double* p = values.at(site);
    return {p[0], p[1], p[2], p[3]};
  }
  void set(std::size_t site, const Quaternion& q) {
    double* p = values.at(site);
    p[0] = q.w;
    p[1] = q.x;
    p[2] = q.y;
    p[3] = q.z;
  }
  double constraint_violation() const;
  void renormalize();
};

/// Pointwise product (u w)(x) = u(x) w(x).
LiftField operator*(const LiftField& u, const LiftField& w);
/// Pointwise inverse.
LiftField inverse(const LiftField& u);

/// An su2-valued 1-form, optionally split against a reference map phi.
struct PotentialField {
  LatticeField a;
  std::optional<LatticeField> parallel;
  std::optional<LatticeField> perp;

  PotentialField() = default;
  explicit PotentialField(LatticeField form) : a(std::move(form)) {}

  const Grid& grid() const { return a.grid(); }
  bool has_split() const { return parallel.has_value() && perp.has_value(); }
};

/// a_mu(x) = log(u(x)^-1 u(x + e_mu)) / h. Throws std::runtime_error
/// "field too rough for grid" if a link angle reaches pi - 1e-6.
PotentialField pure_gauge_potential(const LiftField& u);

/// Link variables exp(h a_mu(x)) recovered from a potential.
Quaternion link(const PotentialField& a, std::size_t site, int axis);

/// Largest deviation from the identity of the ordered plaquette products
/// U_mu(x) U_nu(x + mu) U_mu(x + nu)^-1 U_nu(x)^-1 of the links of a.
double plaquette_defect(const PotentialField& a);

/// Computes a_par and a_perp slotwise against the CP1 map phi.
void split_potential(PotentialField& a, const MapField& phi);

/// Max of |a_par + a_perp - a| and |<a_par, a_perp>| over all sites and slots.
struct SplitResidual {
  double reconstruction = 0.0;
  double orthogonality = 0.0;
};
SplitResidual split_residual(const PotentialField& a);

/// psi = u phi u^-1 (sphere target) or psi = u phi (group target).
MapField act(const LiftField& u, const MapField& phi);

/// Centered tangent (psi(x + e_mu) - psi(x - e_mu)) / (2h) of a sphere-valued map,
/// as a 1-form with 3 components (not projected).
LatticeField centered_tangent(const MapField& psi);

/// psi^* omega_perp as an su2-valued 1-form.
///
/// Sphere: omega_mu = 1/2 psi x t_mu with t_mu the centered tangent (the component of
/// t along psi drops out of the cross product). Group: the centered right Maurer-Cartan
/// form, (log(psi(x+e) psi(x)^-1) - log(psi(x-e) psi(x)^-1)) / (2h).
LatticeField pullback_coisotropy(const MapField& psi);

/// Coset map M -> G/H for a generic matrix pair, stored by representatives g(x).
struct CosetMapField {
  Grid grid;
  const HomogeneousPair* pair = nullptr;
  std::vector<GroupMatrix> reps;

  CosetMapField(const Grid& grid, const HomogeneousPair& pair);
};

/// psi^* omega_perp for a generic pair: the centered right-invariant velocity
/// xi_mu with g(x +- e_mu) ~ exp(+-h xi_mu) g(x), projected onto h_x^perp.
LatticeField pullback_coisotropy(const CosetMapField& psi);

/// Smooth periodic random fields built from a few low Fourier modes, seeded
/// deterministically. amplitude scales the Lie-algebra exponent.
LatticeField smooth_random_scalar(const Grid& grid, std::uint64_t seed, double amplitude,
                                  int modes = 2);
LiftField smooth_random_lift(const Grid& grid, std::uint64_t seed, double amplitude, int modes = 2);
/// act(smooth_random_lift, i).
MapField smooth_random_map(const Grid& grid, std::uint64_t seed, double amplitude, int modes = 2);
CosetMapField smooth_random_coset(const Grid& grid, const HomogeneousPair& pair, std::uint64_t seed,
                                  double amplitude, int modes = 2);

}  // namespace hopf
