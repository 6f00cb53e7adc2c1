#pragma once

#include "hopf/lie.hpp"
#include "hopf/quaternion.hpp"

namespace hopf {

/// Tolerance for unit-norm and tangency preconditions.
inline constexpr double kConstraintTol = 1e-10;

template <class V>
struct IsotropySplit {
  V parallel;
  V perp;
};

/// CP1 fast path: xi_par = (xi, phi) phi, xi_perp = 1/2 phi [xi, phi].
/// phi must be a unit imaginary quaternion; throws std::invalid_argument otherwise.
IsotropySplit<Vec3> project_isotropy(const Vec3& phi, const Vec3& xi);

/// Generic path through a representative g of x = gH: pr_{h_x} = Ad(g) pr_h Ad(g^-1).
IsotropySplit<LieVector> project_isotropy(const HomogeneousPair& pair, const GroupMatrix& g,
                                          const LieVector& xi);

/// CP1 closed form omega_q(eta) = 1/2 q eta for eta in T_q S2 (embedded in Im H).
/// Throws std::invalid_argument if q is not unit or eta is not tangent.
Vec3 coisotropy_form(const Vec3& q, const Vec3& eta);

/// Generic path: the tangent vector is xi.x for xi in g, x = gH, and
/// omega(xi.x) = pr_{h_x perp}(xi).
LieVector coisotropy_form(const HomogeneousPair& pair, const GroupMatrix& g, const LieVector& xi);

/// Norm of eta in T_q S2 under the quotient metric of SU2/U1: half the Euclidean norm,
/// since the embedding q U1 -> q i q^-1 doubles lengths.
inline double cp1_tangent_norm(const Vec3& eta) { return 0.5 * eta.norm(); }

/// Image in T_phi S2 of the infinitesimal action of xi: d/dt Ad(exp(t xi)) phi = [xi, phi].
inline Vec3 cp1_infinitesimal_action(const Vec3& xi, const Vec3& phi) { return bracket(xi, phi); }

}  // namespace hopf
