#include "hopf/coisotropy.hpp"

#include <algorithm>
#include <stdexcept>

namespace hopf {

namespace {

void require_unit(const Vec3& phi) {
  if (std::abs(phi.norm() - 1.0) > kConstraintTol)
    throw std::invalid_argument("CP1 point must be a unit imaginary quaternion");
}

}  // namespace

IsotropySplit<Vec3> project_isotropy(const Vec3& phi, const Vec3& xi) {
  require_unit(phi);
  const Vec3 par = xi.dot(phi) * phi;
  // 1/2 phi [xi, phi] = phi x (xi x phi) for unit phi; the real part vanishes identically.
  const Quaternion perp = 0.5 * (Quaternion::pure(phi) * Quaternion::pure(bracket(xi, phi)));
  return {par, perp.vec()};
}

IsotropySplit<LieVector> project_isotropy(const HomogeneousPair& pair, const GroupMatrix& g,
                                          const LieVector& xi) {
  const GroupMatrix g_inv = g.adjoint();
  const LieVector local = pair.adjoint(g_inv, xi);
  LieVector par = pair.adjoint(g, pair.project_h(local));
  LieVector perp = pair.adjoint(g, pair.project_hperp(local));
  return {std::move(par), std::move(perp)};
}

Vec3 coisotropy_form(const Vec3& q, const Vec3& eta) {
  require_unit(q);
  if (std::abs(eta.dot(q)) > kConstraintTol * std::max(1.0, eta.norm()))
    throw std::invalid_argument("coisotropy_form: vector is not tangent to S2 at q");
  return 0.5 * (Quaternion::pure(q) * Quaternion::pure(eta)).vec();
}

LieVector coisotropy_form(const HomogeneousPair& pair, const GroupMatrix& g, const LieVector& xi) {
  return project_isotropy(pair, g, xi).perp;
}

}  // namespace hopf
