#include "hopf/gauge.hpp"

namespace hopf {

FormJet coisotropy_jet(const MapField& phi) {
  LatticeField omega = pullback_coisotropy(phi);
  LatticeField d_omega = 2.0 * self_wedge(omega);
  return {std::move(omega), std::move(d_omega)};
}

FormJet maurer_cartan_jet(const StabilizerField& w, MaurerCartanRule rule) {
  LatticeField mu = maurer_cartan(w, rule);
  LatticeField d_mu = -1.0 * self_wedge(mu);
  return {std::move(mu), std::move(d_mu)};
}

FormJet adjoint_inverse_jet(const StabilizerField& w, const FormJet& mu, const FormJet& beta) {
  LatticeField value = adjoint_inverse(w.w, beta.value);
  LatticeField dv = adjoint_inverse(w.w, beta.d);
  dv -= bracket_wedge(mu.value, value);
  return {std::move(value), std::move(dv)};
}

FormJet gauge_transform_jet(const FormJet& b, const StabilizerField& w, const MapField& phi,
                            MaurerCartanRule rule) {
  const FormJet mu = maurer_cartan_jet(w, rule);
  const FormJet omega = coisotropy_jet(phi);
  const FormJet rb = adjoint_inverse_jet(w, mu, b);
  const FormJet ro = adjoint_inverse_jet(w, mu, omega);
  LatticeField value = gauge_transform_potential(PotentialField(b.value), w, phi, rule).a;
  LatticeField dv = rb.d;
  dv += mu.d;
  dv -= ro.d;
  dv += omega.d;
  return {std::move(value), std::move(dv)};
}

}  // namespace hopf
