#pragma once

#include "hopf/fields.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace hopf {

/// How w^-1 dw of a stabilizer is discretized.
enum class MaurerCartanRule {
  /// phi D theta + sin(theta) conj(w) P D phi with centered D and the tangential
  /// projection P; satisfies (w^-1 dw)_perp = Ad(w^-1) phi^*omega - phi^*omega exactly.
  centered,
  /// log(w(x)^-1 w(x + e_mu)) / h on links.
  principal_log,
};

/// w(x) = cos theta(x) + sin theta(x) phi(x), a section of the isotropy bundle of phi.
struct StabilizerField {
  LiftField w;
  MapField phi;
  LatticeField theta;
};

/// CP1 only. Throws std::invalid_argument for other targets.
StabilizerField make_stabilizer(const MapField& phi, const LatticeField& theta);

/// Discrete w^-1 dw as an su2-valued 1-form.
LatticeField maurer_cartan(const StabilizerField& w,
                           MaurerCartanRule rule = MaurerCartanRule::centered);

/// Slotwise Ad(w^-1) on an su2-valued form of any degree.
LatticeField adjoint_inverse(const LiftField& w, const LatticeField& form);

/// Slotwise isotropic / coisotropic parts relative to phi.
LatticeField parallel_part(const LatticeField& form, const MapField& phi);
LatticeField perp_part(const LatticeField& form, const MapField& phi);

/// Largest |form_perp| over sites and slots.
double isotropy_residual(const LatticeField& form, const MapField& phi);

/// alpha ^ alpha with the matrix product (imaginary part; the real part cancels).
LatticeField self_wedge(const LatticeField& alpha);
/// [alpha, beta] with the wedge convention [alpha_mu, beta_nu] - [alpha_nu, beta_mu].
LatticeField bracket_wedge(const LatticeField& alpha, const LatticeField& beta);

/// d Phi for Phi = pr onto the isotropy line of phi, from centered differences:
/// (d_mu Phi) xi = (xi . d_mu phi) phi + (xi . phi) d_mu phi. 1-form of row-major 3x3 matrices.
LatticeField projector_derivative(const MapField& phi);
/// dPhi ^ beta for an su2-valued form beta of degree 1 or 2.
LatticeField projector_wedge(const LatticeField& dphi, const LatticeField& beta);

/// Trivial-bundle action a^w = Ad(w^-1) a + w^-1 dw.
PotentialField gauge_transform(const PotentialField& a, const StabilizerField& w,
                               MaurerCartanRule rule = MaurerCartanRule::centered);

/// Coset-bundle action b^w = Ad(w^-1) b + w^-1 dw - (Ad(w^-1) - I) phi^*omega_perp.
/// Throws std::invalid_argument if b is not isotropic within 1e-10.
PotentialField gauge_transform_potential(const PotentialField& b, const StabilizerField& w,
                                         const MapField& phi,
                                         MaurerCartanRule rule = MaurerCartanRule::centered);

/// F(b) = db + b ^ b - [b, Omega] - (Omega ^ Omega)_par with Omega = phi^*omega_perp,
/// using the lattice d and site-wise wedges.
LatticeField coset_curvature(const PotentialField& b, const MapField& phi);

/// Same expression with the derivative db supplied instead of computed.
LatticeField coset_curvature(const LatticeField& b, const LatticeField& db, const LatticeField& omega,
                             const MapField& phi);

/// A form together with a supplied exterior derivative. Products and gauge actions
/// propagate the derivative by the Leibniz rules, so identities between jets hold
/// exactly whenever they are algebraic consequences of those rules.
struct FormJet {
  LatticeField value;
  LatticeField d;
};

/// Omega with dOmega = 2 Omega ^ Omega (the structure equation on CP1).
FormJet coisotropy_jet(const MapField& phi);
/// mu = w^-1 dw with d mu = -mu ^ mu.
FormJet maurer_cartan_jet(const StabilizerField& w, MaurerCartanRule rule = MaurerCartanRule::centered);
/// Ad(w^-1) beta with d(Ad(w^-1) beta) = Ad(w^-1) d beta - [mu, Ad(w^-1) beta].
FormJet adjoint_inverse_jet(const StabilizerField& w, const FormJet& mu, const FormJet& beta);
/// b^w as a jet, matching gauge_transform_potential on values.
FormJet gauge_transform_jet(const FormJet& b, const StabilizerField& w, const MapField& phi,
                            MaurerCartanRule rule = MaurerCartanRule::centered);

/// Minimizes theta -> |b^{w(theta)}|^2_{L2} by gradient descent with Barzilai-Borwein steps
/// and monotone acceptance, starting from theta = 0.
struct GaugeSmoothResult {
  StabilizerField w;
  std::vector<double> objective;  ///< accepted objective values, starting with theta = 0
};
GaugeSmoothResult gauge_smooth(const PotentialField& b, const MapField& phi, int iterations,
                               double step);

/// Result of one identity check across grid sizes.
struct IdentityResidual {
  std::string name;
  bool algebraic = false;          ///< pointwise-algebraic (roundoff budget) vs differential
  std::vector<int> sizes;
  std::vector<double> residual;    ///< relative L2 residual per size
  double fitted_order = 0.0;       ///< log-log slope against h (differential only)
  double budget = 0.0;             ///< max residual (algebraic) or min order (differential)
  bool passed = false;
};

/// Least-squares slope of log(residual) against log(h = L / n).
double fitted_order(const std::vector<int>& sizes, const std::vector<double>& residual);

/// Evaluates the gauge-calculus identities on analytic random fields sampled at each size.
std::vector<IdentityResidual> identity_suite(const std::vector<int>& sizes, std::uint64_t seed);

}  // namespace hopf
