#pragma once

#include "hopf/fields.hpp"

#include <string>

namespace hopf {

enum class EnergyVariant { coisotropy, cross_product, isotropic_skyrme };

std::string to_string(EnergyVariant variant);
EnergyVariant parse_energy_variant(const std::string& name);

/// Optional global factors multiplying the Dirichlet and Skyrme terms.
struct EnergyScales {
  double dirichlet = 1.0;
  double skyrme = 1.0;
};

struct EnergyReport {
  double dirichlet = 0.0;
  double skyrme = 0.0;
  double total = 0.0;
  LatticeField density;  ///< scalar 0-form, total = integral of density
  std::string model_tag;
};

/// e = 1/2 sum_mu |omega_mu|^2 + 1/4 sum_{mu<nu} |W_{mu nu}|^2 on the centered pullback
/// omega = psi^* omega_perp, with W = omega ^ omega = [omega_mu, omega_nu] for the
/// coisotropy variant and its isotropic part for isotropic_skyrme.
///
/// cross_product evaluates 1/2 |d psi|^2 + 1/4 |d psi ^ d psi|^2 with the cross product on
/// the unit sphere in R^3, from the tangentially projected centered differences. Its two
/// terms are exactly 4 times those of the coisotropy variant (kCrossProductRatio).
EnergyReport energy_map(const MapField& psi, EnergyVariant variant = EnergyVariant::coisotropy,
                        const EnergyScales& scales = {});

/// Generic pair (e.g. SU3/T2); cross_product is rejected.
EnergyReport energy_map(const CosetMapField& psi, EnergyVariant variant = EnergyVariant::coisotropy,
                        const EnergyScales& scales = {});

/// Ratio of the cross-product functional on the unit sphere to the coisotropy one on CP1,
/// for both the Dirichlet and the Skyrme term.
inline constexpr double kCrossProductRatio = 4.0;

/// D_phi a = a_perp + phi^* omega_perp, computing the split of a against phi if needed.
LatticeField covariant_potential(const PotentialField& a, const MapField& phi);

/// E_phi(a) = 1/2 |D_phi a|^2 + 1/4 |D_phi a ^ D_phi a|^2.
EnergyReport energy_potential(const PotentialField& a, const MapField& phi,
                              const EnergyScales& scales = {});

/// Density of an su2-valued 1-form D at a site, split into (dirichlet, skyrme) parts.
struct DensityTerms {
  double dirichlet = 0.0;
  double skyrme = 0.0;
};
DensityTerms su2_density(const Vec3& d0, const Vec3& d1, const Vec3& d2);

/// Exact gradient of the discretized coisotropy energy with respect to the site values
/// of a sphere-valued psi, projected onto T_psi S2 (0-form with 3 components).
LatticeField energy_gradient(const MapField& psi, const EnergyScales& scales = {});

/// Same as energy_gradient but without the tangential projection.
LatticeField energy_gradient_ambient(const MapField& psi, const EnergyScales& scales = {});

}  // namespace hopf
