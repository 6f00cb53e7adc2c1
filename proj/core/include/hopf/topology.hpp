#pragma once

#include "hopf/fields.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace hopf {

struct ChargeReport {
  std::vector<double> cs;                 ///< one entry per simple block
  std::array<double, 4> cs_terms{};       ///< integrals of the four split terms (block 0)
  std::optional<double> whitehead;
  std::optional<int> linking;
  std::vector<int> rounded;               ///< rounded cs values
  double deviation = 0.0;                 ///< max |cs - rounded|

  /// JSON document with keys cs, whitehead, linking, rounded, deviation.
  std::string to_json() const;
};

/// Normalization of the SU2 Chern-Simons integrand: Q = kChernSimonsSU2 * int tr(a^a^a).
/// Fixed so that the ball_degree(1) ansatz has charge +1.
extern const double kChernSimonsSU2;

/// Orientation of the helicity integral, fixed so that hopf(1) has charge +1.
extern const double kWhiteheadSign;

/// tr(alpha ^ beta ^ gamma) on the single 3-form slot at a site, for su2 1-forms given by
/// their three components (2x2 matrix trace).
double trace_triple(const Vec3 (&alpha)[3], const Vec3 (&beta)[3], const Vec3 (&gamma)[3]);

/// Chern-Simons (degree) charge of a pure-gauge potential, assembled from the four terms
/// tr(a_par^3) + 3 tr(a_par^2 ^ a_perp) + 3 tr(a_par ^ a_perp^2) + tr(a_perp^3). The split
/// is taken against phi (or the constant i when phi is absent). The link potentials are
/// first turned into fourth-order site values of u^-1 du (Richardson combination of the
/// centered one- and two-link logarithms).
ChargeReport chern_simons_charge(const PotentialField& a, const MapField* phi = nullptr);

/// Pullback of the normalized area form, F = psi^*(area / 4 pi), per plaquette: the signed
/// solid angle of the plaquette's two spherical triangles plus the areas between the
/// image links and their geodesic chords, divided by 4 pi h^2. Closed exactly under the
/// forward-difference d.
LatticeField area_form(const MapField& psi);

/// Flux of F through the three coordinate 2-tori (slots 01, 02, 12).
std::array<double, 3> torus_fluxes(const LatticeField& area);

/// Hopf invariant as the helicity integral of A ^ F with dA = F, solved spectrally.
/// Throws std::runtime_error if any torus flux exceeds 1e-6.
double whitehead_charge(const MapField& psi);

/// Linking number of the preimages of two regular values p, q of a CP1 map, from
/// piecewise-linear preimage curves on a Kuhn tetrahedral subdivision. Throws
/// std::runtime_error if a preimage is empty or degenerate.
int linking_charge(const MapField& psi, const Vec3& p, const Vec3& q);

/// Homotopy-sector label of psi = u phi.
struct SectorLabel {
  std::string reference_id;
  std::vector<int> charge;
  std::string modulus_note;
};

/// Throws std::invalid_argument if psi differs from act(u, phi) by more than 1e-10.
SectorLabel assign_sector(const MapField& psi, const MapField& phi, const LiftField& u,
                          const std::string& reference_id = "constant_i");

}  // namespace hopf
