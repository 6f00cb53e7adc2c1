#pragma once

#include "hopf/fields.hpp"

#include <cstdint>
#include <string>

namespace hopf {

enum class AnsatzKind { constant, hopf, ball_degree, great_circle };

std::string to_string(AnsatzKind kind);
/// Throws std::invalid_argument for an unknown name.
AnsatzKind parse_ansatz_kind(const std::string& name);

struct Ansatz {
  MapField psi;
  LiftField u;
};

/// Radial profile pi (1 - S(r / R)) with the quintic smoothstep S; zero for r >= R.
double ansatz_profile(double r, double radius);

/// Initial configurations with a consistent lift psi = act(u, phi).
///
/// hopf(Q) and ball_degree(Q) share the lift u = cos f(r) + sin f(r) n(x) with n the
/// rational map z -> z^Q of the direction from the cell centre, inside a ball of radius
/// L/3; u = 1 outside. hopf returns psi = u i u^-1, ball_degree returns psi = u as an
/// SU2-valued map. great_circle winds i -> j once along the first axis. With noise > 0
/// the lift is multiplied on the left by a smooth random SU2 field of that amplitude.
Ansatz make_ansatz(AnsatzKind kind, const Grid& grid, int charge = 1, double noise = 0.0,
                   std::uint64_t seed = 0);

}  // namespace hopf
