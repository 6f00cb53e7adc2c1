#include "hopf/gauge.hpp"

#include "hopf/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

namespace hopf {

namespace {

// Analytic inputs sampled on one grid. Fourier parameters depend only on the seed,
// so the same continuum fields are sampled at every resolution.
struct Sample {
  MapField phi;
  LiftField v;             // phi = v i v^-1
  PotentialField flat;     // pure gauge, hence flat
  LatticeField generic;    // non-flat su2 1-form
  LatticeField beta;       // scalar 1-form
  LatticeField b;          // beta phi, isotropic
  StabilizerField w;
  StabilizerField w2;
  LatticeField omega;
  LatticeField dphi;
};

LatticeField scalar_one_form(const Grid& grid, std::uint64_t seed, double amplitude) {
  LatticeField out(grid, 1, 1);
  for (int mu = 0; mu < 3; ++mu) {
    const LatticeField c = smooth_random_scalar(grid, seed + mu, amplitude, 1);
    for (std::size_t s = 0; s < grid.sites(); ++s) *out.at(s, mu) = *c.at(s);
  }
  return out;
}

LatticeField su2_one_form(const Grid& grid, std::uint64_t seed, double amplitude) {
  LatticeField out(grid, 1, 3);
  for (int c = 0; c < 3; ++c) {
    const LatticeField f = scalar_one_form(grid, seed + 3 * c, amplitude);
    for (std::size_t s = 0; s < grid.sites(); ++s)
      for (int mu = 0; mu < 3; ++mu) out.at(s, mu)[c] = *f.at(s, mu);
  }
  return out;
}

// Scalar form times phi, slotwise.
LatticeField times_phi(const LatticeField& scalar, const MapField& phi) {
  LatticeField out(scalar.grid(), scalar.degree(), 3);
  for_each_site(scalar.grid(), [&](std::size_t s) {
    for (int slot = 0; slot < scalar.slots(); ++slot)
      out.set_vec3(s, slot, *scalar.at(s, slot) * phi.point(s));
  });
  return out;
}

Sample make_sample(int n, std::uint64_t seed) {
  const Grid grid(n);
  Sample out;
  out.v = smooth_random_lift(grid, seed, 0.8, 1);
  out.phi = act(out.v, MapField::constant(grid));
  out.flat = pure_gauge_potential(smooth_random_lift(grid, seed + 1, 0.8, 1));
  out.generic = su2_one_form(grid, seed + 10, 0.6);
  out.beta = scalar_one_form(grid, seed + 30, 0.6);
  out.b = times_phi(out.beta, out.phi);
  out.w = make_stabilizer(out.phi, smooth_random_scalar(grid, seed + 40, 1.0, 1));
  out.w2 = make_stabilizer(out.phi, smooth_random_scalar(grid, seed + 41, 1.0, 1));
  out.omega = pullback_coisotropy(out.phi);
  out.dphi = projector_derivative(out.phi);
  return out;
}

// Curvature from the lift: F(beta phi) = d(beta + <v^-1 dv, i>) phi.
LatticeField lift_curvature(const Sample& s) {
  const LatticeField av = pure_gauge_potential(s.v).a;
  LatticeField conn = s.beta;
  for (std::size_t site = 0; site < conn.sites(); ++site)
    for (int mu = 0; mu < 3; ++mu) *conn.at(site, mu) += av.at(site, mu)[0];
  return times_phi(d(conn), s.phi);
}

struct Pair {
  LatticeField lhs;
  LatticeField rhs;
};

double relative_residual(const Pair& p) {
  const double scale = std::max({l2_norm(p.lhs), l2_norm(p.rhs), 1e-300});
  return l2_norm(p.lhs - p.rhs) / scale;
}

struct IdentityDef {
  std::string name;
  bool algebraic;
  double budget;
  std::function<Pair(const Sample&)> eval;
};

std::vector<IdentityDef> definitions() {
  std::vector<IdentityDef> defs;

  // (a^w)_perp + Omega = Ad(w^-1)(a_perp + Omega).
  defs.push_back({"covariant_potential_equivariance", true, 1e-10, [](const Sample& s) {
                    const LatticeField aw = gauge_transform(PotentialField(s.generic), s.w).a;
                    LatticeField lhs = perp_part(aw, s.phi) + s.omega;
                    LatticeField rhs = adjoint_inverse(s.w.w, perp_part(s.generic, s.phi) + s.omega);
                    return Pair{std::move(lhs), std::move(rhs)};
                  }});

  // F(b^w) = Ad(w^-1) F(b) with derivatives propagated by the Leibniz rules.
  defs.push_back({"curvature_equivariance_shared", true, 1e-8, [](const Sample& s) {
                    const FormJet b{s.b, d(s.b)};
                    const FormJet bw = gauge_transform_jet(b, s.w, s.phi);
                    LatticeField lhs = coset_curvature(bw.value, bw.d, s.omega, s.phi);
                    LatticeField rhs =
                        adjoint_inverse(s.w.w, coset_curvature(b.value, b.d, s.omega, s.phi));
                    return Pair{std::move(lhs), std::move(rhs)};
                  }});

  // (I - Phi)(a_perp ^ a_perp) = 0 on a symmetric space.
  defs.push_back({"perp_square_isotropic", true, 1e-10, [](const Sample& s) {
                    const LatticeField sq = self_wedge(perp_part(s.flat.a, s.phi));
                    LatticeField lhs = perp_part(sq, s.phi) + sq;
                    return Pair{std::move(lhs), sq};
                  }});

  // (b^w1)^w2 = b^(w1 w2) for stabilizers of the same phi.
  defs.push_back({"gauge_composition", true, 1e-10, [](const Sample& s) {
                    const PotentialField b1 = gauge_transform_potential(PotentialField(s.b), s.w, s.phi);
                    LatticeField lhs = gauge_transform_potential(b1, s.w2, s.phi).a;
                    const StabilizerField w12 = make_stabilizer(s.phi, s.w.theta + s.w2.theta);
                    LatticeField rhs = gauge_transform_potential(PotentialField(s.b), w12, s.phi).a;
                    return Pair{std::move(lhs), std::move(rhs)};
                  }});

  // 0^w = (w^-1 dw)_par.
  defs.push_back({"gauge_of_zero", true, 1e-10, [](const Sample& s) {
                    const PotentialField zero(LatticeField(s.phi.grid(), 1, 3));
                    LatticeField lhs = gauge_transform_potential(zero, s.w, s.phi).a;
                    LatticeField rhs = parallel_part(maurer_cartan(s.w), s.phi);
                    return Pair{std::move(lhs), std::move(rhs)};
                  }});

  defs.push_back({"curvature_equivariance_lattice", false, 0.9, [](const Sample& s) {
                    const PotentialField bw = gauge_transform_potential(PotentialField(s.b), s.w, s.phi);
                    LatticeField lhs = coset_curvature(bw, s.phi);
                    LatticeField rhs = adjoint_inverse(s.w.w, coset_curvature(PotentialField(s.b), s.phi));
                    return Pair{std::move(lhs), std::move(rhs)};
                  }});

  // F(b) = db + b ^ b - [b, Omega] - (Omega ^ Omega)_par against the lift route.
  defs.push_back({"curvature_formula", false, 0.9, [](const Sample& s) {
                    return Pair{coset_curvature(PotentialField(s.b), s.phi), lift_curvature(s)};
                  }});

  // F(b) = (db)_par + b ^ b - (Omega ^ Omega)_par.
  defs.push_back({"curvature_parallel_form", false, 0.9, [](const Sample& s) {
                    LatticeField lhs = parallel_part(d(s.b), s.phi) + self_wedge(s.b) -
                                       parallel_part(self_wedge(s.omega), s.phi);
                    return Pair{std::move(lhs), lift_curvature(s)};
                  }});

  // (db)_perp = [Omega, b].
  defs.push_back({"perp_derivative", false, 0.9, [](const Sample& s) {
                    return Pair{perp_part(d(s.b), s.phi), bracket_wedge(s.omega, s.b)};
                  }});

  // Flat a: F(a_par) = dPhi ^ a_perp - Phi(a_perp ^ a_perp) - Phi(Omega ^ Omega).
  defs.push_back({"flat_parallel_curvature", false, 0.9, [](const Sample& s) {
                    const LatticeField par = parallel_part(s.flat.a, s.phi);
                    const LatticeField perp = perp_part(s.flat.a, s.phi);
                    LatticeField lhs = coset_curvature(PotentialField(par), s.phi);
                    LatticeField rhs = projector_wedge(s.dphi, perp) -
                                       parallel_part(self_wedge(perp), s.phi) -
                                       parallel_part(self_wedge(s.omega), s.phi);
                    return Pair{std::move(lhs), std::move(rhs)};
                  }});

  // Flat a: d a_perp = -dPhi ^ a_par - dPhi ^ a_perp - [a_par, a_perp] - (I - Phi)(a_perp ^ a_perp).
  defs.push_back({"flat_perp_derivative", false, 0.9, [](const Sample& s) {
                    const LatticeField par = parallel_part(s.flat.a, s.phi);
                    const LatticeField perp = perp_part(s.flat.a, s.phi);
                    LatticeField rhs = -1.0 * projector_wedge(s.dphi, par) -
                                       projector_wedge(s.dphi, perp) - bracket_wedge(par, perp) -
                                       perp_part(self_wedge(perp), s.phi);
                    return Pair{d(perp), std::move(rhs)};
                  }});

  // Symmetric case: F(a_par) = dPhi ^ a_perp - a_perp ^ a_perp - Omega ^ Omega.
  defs.push_back({"flat_parallel_curvature_symmetric", false, 0.9, [](const Sample& s) {
                    const LatticeField par = parallel_part(s.flat.a, s.phi);
                    const LatticeField perp = perp_part(s.flat.a, s.phi);
                    LatticeField lhs = coset_curvature(PotentialField(par), s.phi);
                    LatticeField rhs =
                        projector_wedge(s.dphi, perp) - self_wedge(perp) - self_wedge(s.omega);
                    return Pair{std::move(lhs), std::move(rhs)};
                  }});

  // Symmetric case: d a_perp = -dPhi ^ a_par - dPhi ^ a_perp - [a_par, a_perp].
  defs.push_back({"flat_perp_derivative_symmetric", false, 0.9, [](const Sample& s) {
                    const LatticeField par = parallel_part(s.flat.a, s.phi);
                    const LatticeField perp = perp_part(s.flat.a, s.phi);
                    LatticeField rhs = -1.0 * projector_wedge(s.dphi, par) -
                                       projector_wedge(s.dphi, perp) - bracket_wedge(par, perp);
                    return Pair{d(perp), std::move(rhs)};
                  }});

  // Symmetric case: d(a_perp ^ a_perp) = -[dPhi ^ a_par, a_perp] + dPhi ^ (a_perp ^ a_perp).
  defs.push_back({"flat_perp_square_derivative", false, 0.9, [](const Sample& s) {
                    const LatticeField par = parallel_part(s.flat.a, s.phi);
                    const LatticeField perp = perp_part(s.flat.a, s.phi);
                    const LatticeField sq = self_wedge(perp);
                    LatticeField rhs = projector_wedge(s.dphi, sq) -
                                       bracket_wedge(projector_wedge(s.dphi, par), perp);
                    return Pair{d(sq), std::move(rhs)};
                  }});

  // dPhi ^ a_par = (d a_par)_perp.
  defs.push_back({"projector_parallel", false, 0.9, [](const Sample& s) {
                    const LatticeField par = parallel_part(s.generic, s.phi);
                    return Pair{projector_wedge(s.dphi, par), perp_part(d(par), s.phi)};
                  }});

  // dPhi ^ a_perp = -(d a_perp)_par.
  defs.push_back({"projector_perp", false, 0.9, [](const Sample& s) {
                    const LatticeField perp = perp_part(s.generic, s.phi);
                    return Pair{projector_wedge(s.dphi, perp), -1.0 * parallel_part(d(perp), s.phi)};
                  }});

  return defs;
}

}  // namespace

double fitted_order(const std::vector<int>& sizes, const std::vector<double>& residual) {
  if (sizes.size() != residual.size() || sizes.size() < 2)
    throw std::invalid_argument("fitted_order: need at least two matching samples");
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  const double m = static_cast<double>(sizes.size());
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    const double x = std::log(1.0 / sizes[i]);
    const double y = std::log(std::max(residual[i], 1e-300));
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  return (m * sxy - sx * sy) / (m * sxx - sx * sx);
}

std::vector<IdentityResidual> identity_suite(const std::vector<int>& sizes, std::uint64_t seed) {
  if (sizes.size() < 2) throw std::invalid_argument("identity_suite: need at least two grid sizes");
  const std::vector<IdentityDef> defs = definitions();
  std::vector<IdentityResidual> out(defs.size());
  for (std::size_t i = 0; i < defs.size(); ++i) {
    out[i].name = defs[i].name;
    out[i].algebraic = defs[i].algebraic;
    out[i].budget = defs[i].budget;
    out[i].sizes = sizes;
  }
  for (int n : sizes) {
    const Sample sample = make_sample(n, seed);
    for (std::size_t i = 0; i < defs.size(); ++i)
      out[i].residual.push_back(relative_residual(defs[i].eval(sample)));
  }
  for (auto& r : out) {
    if (r.algebraic) {
      r.passed = *std::max_element(r.residual.begin(), r.residual.end()) <= r.budget;
    } else {
      r.fitted_order = fitted_order(r.sizes, r.residual);
      r.passed = r.fitted_order >= r.budget;
    }
  }
  return out;
}

}  // namespace hopf
