#include "hopf/energy.hpp"

#include "hopf/coisotropy.hpp"
#include "hopf/parallel.hpp"

#include <stdexcept>

namespace hopf {

namespace {

constexpr int kPlanes[3][2] = {{0, 1}, {0, 2}, {1, 2}};

// Fills the density field slab by slab; site_terms(s) returns the two terms at s.
template <class F>
EnergyReport assemble(const Grid& grid, const EnergyScales& scales, std::string tag,
                      F&& site_terms) {
  EnergyReport report;
  report.model_tag = std::move(tag);
  report.density = LatticeField(grid, 0, 1);
  const std::size_t slab = static_cast<std::size_t>(grid.n) * grid.n;
  const std::vector<double> sums = ordered_sum(grid.n, 2, [&](int z, double* acc) {
    for (std::size_t s = slab * z; s < slab * (z + 1); ++s) {
      const DensityTerms t = site_terms(s);
      const double dir = scales.dirichlet * t.dirichlet;
      const double sky = scales.skyrme * t.skyrme;
      report.density.at(s)[0] = dir + sky;
      acc[0] += dir;
      acc[1] += sky;
    }
  });
  const double vol = grid.cell_volume();
  report.dirichlet = sums[0] * vol;
  report.skyrme = sums[1] * vol;
  report.total = report.dirichlet + report.skyrme;
  return report;
}

}  // namespace

std::string to_string(EnergyVariant variant) {
  switch (variant) {
    case EnergyVariant::coisotropy: return "coisotropy";
    case EnergyVariant::cross_product: return "cross_product";
    case EnergyVariant::isotropic_skyrme: return "isotropic_skyrme";
  }
  return "unknown";
}

EnergyVariant parse_energy_variant(const std::string& name) {
  for (auto v : {EnergyVariant::coisotropy, EnergyVariant::cross_product,
                 EnergyVariant::isotropic_skyrme})
    if (to_string(v) == name) return v;
  throw std::invalid_argument("unknown energy variant '" + name + "'");
}

DensityTerms su2_density(const Vec3& d0, const Vec3& d1, const Vec3& d2) {
  const Vec3* d[3] = {&d0, &d1, &d2};
  DensityTerms t;
  t.dirichlet = 0.5 * (d0.squaredNorm() + d1.squaredNorm() + d2.squaredNorm());
  for (const auto& pl : kPlanes) t.skyrme += 0.25 * bracket(*d[pl[0]], *d[pl[1]]).squaredNorm();
  return t;
}

EnergyReport energy_map(const MapField& psi, EnergyVariant variant, const EnergyScales& scales) {
  const Grid& grid = psi.grid();
  if (variant == EnergyVariant::cross_product) {
    if (psi.target != MapTarget::sphere)
      throw std::invalid_argument("cross_product energy is defined for CP1-valued maps only");
    const LatticeField t = centered_tangent(psi);
    return assemble(grid, scales, "cross_product", [&](std::size_t s) {
      const Vec3 p = psi.point(s);
      Vec3 pt[3];
      for (int mu = 0; mu < 3; ++mu) {
        const Vec3 v = t.vec3(s, mu);
        pt[mu] = v - v.dot(p) * p;
      }
      DensityTerms terms;
      for (int mu = 0; mu < 3; ++mu) terms.dirichlet += 0.5 * pt[mu].squaredNorm();
      for (const auto& pl : kPlanes) terms.skyrme += 0.25 * pt[pl[0]].cross(pt[pl[1]]).squaredNorm();
      return terms;
    });
  }

  const LatticeField omega = pullback_coisotropy(psi);
  // CP1 is symmetric, so [omega_perp, omega_perp] already lies in the isotropy algebra and
  // both variants coincide; for SU2/{1} the isotropy algebra is trivial.
  const bool drop_skyrme =
      variant == EnergyVariant::isotropic_skyrme && psi.target == MapTarget::group;
  return assemble(grid, scales, to_string(variant), [&](std::size_t s) {
    DensityTerms terms = su2_density(omega.vec3(s, 0), omega.vec3(s, 1), omega.vec3(s, 2));
    if (drop_skyrme) terms.skyrme = 0.0;
    return terms;
  });
}

EnergyReport energy_map(const CosetMapField& psi, EnergyVariant variant, const EnergyScales& scales) {
  if (variant == EnergyVariant::cross_product)
    throw std::invalid_argument("cross_product energy is defined for CP1-valued maps only");
  const HomogeneousPair& pair = *psi.pair;
  const LatticeField omega = pullback_coisotropy(psi);
  const int n = pair.dim_g();
  return assemble(psi.grid, scales, to_string(variant), [&](std::size_t s) {
    LieVector w[3];
    DensityTerms terms;
    for (int mu = 0; mu < 3; ++mu) {
      w[mu] = Eigen::Map<const LieVector>(omega.at(s, mu), n);
      terms.dirichlet += 0.5 * w[mu].squaredNorm();
    }
    for (const auto& pl : kPlanes) {
      LieVector br = pair.bracket(w[pl[0]], w[pl[1]]);
      if (variant == EnergyVariant::isotropic_skyrme)
        br = project_isotropy(pair, psi.reps[s], br).parallel;
      terms.skyrme += 0.25 * br.squaredNorm();
    }
    return terms;
  });
}

LatticeField covariant_potential(const PotentialField& a, const MapField& phi) {
  require_same_grid(a.grid(), phi.grid(), "covariant_potential");
  PotentialField split = a;
  if (!split.has_split()) split_potential(split, phi);
  LatticeField out = *split.perp;
  out += pullback_coisotropy(phi);
  return out;
}

EnergyReport energy_potential(const PotentialField& a, const MapField& phi,
                              const EnergyScales& scales) {
  const LatticeField dphi = covariant_potential(a, phi);
  return assemble(a.grid(), scales, "potential", [&](std::size_t s) {
    return su2_density(dphi.vec3(s, 0), dphi.vec3(s, 1), dphi.vec3(s, 2));
  });
}

LatticeField energy_gradient_ambient(const MapField& psi, const EnergyScales& scales) {
  if (psi.target != MapTarget::sphere)
    throw std::invalid_argument("energy_gradient requires a CP1-valued map");
  const Grid& grid = psi.grid();
  const LatticeField t = centered_tangent(psi);
  const LatticeField omega = pullback_coisotropy(psi);

  // G_mu = d e / d omega_mu.
  LatticeField g(grid, 1, 3);
  parallel_for(grid.n, [&](int z) {
    const std::size_t slab = static_cast<std::size_t>(grid.n) * grid.n;
    for (std::size_t s = slab * z; s < slab * (z + 1); ++s) {
      Vec3 w[3] = {omega.vec3(s, 0), omega.vec3(s, 1), omega.vec3(s, 2)};
      for (int mu = 0; mu < 3; ++mu) {
        Vec3 gm = scales.dirichlet * w[mu];
        for (int nu = 0; nu < 3; ++nu) {
          if (nu == mu) continue;
          gm += scales.skyrme * 2.0 * (w[nu].squaredNorm() * w[mu] - w[mu].dot(w[nu]) * w[nu]);
        }
        g.set_vec3(s, mu, gm);
      }
    }
  });

  LatticeField grad(grid, 0, 3);
  const double inv_2h = 0.5 / grid.h();
  const double vol = grid.cell_volume();
  parallel_for(grid.n, [&](int z) {
    const std::size_t slab = static_cast<std::size_t>(grid.n) * grid.n;
    for (std::size_t s = slab * z; s < slab * (z + 1); ++s) {
      Vec3 acc = Vec3::Zero();
      for (int mu = 0; mu < 3; ++mu) {
        acc += 0.5 * t.vec3(s, mu).cross(g.vec3(s, mu));
        const std::size_t back = grid.shift(s, mu, -1);
        const std::size_t fwd = grid.shift(s, mu, 1);
        acc += inv_2h * 0.5 *
               (g.vec3(back, mu).cross(psi.point(back)) - g.vec3(fwd, mu).cross(psi.point(fwd)));
      }
      grad.set_vec3(s, 0, vol * acc);
    }
  });
  return grad;
}

LatticeField energy_gradient(const MapField& psi, const EnergyScales& scales) {
  LatticeField grad = energy_gradient_ambient(psi, scales);
  for (std::size_t s = 0; s < grad.sites(); ++s) {
    const Vec3 p = psi.point(s);
    const Vec3 v = grad.vec3(s);
    grad.set_vec3(s, 0, v - v.dot(p) * p);
  }
  return grad;
}

}  // namespace hopf
