#include "hopf/fields.hpp"

#include "hopf/coisotropy.hpp"
#include "hopf/parallel.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

namespace hopf {

namespace {

double component_norm(const double* p, int dim) {
  double acc = 0.0;
  for (int c = 0; c < dim; ++c) acc += p[c] * p[c];
  return std::sqrt(acc);
}

double max_norm_violation(const LatticeField& f) {
  double worst = 0.0;
  for (std::size_t s = 0; s < f.sites(); ++s)
    worst = std::max(worst, std::abs(component_norm(f.at(s), f.dim()) - 1.0));
  return worst;
}

void renormalize_field(LatticeField& f) {
  const int dim = f.dim();
  for_each_site(f.grid(), [&](std::size_t s) {
    double* p = f.at(s);
    const double norm = component_norm(p, dim);
    if (norm == 0.0) throw std::domain_error("cannot renormalize a zero field value");
    for (int c = 0; c < dim; ++c) p[c] /= norm;
  });
}

// Sum of a few plane waves with integer wave vectors; the parameters do not depend on
// the grid, so one seed describes the same smooth function at every resolution.
struct FourierSeries {
  struct Term {
    std::array<int, 3> k;
    double amplitude;
    double phase;
  };
  std::vector<std::vector<Term>> components;

  FourierSeries(int count, std::uint64_t seed, int modes) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> wave(-modes, modes);
    std::uniform_real_distribution<double> amp(-1.0, 1.0);
    std::uniform_real_distribution<double> ph(0.0, 2.0 * std::numbers::pi);
    constexpr int kTerms = 4;
    components.resize(count);
    for (auto& terms : components) {
      for (int t = 0; t < kTerms; ++t) {
        std::array<int, 3> k{};
        do {
          k = {wave(rng), wave(rng), wave(rng)};
        } while (k[0] == 0 && k[1] == 0 && k[2] == 0);
        const double a = amp(rng) / kTerms;
        terms.push_back({k, a, ph(rng)});
      }
    }
  }

  double eval(int component, const std::array<double, 3>& x, double length) const {
    double acc = 0.0;
    const double w = 2.0 * std::numbers::pi / length;
    for (const Term& t : components[component])
      acc += t.amplitude * std::sin(w * (t.k[0] * x[0] + t.k[1] * x[1] + t.k[2] * x[2]) + t.phase);
    return acc;
  }
};

}  // namespace

std::string to_string(MapTarget target) {
  return target == MapTarget::sphere ? "sphere" : "group";
}

MapField::MapField(const Grid& grid, MapTarget target_)
    : values(grid, 0, target_ == MapTarget::sphere ? 3 : 4), target(target_) {}

MapField MapField::constant(const Grid& grid, MapTarget target) {
  MapField f(grid, target);
  for (std::size_t s = 0; s < grid.sites(); ++s) {
    if (target == MapTarget::sphere)
      f.set_point(s, Vec3::UnitX());
    else
      f.set_element(s, Quaternion::identity());
  }
  return f;
}

Quaternion MapField::element(std::size_t site) const {
  const double* p = values.at(site);
  if (target == MapTarget::sphere) return {0.0, p[0], p[1], p[2]};
  return {p[0], p[1], p[2], p[3]};
}

void MapField::set_element(std::size_t site, const Quaternion& q) {
  double* p = values.at(site);
  if (target == MapTarget::sphere) {
    p[0] = q.x;
    p[1] = q.y;
    p[2] = q.z;
  } else {
    p[0] = q.w;
    p[1] = q.x;
    p[2] = q.y;
    p[3] = q.z;
  }
}

double MapField::constraint_violation() const { return max_norm_violation(values); }
void MapField::renormalize() { renormalize_field(values); }

LiftField::LiftField(const Grid& grid) : values(grid, 0, 4) {}

LiftField LiftField::identity(const Grid& grid) {
  LiftField u(grid);
  for (std::size_t s = 0; s < grid.sites(); ++s) u.set(s, Quaternion::identity());
  return u;
}

double LiftField::constraint_violation() const { return max_norm_violation(values); }
void LiftField::renormalize() { renormalize_field(values); }

LiftField operator*(const LiftField& u, const LiftField& w) {
  require_same_grid(u.grid(), w.grid(), "lift product");
  LiftField out(u.grid());
  for_each_site(u.grid(), [&](std::size_t s) { out.set(s, u.at(s) * w.at(s)); });
  return out;
}

LiftField inverse(const LiftField& u) {
  LiftField out(u.grid());
  for_each_site(u.grid(), [&](std::size_t s) { out.set(s, u.at(s).conj()); });
  return out;
}

PotentialField pure_gauge_potential(const LiftField& u) {
  const Grid& grid = u.grid();
  LatticeField a(grid, 1, 3);
  const double inv_h = 1.0 / grid.h();
  constexpr double kCutMargin = 1e-6;
  for_each_site(grid, [&](std::size_t s) {
    const Quaternion here_inv = u.at(s).conj();
    for (int mu = 0; mu < 3; ++mu) {
      const Quaternion l = here_inv * u.at(grid.shift(s, mu, 1));
      if (log_angle(l) >= std::numbers::pi - kCutMargin)
        throw std::runtime_error("field too rough for grid");
      a.set_vec3(s, mu, inv_h * principal_log(l));
    }
  });
  return PotentialField(std::move(a));
}

Quaternion link(const PotentialField& a, std::size_t site, int axis) {
  return Quaternion::exp(a.grid().h() * a.a.vec3(site, axis));
}

double plaquette_defect(const PotentialField& a) {
  const Grid& grid = a.grid();
  std::vector<double> worst(grid.n, 0.0);
  const std::size_t slab = static_cast<std::size_t>(grid.n) * grid.n;
  parallel_for(grid.n, [&](int z) {
    for (std::size_t s = slab * z; s < slab * (z + 1); ++s) {
      for (int mu = 0; mu < 3; ++mu) {
        for (int nu = mu + 1; nu < 3; ++nu) {
          const Quaternion p = link(a, s, mu) * link(a, grid.shift(s, mu, 1), nu) *
                               link(a, grid.shift(s, nu, 1), mu).conj() * link(a, s, nu).conj();
          worst[z] = std::max(worst[z], max_abs_diff(p, Quaternion::identity()));
        }
      }
    }
  });
  double m = 0.0;
  for (double w : worst) m = std::max(m, w);
  return m;
}

void split_potential(PotentialField& a, const MapField& phi) {
  if (phi.target != MapTarget::sphere)
    throw std::invalid_argument("split_potential: reference map must be CP1-valued");
  require_same_grid(a.grid(), phi.grid(), "split_potential");
  LatticeField par(a.grid(), 1, 3);
  LatticeField perp(a.grid(), 1, 3);
  for_each_site(a.grid(), [&](std::size_t s) {
    const Vec3 p = phi.point(s);
    for (int mu = 0; mu < 3; ++mu) {
      const auto split = project_isotropy(p, a.a.vec3(s, mu));
      par.set_vec3(s, mu, split.parallel);
      perp.set_vec3(s, mu, split.perp);
    }
  });
  a.parallel = std::move(par);
  a.perp = std::move(perp);
}

SplitResidual split_residual(const PotentialField& a) {
  if (!a.has_split()) throw std::logic_error("split_residual: potential has no split");
  SplitResidual r;
  for (std::size_t s = 0; s < a.a.sites(); ++s) {
    for (int mu = 0; mu < 3; ++mu) {
      const Vec3 par = a.parallel->vec3(s, mu);
      const Vec3 perp = a.perp->vec3(s, mu);
      r.reconstruction =
          std::max(r.reconstruction, (par + perp - a.a.vec3(s, mu)).cwiseAbs().maxCoeff());
      r.orthogonality = std::max(r.orthogonality, std::abs(par.dot(perp)));
    }
  }
  return r;
}

MapField act(const LiftField& u, const MapField& phi) {
  require_same_grid(u.grid(), phi.grid(), "act");
  MapField out(phi.grid(), phi.target);
  for_each_site(phi.grid(), [&](std::size_t s) {
    const Quaternion g = u.at(s);
    if (phi.target == MapTarget::sphere)
      out.set_point(s, rotate(g, phi.point(s)));
    else
      out.set_element(s, g * phi.element(s));
  });
  return out;
}

LatticeField centered_tangent(const MapField& psi) {
  if (psi.target != MapTarget::sphere)
    throw std::invalid_argument("centered_tangent: sphere-valued map required");
  const Grid& grid = psi.grid();
  LatticeField t(grid, 1, 3);
  const double inv_2h = 0.5 / grid.h();
  for_each_site(grid, [&](std::size_t s) {
    for (int mu = 0; mu < 3; ++mu)
      t.set_vec3(s, mu,
                 inv_2h * (psi.point(grid.shift(s, mu, 1)) - psi.point(grid.shift(s, mu, -1))));
  });
  return t;
}

LatticeField pullback_coisotropy(const MapField& psi) {
  const Grid& grid = psi.grid();
  LatticeField omega(grid, 1, 3);
  const double inv_2h = 0.5 / grid.h();
  if (psi.target == MapTarget::sphere) {
    for_each_site(grid, [&](std::size_t s) {
      const Vec3 p = psi.point(s);
      for (int mu = 0; mu < 3; ++mu) {
        const Vec3 t =
            inv_2h * (psi.point(grid.shift(s, mu, 1)) - psi.point(grid.shift(s, mu, -1)));
        omega.set_vec3(s, mu, 0.5 * p.cross(t));
      }
    });
  } else {
    for_each_site(grid, [&](std::size_t s) {
      const Quaternion here_inv = psi.element(s).conj();
      for (int mu = 0; mu < 3; ++mu) {
        const Vec3 fwd = principal_log(psi.element(grid.shift(s, mu, 1)) * here_inv);
        const Vec3 bwd = principal_log(psi.element(grid.shift(s, mu, -1)) * here_inv);
        omega.set_vec3(s, mu, inv_2h * (fwd - bwd));
      }
    });
  }
  return omega;
}

CosetMapField::CosetMapField(const Grid& grid_, const HomogeneousPair& pair_)
    : grid(grid_),
      pair(&pair_),
      reps(grid_.sites(), GroupMatrix::Identity(pair_.matrix_size(), pair_.matrix_size())) {}

LatticeField pullback_coisotropy(const CosetMapField& psi) {
  const Grid& grid = psi.grid;
  const HomogeneousPair& pair = *psi.pair;
  LatticeField omega(grid, 1, pair.dim_g());
  const double inv_2h = 0.5 / grid.h();
  for_each_site(grid, [&](std::size_t s) {
    const GroupMatrix& g = psi.reps[s];
    const GroupMatrix g_inv = g.adjoint();
    for (int mu = 0; mu < 3; ++mu) {
      const GroupMatrix fwd = (psi.reps[grid.shift(s, mu, 1)] * g_inv).log();
      const GroupMatrix bwd = (psi.reps[grid.shift(s, mu, -1)] * g_inv).log();
      const LieVector xi = inv_2h * (pair.from_matrix(fwd) - pair.from_matrix(bwd));
      const LieVector w = coisotropy_form(pair, g, xi);
      double* dst = omega.at(s, mu);
      for (int c = 0; c < pair.dim_g(); ++c) dst[c] = w[c];
    }
  });
  return omega;
}

LatticeField smooth_random_scalar(const Grid& grid, std::uint64_t seed, double amplitude,
                                  int modes) {
  const FourierSeries series(1, seed, modes);
  LatticeField f(grid, 0, 1);
  for_each_site(grid, [&](std::size_t s) {
    f.at(s)[0] = amplitude * series.eval(0, grid.position(s), grid.length);
  });
  return f;
}

LiftField smooth_random_lift(const Grid& grid, std::uint64_t seed, double amplitude, int modes) {
  const FourierSeries series(3, seed, modes);
  LiftField u(grid);
  for_each_site(grid, [&](std::size_t s) {
    const auto x = grid.position(s);
    const Vec3 xi{series.eval(0, x, grid.length), series.eval(1, x, grid.length),
                  series.eval(2, x, grid.length)};
    u.set(s, Quaternion::exp(amplitude * xi));
  });
  return u;
}

MapField smooth_random_map(const Grid& grid, std::uint64_t seed, double amplitude, int modes) {
  return act(smooth_random_lift(grid, seed, amplitude, modes), MapField::constant(grid));
}

CosetMapField smooth_random_coset(const Grid& grid, const HomogeneousPair& pair, std::uint64_t seed,
                                  double amplitude, int modes) {
  const FourierSeries series(pair.dim_g(), seed, modes);
  CosetMapField psi(grid, pair);
  for_each_site(grid, [&](std::size_t s) {
    const auto x = grid.position(s);
    LieVector xi(pair.dim_g());
    for (int c = 0; c < pair.dim_g(); ++c) xi[c] = amplitude * series.eval(c, x, grid.length);
    psi.reps[s] = pair.exp(xi);
  });
  return psi;
}

}  // namespace hopf
