#include "hopf/topology.hpp"

#include "hopf/coisotropy.hpp"
#include "hopf/parallel.hpp"

#include <cmath>
#include <numbers>

namespace hopf {

const double kChernSimonsSU2 = 1.0 / (24.0 * std::numbers::pi * std::numbers::pi);

namespace {

constexpr int kPerms[6][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {0, 2, 1}, {2, 1, 0}, {1, 0, 2}};
constexpr double kPermSign[6] = {1, 1, 1, -1, -1, -1};

// Fourth-order estimate of u^-1 d_mu u at a site from the links L = exp(h a):
// c1 and c2 are the odd parts of log(u(x)^-1 u(x + t e_mu)) at t = h and 2h.
Vec3 site_potential(const PotentialField& a, std::size_t s, int mu) {
  const Grid& grid = a.grid();
  const double h = grid.h();
  const std::size_t back = grid.shift(s, mu, -1);
  const std::size_t back2 = grid.shift(back, mu, -1);
  const std::size_t fwd = grid.shift(s, mu, 1);
  const Vec3 c1 = 0.5 * (a.a.vec3(s, mu) + a.a.vec3(back, mu));
  const Vec3 c2 = (principal_log(link(a, s, mu) * link(a, fwd, mu)) +
                   principal_log(link(a, back2, mu) * link(a, back, mu))) /
                  (4.0 * h);
  return (4.0 * c1 - c2) / 3.0;
}

}  // namespace

double trace_triple(const Vec3 (&alpha)[3], const Vec3 (&beta)[3], const Vec3 (&gamma)[3]) {
  // For imaginary quaternions x, y, z as 2x2 matrices: tr(xyz) = 2 Re(xyz) = -2 x.(y x z).
  double acc = 0.0;
  for (int p = 0; p < 6; ++p) {
    const auto& s = kPerms[p];
    acc += kPermSign[p] * alpha[s[0]].dot(beta[s[1]].cross(gamma[s[2]]));
  }
  return -2.0 * acc;
}

ChargeReport chern_simons_charge(const PotentialField& a, const MapField* phi) {
  const Grid& grid = a.grid();
  const std::size_t slab = static_cast<std::size_t>(grid.n) * grid.n;
  const std::vector<double> terms = ordered_sum(grid.n, 4, [&](int z, double* acc) {
    for (std::size_t s = slab * z; s < slab * (z + 1); ++s) {
      const Vec3 ref = phi ? phi->point(s) : Vec3::UnitX();
      Vec3 par[3];
      Vec3 perp[3];
      for (int mu = 0; mu < 3; ++mu) {
        const auto split = project_isotropy(ref, site_potential(a, s, mu));
        par[mu] = split.parallel;
        perp[mu] = split.perp;
      }
      acc[0] += trace_triple(par, par, par);
      acc[1] += trace_triple(par, par, perp);
      acc[2] += trace_triple(par, perp, perp);
      acc[3] += trace_triple(perp, perp, perp);
    }
  });

  ChargeReport report;
  const double vol = grid.cell_volume();
  for (int t = 0; t < 4; ++t) report.cs_terms[t] = kChernSimonsSU2 * terms[t] * vol;
  const double q = report.cs_terms[0] + 3.0 * report.cs_terms[1] + 3.0 * report.cs_terms[2] +
                   report.cs_terms[3];
  report.cs = {q};
  report.rounded = {static_cast<int>(std::lround(q))};
  report.deviation = std::abs(q - report.rounded[0]);
  return report;
}

}  // namespace hopf
