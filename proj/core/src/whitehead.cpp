#include "hopf/topology.hpp"

#include "hopf/parallel.hpp"

#include <fftw3.h>

#include <cmath>
#include <complex>
#include <mutex>
#include <numbers>
#include <stdexcept>

namespace hopf {

const double kWhiteheadSign = 1.0;

namespace {

using cd = std::complex<double>;

// Signed area of the geodesic triangle (a, b, c) on the unit sphere.
double solid_angle(const Vec3& a, const Vec3& b, const Vec3& c) {
  const double num = a.dot(b.cross(c));
  const double den = 1.0 + a.dot(b) + b.dot(c) + c.dot(a);
  return 2.0 * std::atan2(num, den);
}

std::mutex& fftw_planner_mutex() {
  static std::mutex m;
  return m;
}

// In-place 3D complex FFT of an n^3 array stored x-fastest.
void fft3(std::vector<cd>& data, int n, int sign) {
  auto* ptr = reinterpret_cast<fftw_complex*>(data.data());
  fftw_plan plan;
  {
    std::lock_guard lock(fftw_planner_mutex());
    plan = fftw_plan_dft_3d(n, n, n, ptr, ptr, sign, FFTW_ESTIMATE);
  }
  fftw_execute(plan);
  std::lock_guard lock(fftw_planner_mutex());
  fftw_destroy_plan(plan);
}

int signed_mode(int m, int n) { return m <= n / 2 ? m : m - n; }

}  // namespace

LatticeField area_form(const MapField& psi) {
  if (psi.target != MapTarget::sphere)
    throw std::invalid_argument("area_form requires a CP1-valued map");
  const Grid& grid = psi.grid();
  const std::size_t slab = static_cast<std::size_t>(grid.n) * grid.n;

  // Signed area between the image of each link and the geodesic chord, estimated from
  // a cubic midpoint as 4/3 of the triangle (start, mid, end).
  LatticeField lune(grid, 1, 1);
  parallel_for(grid.n, [&](int z) {
    for (std::size_t s = slab * z; s < slab * (z + 1); ++s) {
      for (int mu = 0; mu < 3; ++mu) {
        const std::size_t f1 = grid.shift(s, mu, 1);
        const Vec3 p = psi.point(s);
        const Vec3 q = psi.point(f1);
        const Vec3 mid = (9.0 * (p + q) - psi.point(grid.shift(s, mu, -1)) -
                          psi.point(grid.shift(f1, mu, 1)))
                             .normalized();
        lune.at(s, mu)[0] = 4.0 / 3.0 * solid_angle(p, mid, q);
      }
    }
  });

  LatticeField f(grid, 2, 1);
  const double scale = 1.0 / (4.0 * std::numbers::pi * grid.h() * grid.h());
  constexpr int kPlanes[3][2] = {{0, 1}, {0, 2}, {1, 2}};
  parallel_for(grid.n, [&](int z) {
    for (std::size_t s = slab * z; s < slab * (z + 1); ++s) {
      for (int slot = 0; slot < 3; ++slot) {
        const int mu = kPlanes[slot][0];
        const int nu = kPlanes[slot][1];
        const std::size_t s1 = grid.shift(s, mu, 1);
        const std::size_t s3 = grid.shift(s, nu, 1);
        const std::size_t s2 = grid.shift(s1, nu, 1);
        const Vec3 p0 = psi.point(s);
        const Vec3 p2 = psi.point(s2);
        const double polygon =
            solid_angle(p0, psi.point(s1), p2) + solid_angle(p0, p2, psi.point(s3));
        // Boundary lunes, oriented along x -> x+mu -> x+mu+nu -> x+nu. Adding this
        // circulation keeps F exactly closed.
        const double edges =
            lune.at(s, mu)[0] + lune.at(s1, nu)[0] - lune.at(s3, mu)[0] - lune.at(s, nu)[0];
        f.at(s, slot)[0] = scale * (polygon + edges);
      }
    }
  });
  return f;
}

std::array<double, 3> torus_fluxes(const LatticeField& area) {
  const Grid& grid = area.grid();
  std::array<double, 3> flux{};
  const std::size_t slab = static_cast<std::size_t>(grid.n) * grid.n;
  const std::vector<double> sums = ordered_sum(grid.n, 3, [&](int z, double* acc) {
    for (std::size_t s = slab * z; s < slab * (z + 1); ++s)
      for (int slot = 0; slot < 3; ++slot) acc[slot] += area.at(s, slot)[0];
  });
  // Each of the n parallel tori carries the same flux since dF = 0.
  for (int slot = 0; slot < 3; ++slot) flux[slot] = sums[slot] * grid.h() * grid.h() / grid.n;
  return flux;
}

double whitehead_charge(const MapField& psi) {
  const Grid& grid = psi.grid();
  const LatticeField f = area_form(psi);
  for (double flux : torus_fluxes(f))
    if (std::abs(flux) > 1e-6)
      throw std::runtime_error(
          "field not nullhomotopic on 2-skeleton; Whitehead integral undefined on T3");

  const int n = grid.n;
  const std::size_t total = grid.sites();
  const double h = grid.h();

  std::vector<cd> fh[3];
  for (int slot = 0; slot < 3; ++slot) {
    fh[slot].resize(total);
    for (std::size_t s = 0; s < total; ++s) fh[slot][s] = f.at(s, slot)[0];
    fft3(fh[slot], n, FFTW_FORWARD);
  }

  // FFTW orders dimensions row-major with the last index fastest, so a flat index
  // s = x + n (y + n z) carries modes (mx, my, mz) in the same positions.
  const double two_pi_n = 2.0 * std::numbers::pi / n;
  double helicity = 0.0;
  for (std::size_t s = 0; s < total; ++s) {
    const auto m = grid.coords(s);
    if (m[0] == 0 && m[1] == 0 && m[2] == 0) continue;
    cd back[3];  // symbols of the backward differences
    double sigma2 = 0.0;
    double theta[3];
    double sinc = 1.0;  // plaquette and edge averaging of a smooth field
    for (int mu = 0; mu < 3; ++mu) {
      theta[mu] = two_pi_n * signed_mode(m[mu], n);
      back[mu] = (1.0 - std::exp(cd(0.0, -theta[mu]))) / h;
      const double sn = std::sin(0.5 * theta[mu]);
      sigma2 += 4.0 * sn * sn / (h * h);
      if (theta[mu] != 0.0) sinc *= sn / (0.5 * theta[mu]);
    }
    const cd g01 = fh[0][s] / sigma2;
    const cd g02 = fh[1][s] / sigma2;
    const cd g12 = fh[2][s] / sigma2;
    // A = delta G.
    const cd a[3] = {back[1] * g01 + back[2] * g02, -back[0] * g01 + back[2] * g12,
                     -back[0] * g02 - back[1] * g12};
    // Hodge dual of F: B_0 = F_12, B_1 = -F_02, B_2 = F_01.
    const cd b[3] = {fh[2][s], -fh[1][s], fh[0][s]};
    // A_k is an edge average centred at x + e_k / 2 and B_k a plaquette average centred at
    // x + (e_l + e_m) / 2. Move B onto A and undo both averages (together one sinc factor
    // per axis) so the pairing sees point values.
    double mode = 0.0;
    for (int k = 0; k < 3; ++k) {
      double phase = 0.0;
      for (int mu = 0; mu < 3; ++mu) phase += (mu == k ? -0.5 : 0.5) * theta[mu];
      mode += (std::conj(a[k]) * b[k] * std::exp(cd(0.0, -phase))).real();
    }
    helicity += mode / sinc;
  }
  return kWhiteheadSign * helicity * grid.cell_volume() / static_cast<double>(total);
}

}  // namespace hopf
