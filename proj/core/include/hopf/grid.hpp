#pragma once

#include <array>
#include <cstddef>
#include <numbers>

namespace hopf {

/// Periodic cubic lattice on the flat torus [0, L)^3 with n sites per axis.
struct Grid {
  int n = 16;
  double length = 2.0 * std::numbers::pi;

  Grid() = default;
  /// Throws std::invalid_argument unless n >= 4 and length > 0.
  Grid(int n_, double length_ = 2.0 * std::numbers::pi);

  double h() const { return length / n; }
  double cell_volume() const { const double s = h(); return s * s * s; }
  std::size_t sites() const { return static_cast<std::size_t>(n) * n * n; }

  /// x-fastest site index.
  std::size_t index(int x, int y, int z) const {
    return static_cast<std::size_t>(x) + static_cast<std::size_t>(n) * (y + static_cast<std::size_t>(n) * z);
  }
  std::array<int, 3> coords(std::size_t site) const {
    const int x = static_cast<int>(site % n);
    const int y = static_cast<int>((site / n) % n);
    const int z = static_cast<int>(site / (static_cast<std::size_t>(n) * n));
    return {x, y, z};
  }
  int wrap(int i) const { return ((i % n) + n) % n; }
  /// Neighbour of site along axis by offset (periodic).
  std::size_t shift(std::size_t site, int axis, int offset) const {
    auto c = coords(site);
    c[axis] = wrap(c[axis] + offset);
    return index(c[0], c[1], c[2]);
  }
  /// Physical position of the site (x_mu = i_mu h).
  std::array<double, 3> position(std::size_t site) const {
    const auto c = coords(site);
    return {c[0] * h(), c[1] * h(), c[2] * h()};
  }

  bool operator==(const Grid& o) const { return n == o.n && length == o.length; }
};

/// Throws std::invalid_argument with the given context if the grids differ.
void require_same_grid(const Grid& a, const Grid& b, const char* context);

}  // namespace hopf
