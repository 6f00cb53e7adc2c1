#include "hopf/topology.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <stdexcept>
#include <vector>

namespace hopf {

namespace {

using FaceKey = std::array<std::size_t, 3>;

struct DegenerateCell : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Segment {
  FaceKey from;
  FaceKey to;
  Vec3 start;         // absolute lattice coordinates of the entry point
  Vec3 displacement;  // exit minus entry
};

struct Polyline {
  std::vector<Vec3> points;  // closed: last point connects back to the first
};

// Kuhn subdivision of the unit cube: one tetrahedron per axis permutation, following
// the monotone path 0 -> e_a -> e_a + e_b -> (1, 1, 1). Corners are bitmasks.
const std::array<std::array<int, 4>, 6>& kuhn_tets() {
  static const std::array<std::array<int, 4>, 6> tets = [] {
    std::array<std::array<int, 4>, 6> out{};
    std::array<int, 3> perm{0, 1, 2};
    int t = 0;
    do {
      const int c1 = 1 << perm[0];
      const int c2 = c1 | (1 << perm[1]);
      out[t++] = {0, c1, c2, 7};
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
  }();
  return tets;
}

Vec3 corner_offset(int mask) { return {double(mask & 1), double(mask >> 1 & 1), double(mask >> 2 & 1)}; }

struct Level {
  Vec3 e1, e2, p;
};

Level level_frame(const Vec3& p_raw) {
  const Vec3 p = p_raw.normalized();
  const Vec3 helper = std::abs(p.x()) < 0.9 ? Vec3::UnitX() : Vec3::UnitY();
  const Vec3 e1 = (helper - helper.dot(p) * p).normalized();
  return {e1, p.cross(e1), p};
}

std::vector<Segment> preimage_segments(const MapField& psi, const Level& lv) {
  const Grid& grid = psi.grid();
  const std::size_t sites = grid.sites();
  std::vector<Eigen::Vector2d> f(sites);
  std::vector<double> height(sites);
  for (std::size_t s = 0; s < sites; ++s) {
    const Vec3 v = psi.point(s);
    f[s] = {v.dot(lv.e1), v.dot(lv.e2)};
    height[s] = v.dot(lv.p);
  }

  auto cross2 = [](const Eigen::Vector2d& a, const Eigen::Vector2d& b) {
    return a.x() * b.y() - a.y() * b.x();
  };

  std::vector<Segment> segments;
  for (std::size_t base = 0; base < sites; ++base) {
    const auto origin = grid.coords(base);
    std::array<std::size_t, 8> corner_site{};
    for (int m = 0; m < 8; ++m) {
      std::size_t s = base;
      for (int mu = 0; mu < 3; ++mu)
        if (m >> mu & 1) s = grid.shift(s, mu, 1);
      corner_site[m] = s;
    }
    // Quick reject: all corners far from the preimage.
    bool near = false;
    for (int m = 0; m < 8 && !near; ++m) near = height[corner_site[m]] > 0.0;
    if (!near) continue;

    for (const auto& tet : kuhn_tets()) {
      struct Crossing {
        FaceKey key;
        Vec3 local;
      };
      std::vector<Crossing> crossings;
      for (int skip = 0; skip < 4; ++skip) {
        std::array<int, 3> face{};
        int k = 0;
        for (int v = 0; v < 4; ++v)
          if (v != skip) face[k++] = tet[v];
        // Canonical vertex order so both tetrahedra sharing the face agree bitwise.
        std::sort(face.begin(), face.end(),
                  [&](int a, int b) { return corner_site[a] < corner_site[b]; });
        const Eigen::Vector2d& fa = f[corner_site[face[0]]];
        const Eigen::Vector2d& fb = f[corner_site[face[1]]];
        const Eigen::Vector2d& fc = f[corner_site[face[2]]];
        const double la = cross2(fb, fc);
        const double lb = cross2(fc, fa);
        const double lc = cross2(fa, fb);
        const bool pos = la > 0.0 && lb > 0.0 && lc > 0.0;
        const bool neg = la < 0.0 && lb < 0.0 && lc < 0.0;
        if (!pos && !neg) {
          // The origin lies on the closed face only if it sits on an edge segment.
          const double lam[3] = {la, lb, lc};
          const Eigen::Vector2d* fv[3] = {&fa, &fb, &fc};
          for (int v = 0; v < 3; ++v)
            if (lam[v] == 0.0 && fv[(v + 1) % 3]->dot(*fv[(v + 2) % 3]) <= 0.0)
              throw DegenerateCell("preimage passes through a cell edge");
          continue;
        }
        const double sum = la + lb + lc;
        const double w[3] = {la / sum, lb / sum, lc / sum};
        double h = 0.0;
        Vec3 local = Vec3::Zero();
        for (int v = 0; v < 3; ++v) {
          h += w[v] * height[corner_site[face[v]]];
          local += w[v] * corner_offset(face[v]);
        }
        if (h <= 0.0) continue;  // preimage of the antipode
        crossings.push_back({{corner_site[face[0]], corner_site[face[1]], corner_site[face[2]]}, local});
      }
      if (crossings.empty()) continue;
      if (crossings.size() != 2) throw DegenerateCell("tetrahedron with an odd preimage crossing");

      // Orientation: d f1 x d f2 on the tetrahedron.
      Eigen::Matrix3d edges;
      Eigen::Vector3d d1;
      Eigen::Vector3d d2;
      const std::size_t s0 = corner_site[tet[0]];
      for (int v = 1; v < 4; ++v) {
        edges.row(v - 1) = (corner_offset(tet[v]) - corner_offset(tet[0])).transpose();
        d1[v - 1] = f[corner_site[tet[v]]].x() - f[s0].x();
        d2[v - 1] = f[corner_site[tet[v]]].y() - f[s0].y();
      }
      const Eigen::Matrix3d inv = edges.inverse();
      const Vec3 tangent = (inv * d1).cross(inv * d2);
      const Vec3 step = crossings[1].local - crossings[0].local;
      const double orient = step.dot(tangent);
      if (orient == 0.0) throw DegenerateCell("preimage tangent degenerate");
      const Crossing& in = orient > 0.0 ? crossings[0] : crossings[1];
      const Crossing& out = orient > 0.0 ? crossings[1] : crossings[0];
      const Vec3 origin_v{double(origin[0]), double(origin[1]), double(origin[2])};
      segments.push_back({in.key, out.key, origin_v + in.local, out.local - in.local});
    }
  }
  return segments;
}

std::vector<Polyline> chain(const std::vector<Segment>& segments) {
  std::map<FaceKey, std::size_t> by_entry;
  for (std::size_t i = 0; i < segments.size(); ++i) {
    if (!by_entry.emplace(segments[i].from, i).second)
      throw DegenerateCell("preimage face entered twice");
  }
  std::vector<bool> used(segments.size(), false);
  std::vector<Polyline> loops;
  for (std::size_t first = 0; first < segments.size(); ++first) {
    if (used[first]) continue;
    Polyline loop;
    Vec3 pos = segments[first].start;
    std::size_t cur = first;
    while (!used[cur]) {
      used[cur] = true;
      loop.points.push_back(pos);
      pos += segments[cur].displacement;
      const auto next = by_entry.find(segments[cur].to);
      if (next == by_entry.end()) throw DegenerateCell("open preimage curve");
      cur = next->second;
    }
    if (cur != first) throw DegenerateCell("preimage curves merge");
    if ((pos - loop.points.front()).norm() > 1e-6)
      throw std::runtime_error("preimage curve winds around the torus; linking number undefined");
    loops.push_back(std::move(loop));
  }
  return loops;
}

std::vector<Polyline> preimage(const MapField& psi, const Vec3& value) {
  auto loops = chain(preimage_segments(psi, level_frame(value)));
  if (loops.empty())
    throw std::runtime_error("no preimage of the regular value; choose a different value");
  return loops;
}

// Signed crossing count of a over b in the projection along d (d points to the viewer).
int crossing_linking(const std::vector<Polyline>& a, const std::vector<Polyline>& b, const Vec3& d) {
  const Vec3 u = (std::abs(d.x()) < 0.9 ? Vec3::UnitX() : Vec3::UnitY()).cross(d).normalized();
  const Vec3 v = d.cross(u);
  int total = 0;
  for (const auto& la : a) {
    const std::size_t na = la.points.size();
    for (std::size_t i = 0; i < na; ++i) {
      const Vec3& p0 = la.points[i];
      const Vec3& p1 = la.points[(i + 1) % na];
      const Eigen::Vector2d a0{p0.dot(u), p0.dot(v)};
      const Eigen::Vector2d a1{p1.dot(u), p1.dot(v)};
      for (const auto& lb : b) {
        const std::size_t nb = lb.points.size();
        for (std::size_t j = 0; j < nb; ++j) {
          const Vec3& q0 = lb.points[j];
          const Vec3& q1 = lb.points[(j + 1) % nb];
          const Eigen::Vector2d b0{q0.dot(u), q0.dot(v)};
          const Eigen::Vector2d b1{q1.dot(u), q1.dot(v)};
          const Eigen::Vector2d ra = a1 - a0;
          const Eigen::Vector2d rb = b1 - b0;
          const double den = ra.x() * rb.y() - ra.y() * rb.x();
          if (den == 0.0) continue;
          const Eigen::Vector2d w = b0 - a0;
          const double t = (w.x() * rb.y() - w.y() * rb.x()) / den;
          const double s = (w.x() * ra.y() - w.y() * ra.x()) / den;
          if (t < 0.0 || t >= 1.0 || s < 0.0 || s >= 1.0) continue;
          const double ha = (p0 + t * (p1 - p0)).dot(d);
          const double hb = (q0 + s * (q1 - q0)).dot(d);
          if (ha <= hb) continue;
          total += (p1 - p0).cross(q1 - q0).dot(d) > 0.0 ? 1 : -1;
        }
      }
    }
  }
  return total;
}

}  // namespace

int linking_charge(const MapField& psi, const Vec3& p, const Vec3& q) {
  if (psi.target != MapTarget::sphere)
    throw std::invalid_argument("linking_charge requires a CP1-valued map");
  const Vec3 view = Vec3{0.1234, 0.3571, 0.9213}.normalized();
  const Vec3 nudge = Vec3{0.3, -0.5, 0.7}.normalized();
  constexpr int kAttempts = 4;
  for (int attempt = 0; attempt < kAttempts; ++attempt) {
    const double eps = 1e-7 * attempt;
    try {
      const auto a = preimage(psi, p + eps * nudge);
      const auto b = preimage(psi, q + eps * nudge);
      return crossing_linking(a, b, view);
    } catch (const DegenerateCell&) {
      continue;
    }
  }
  throw std::runtime_error("degenerate preimage; choose a different regular value");
}

}  // namespace hopf
