#include "hopf/form.hpp"

#include "hopf/lie.hpp"
#include "hopf/parallel.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace hopf {

namespace {

const std::vector<std::vector<std::vector<int>>>& slot_tables() {
  static const std::vector<std::vector<std::vector<int>>> tables = {
      {{}},
      {{0}, {1}, {2}},
      {{0, 1}, {0, 2}, {1, 2}},
      {{0, 1, 2}},
  };
  return tables;
}

void require_degree(int degree) {
  if (degree < 0 || degree > 3)
    throw std::invalid_argument("form degree must be in [0, 3], got " + std::to_string(degree));
}

void require_same_shape(const LatticeField& a, const LatticeField& b, const char* context) {
  if (!a.same_shape(b)) throw std::invalid_argument(std::string(context) + ": shape mismatch");
}

// Runs body(site) over all sites, parallel across z-slabs.
}  // namespace

int slot_count(int degree) {
  require_degree(degree);
  return static_cast<int>(slot_tables()[degree].size());
}

const std::vector<int>& slot_axes(int degree, int slot) {
  require_degree(degree);
  return slot_tables()[degree].at(slot);
}

int slot_of(int degree, const std::vector<int>& axes) {
  require_degree(degree);
  const auto& table = slot_tables()[degree];
  for (int s = 0; s < static_cast<int>(table.size()); ++s)
    if (table[s] == axes) return s;
  return -1;
}

LatticeField::LatticeField(const Grid& grid, int degree, int dim)
    : grid_(grid), degree_(degree), dim_(dim), slots_(slot_count(degree)) {
  if (dim < 1) throw std::invalid_argument("field value dimension must be positive");
  data_.assign(grid_.sites() * slots_ * dim_, 0.0);
}

bool LatticeField::finite() const {
  for (double v : data_)
    if (!std::isfinite(v)) return false;
  return true;
}

double LatticeField::max_abs() const {
  double m = 0.0;
  for (double v : data_) m = std::max(m, std::abs(v));
  return m;
}

bool LatticeField::same_shape(const LatticeField& o) const {
  return grid_ == o.grid_ && degree_ == o.degree_ && dim_ == o.dim_;
}

LatticeField& LatticeField::operator+=(const LatticeField& o) {
  require_same_shape(*this, o, "LatticeField +=");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
  return *this;
}

LatticeField& LatticeField::operator-=(const LatticeField& o) {
  require_same_shape(*this, o, "LatticeField -=");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
  return *this;
}

LatticeField& LatticeField::operator*=(double s) {
  for (double& v : data_) v *= s;
  return *this;
}

LatticeField operator+(LatticeField a, const LatticeField& b) { return a += b; }
LatticeField operator-(LatticeField a, const LatticeField& b) { return a -= b; }
LatticeField operator*(double s, LatticeField a) { return a *= s; }

double max_abs_diff(const LatticeField& a, const LatticeField& b) {
  require_same_shape(a, b, "max_abs_diff");
  double m = 0.0;
  for (std::size_t i = 0; i < a.data().size(); ++i)
    m = std::max(m, std::abs(a.data()[i] - b.data()[i]));
  return m;
}

BilinearProduct BilinearProduct::quaternion(int left_dim, int right_dim) {
  if ((left_dim != 3 && left_dim != 4) || (right_dim != 3 && right_dim != 4))
    throw std::invalid_argument("quaternion product needs operands of dimension 3 or 4");
  auto load = [](const double* p, int dim) {
    return dim == 4 ? Quaternion{p[0], p[1], p[2], p[3]} : Quaternion{0.0, p[0], p[1], p[2]};
  };
  return {"quaternion", left_dim, right_dim, 4,
          [=](const double* a, const double* b, double* out) {
            const Quaternion q = load(a, left_dim) * load(b, right_dim);
            out[0] = q.w;
            out[1] = q.x;
            out[2] = q.y;
            out[3] = q.z;
          }};
}

BilinearProduct BilinearProduct::su2_bracket() {
  return {"su2_bracket", 3, 3, 3, [](const double* a, const double* b, double* out) {
            out[0] = 2.0 * (a[1] * b[2] - a[2] * b[1]);
            out[1] = 2.0 * (a[2] * b[0] - a[0] * b[2]);
            out[2] = 2.0 * (a[0] * b[1] - a[1] * b[0]);
          }};
}

BilinearProduct BilinearProduct::cross() {
  return {"cross", 3, 3, 3, [](const double* a, const double* b, double* out) {
            out[0] = a[1] * b[2] - a[2] * b[1];
            out[1] = a[2] * b[0] - a[0] * b[2];
            out[2] = a[0] * b[1] - a[1] * b[0];
          }};
}

BilinearProduct BilinearProduct::lie_bracket(const HomogeneousPair& pair) {
  const int n = pair.dim_g();
  std::vector<double> c(static_cast<std::size_t>(n) * n * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int k = 0; k < n; ++k) c[(a * n + b) * n + k] = pair.structure_constant(a, b, k);
  return {"lie_bracket", n, n, n, [n, c = std::move(c)](const double* x, const double* y, double* out) {
            for (int k = 0; k < n; ++k) out[k] = 0.0;
            for (int a = 0; a < n; ++a) {
              if (x[a] == 0.0) continue;
              for (int b = 0; b < n; ++b) {
                const double xy = x[a] * y[b];
                if (xy == 0.0) continue;
                const double* row = c.data() + (a * n + b) * n;
                for (int k = 0; k < n; ++k) out[k] += xy * row[k];
              }
            }
          }};
}

BilinearProduct BilinearProduct::matrix(const HomogeneousPair& pair) {
  const int n = pair.dim_g();
  const int m = pair.matrix_size();
  const std::vector<Eigen::MatrixXcd> basis = pair.basis();
  return {"matrix", n, n, 2 * m * m, [=](const double* x, const double* y, double* out) {
            Eigen::MatrixXcd X = Eigen::MatrixXcd::Zero(m, m);
            Eigen::MatrixXcd Y = Eigen::MatrixXcd::Zero(m, m);
            for (int a = 0; a < n; ++a) {
              X += x[a] * basis[a];
              Y += y[a] * basis[a];
            }
            const Eigen::MatrixXcd P = X * Y;
            for (int r = 0; r < m; ++r)
              for (int s = 0; s < m; ++s) {
                out[2 * (r * m + s)] = P(r, s).real();
                out[2 * (r * m + s) + 1] = P(r, s).imag();
              }
          }};
}

BilinearProduct BilinearProduct::scalar_left(int dim) {
  return {"scalar_left", 1, dim, dim, [dim](const double* s, const double* v, double* out) {
            for (int c = 0; c < dim; ++c) out[c] = s[0] * v[c];
          }};
}

BilinearProduct BilinearProduct::scalar_right(int dim) {
  return {"scalar_right", dim, 1, dim, [dim](const double* v, const double* s, double* out) {
            for (int c = 0; c < dim; ++c) out[c] = v[c] * s[0];
          }};
}

BilinearProduct BilinearProduct::dot(int dim) {
  return {"dot", dim, dim, 1, [dim](const double* a, const double* b, double* out) {
            double acc = 0.0;
            for (int c = 0; c < dim; ++c) acc += a[c] * b[c];
            out[0] = acc;
          }};
}

LatticeField d(const LatticeField& form) {
  const int k = form.degree();
  if (k >= 3) throw std::invalid_argument("exterior derivative of a 3-form is not defined");
  const Grid& grid = form.grid();
  const int dim = form.dim();
  const double inv_h = 1.0 / grid.h();
  LatticeField out(grid, k + 1, dim);

  struct Term {
    int out_slot, in_slot, axis;
    double sign;
  };
  std::vector<Term> terms;
  for (int s = 0; s < out.slots(); ++s) {
    const auto& axes = slot_axes(k + 1, s);
    for (int p = 0; p <= k; ++p) {
      std::vector<int> rest;
      for (int q = 0; q <= k; ++q)
        if (q != p) rest.push_back(axes[q]);
      terms.push_back({s, slot_of(k, rest), axes[p], p % 2 == 0 ? 1.0 : -1.0});
    }
  }

  for_each_site(grid, [&](std::size_t site) {
    for (const Term& t : terms) {
      const double* here = form.at(site, t.in_slot);
      const double* next = form.at(grid.shift(site, t.axis, 1), t.in_slot);
      double* dst = out.at(site, t.out_slot);
      for (int c = 0; c < dim; ++c) dst[c] += t.sign * ((next[c] - here[c]) * inv_h);
    }
  });
  return out;
}

LatticeField wedge(const LatticeField& a, const LatticeField& b, const BilinearProduct& product) {
  require_same_grid(a.grid(), b.grid(), "wedge");
  const int ka = a.degree();
  const int kb = b.degree();
  if (ka + kb > 3) throw std::invalid_argument("wedge: total degree exceeds 3");
  if (a.dim() != product.left_dim || b.dim() != product.right_dim)
    throw std::invalid_argument("wedge: value dimensions incompatible with product '" +
                                product.name + "'");

  LatticeField out(a.grid(), ka + kb, product.out_dim);
  struct Term {
    int out_slot, a_slot, b_slot;
    double sign;
  };
  std::vector<Term> terms;
  for (int s = 0; s < out.slots(); ++s) {
    const auto& axes = slot_axes(ka + kb, s);
    const int total = ka + kb;
    for (int mask = 0; mask < (1 << total); ++mask) {
      if (__builtin_popcount(static_cast<unsigned>(mask)) != ka) continue;
      std::vector<int> left;
      std::vector<int> right;
      for (int p = 0; p < total; ++p) (mask >> p & 1 ? left : right).push_back(axes[p]);
      int inversions = 0;
      for (int x : left)
        for (int y : right)
          if (y < x) ++inversions;
      terms.push_back({s, slot_of(ka, left), slot_of(kb, right), inversions % 2 == 0 ? 1.0 : -1.0});
    }
  }

  const int od = product.out_dim;
  for_each_site(a.grid(), [&](std::size_t site) {
    std::vector<double> tmp(od);
    for (const Term& t : terms) {
      product.apply(a.at(site, t.a_slot), b.at(site, t.b_slot), tmp.data());
      double* dst = out.at(site, t.out_slot);
      for (int c = 0; c < od; ++c) dst[c] += t.sign * tmp[c];
    }
  });
  return out;
}

double l2_inner(const LatticeField& a, const LatticeField& b) {
  require_same_shape(a, b, "l2_inner");
  const Grid& grid = a.grid();
  const std::size_t slab = grid.sites() / grid.n * a.slots() * a.dim();
  const double sum = ordered_sum(grid.n, [&](int z) {
    const double* pa = a.data().data() + slab * z;
    const double* pb = b.data().data() + slab * z;
    double acc = 0.0;
    for (std::size_t i = 0; i < slab; ++i) acc += pa[i] * pb[i];
    return acc;
  });
  return sum * grid.cell_volume();
}

double l2_norm(const LatticeField& a) { return std::sqrt(l2_inner(a, a)); }

std::vector<double> integrate_3form(const LatticeField& form) {
  if (form.degree() != 3) throw std::invalid_argument("integrate_3form: degree must be 3");
  const Grid& grid = form.grid();
  const int dim = form.dim();
  const std::size_t slab_sites = grid.sites() / grid.n;
  std::vector<double> total = ordered_sum(grid.n, dim, [&](int z, double* acc) {
    for (std::size_t s = slab_sites * z; s < slab_sites * (z + 1); ++s) {
      const double* p = form.at(s);
      for (int c = 0; c < dim; ++c) acc[c] += p[c];
    }
  });
  for (double& t : total) t *= grid.cell_volume();
  return total;
}

double integrate_density(const LatticeField& density) {
  if (density.degree() != 0 || density.dim() != 1)
    throw std::invalid_argument("integrate_density: expects a scalar 0-form");
  const Grid& grid = density.grid();
  const std::size_t slab = grid.sites() / grid.n;
  const double sum = ordered_sum(grid.n, [&](int z) {
    double acc = 0.0;
    for (std::size_t s = slab * z; s < slab * (z + 1); ++s) acc += density.data()[s];
    return acc;
  });
  return sum * grid.cell_volume();
}

}  // namespace hopf
