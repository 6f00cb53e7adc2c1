#include "hopf/gauge.hpp"

#include "hopf/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace hopf {

namespace {

void require_sphere(const MapField& phi, const char* context) {
  if (phi.target != MapTarget::sphere)
    throw std::invalid_argument(std::string(context) + ": CP1-valued map required");
}

void require_su2_form(const LatticeField& form, const char* context) {
  if (form.dim() != 3) throw std::invalid_argument(std::string(context) + ": su2-valued form required");
}

template <class F>
LatticeField map_slots(const LatticeField& form, F&& fn) {
  LatticeField out(form.grid(), form.degree(), 3);
  for_each_site(form.grid(), [&](std::size_t s) {
    for (int slot = 0; slot < form.slots(); ++slot) out.set_vec3(s, slot, fn(s, form.vec3(s, slot)));
  });
  return out;
}

LatticeField centered_scalar_gradient(const LatticeField& f) {
  const Grid& grid = f.grid();
  LatticeField out(grid, 1, 1);
  const double inv_2h = 0.5 / grid.h();
  for_each_site(grid, [&](std::size_t s) {
    for (int mu = 0; mu < 3; ++mu)
      *out.at(s, mu) = inv_2h * (*f.at(grid.shift(s, mu, 1)) - *f.at(grid.shift(s, mu, -1)));
  });
  return out;
}

BilinearProduct matrix_vector() {
  BilinearProduct p;
  p.name = "matrix_vector";
  p.left_dim = 9;
  p.right_dim = 3;
  p.out_dim = 3;
  p.apply = [](const double* m, const double* v, double* out) {
    for (int r = 0; r < 3; ++r) out[r] = m[3 * r] * v[0] + m[3 * r + 1] * v[1] + m[3 * r + 2] * v[2];
  };
  return p;
}

}  // namespace

StabilizerField make_stabilizer(const MapField& phi, const LatticeField& theta) {
  require_sphere(phi, "make_stabilizer");
  require_same_grid(phi.grid(), theta.grid(), "make_stabilizer");
  if (theta.degree() != 0 || theta.dim() != 1)
    throw std::invalid_argument("make_stabilizer: theta must be a scalar 0-form");
  StabilizerField out{LiftField(phi.grid()), phi, theta};
  for_each_site(phi.grid(), [&](std::size_t s) {
    const double t = *theta.at(s);
    const Vec3 p = phi.point(s);
    out.w.set(s, {std::cos(t), std::sin(t) * p.x(), std::sin(t) * p.y(), std::sin(t) * p.z()});
  });
  return out;
}

LatticeField maurer_cartan(const StabilizerField& w, MaurerCartanRule rule) {
  if (rule == MaurerCartanRule::principal_log) return pure_gauge_potential(w.w).a;
  const LatticeField dtheta = centered_scalar_gradient(w.theta);
  const LatticeField dphi = centered_tangent(w.phi);
  LatticeField mu(w.phi.grid(), 1, 3);
  for_each_site(w.phi.grid(), [&](std::size_t s) {
    const Vec3 p = w.phi.point(s);
    const double st = std::sin(*w.theta.at(s));
    const Quaternion wbar = w.w.at(s).conj();
    for (int m = 0; m < 3; ++m) {
      const Vec3 raw = dphi.vec3(s, m);
      const Vec3 t = raw - raw.dot(p) * p;
      mu.set_vec3(s, m, *dtheta.at(s, m) * p + st * (wbar * Quaternion::pure(t)).vec());
    }
  });
  return mu;
}

LatticeField adjoint_inverse(const LiftField& w, const LatticeField& form) {
  require_su2_form(form, "adjoint_inverse");
  require_same_grid(w.grid(), form.grid(), "adjoint_inverse");
  return map_slots(form, [&](std::size_t s, const Vec3& v) { return rotate(w.at(s).conj(), v); });
}

LatticeField parallel_part(const LatticeField& form, const MapField& phi) {
  require_su2_form(form, "parallel_part");
  require_sphere(phi, "parallel_part");
  return map_slots(form, [&](std::size_t s, const Vec3& v) {
    const Vec3 p = phi.point(s);
    return Vec3(v.dot(p) * p);
  });
}

LatticeField perp_part(const LatticeField& form, const MapField& phi) {
  require_su2_form(form, "perp_part");
  require_sphere(phi, "perp_part");
  return map_slots(form, [&](std::size_t s, const Vec3& v) {
    const Vec3 p = phi.point(s);
    return Vec3(v - v.dot(p) * p);
  });
}

double isotropy_residual(const LatticeField& form, const MapField& phi) {
  return perp_part(form, phi).max_abs();
}

LatticeField self_wedge(const LatticeField& alpha) {
  require_su2_form(alpha, "self_wedge");
  const LatticeField full = wedge(alpha, alpha, BilinearProduct::quaternion(3, 3));
  LatticeField out(alpha.grid(), full.degree(), 3);
  for_each_site(alpha.grid(), [&](std::size_t s) {
    for (int slot = 0; slot < full.slots(); ++slot) {
      const double* q = full.at(s, slot);
      out.set_vec3(s, slot, {q[1], q[2], q[3]});
    }
  });
  return out;
}

LatticeField bracket_wedge(const LatticeField& alpha, const LatticeField& beta) {
  return wedge(alpha, beta, BilinearProduct::su2_bracket());
}

LatticeField projector_derivative(const MapField& phi) {
  require_sphere(phi, "projector_derivative");
  const LatticeField t = centered_tangent(phi);
  LatticeField out(phi.grid(), 1, 9);
  for_each_site(phi.grid(), [&](std::size_t s) {
    const Vec3 p = phi.point(s);
    for (int mu = 0; mu < 3; ++mu) {
      const Vec3 dp = t.vec3(s, mu);
      const Eigen::Matrix3d m = p * dp.transpose() + dp * p.transpose();
      double* o = out.at(s, mu);
      for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) o[3 * r + c] = m(r, c);
    }
  });
  return out;
}

LatticeField projector_wedge(const LatticeField& dphi, const LatticeField& beta) {
  if (dphi.degree() != 1 || dphi.dim() != 9)
    throw std::invalid_argument("projector_wedge: dPhi must be a matrix-valued 1-form");
  require_su2_form(beta, "projector_wedge");
  return wedge(dphi, beta, matrix_vector());
}

PotentialField gauge_transform(const PotentialField& a, const StabilizerField& w,
                               MaurerCartanRule rule) {
  require_su2_form(a.a, "gauge_transform");
  LatticeField out = adjoint_inverse(w.w, a.a);
  out += maurer_cartan(w, rule);
  return PotentialField(std::move(out));
}

PotentialField gauge_transform_potential(const PotentialField& b, const StabilizerField& w,
                                         const MapField& phi, MaurerCartanRule rule) {
  require_su2_form(b.a, "gauge_transform_potential");
  require_sphere(phi, "gauge_transform_potential");
  if (isotropy_residual(b.a, phi) > 1e-10 * std::max(1.0, b.a.max_abs()))
    throw std::invalid_argument("gauge_transform_potential: potential is not isotropic");
  const LatticeField omega = pullback_coisotropy(phi);
  LatticeField out = adjoint_inverse(w.w, b.a);
  out += maurer_cartan(w, rule);
  out -= adjoint_inverse(w.w, omega);
  out += omega;
  return PotentialField(std::move(out));
}

LatticeField coset_curvature(const LatticeField& b, const LatticeField& db, const LatticeField& omega,
                             const MapField& phi) {
  LatticeField f = db;
  f += self_wedge(b);
  f -= bracket_wedge(b, omega);
  f -= parallel_part(self_wedge(omega), phi);
  return f;
}

LatticeField coset_curvature(const PotentialField& b, const MapField& phi) {
  require_su2_form(b.a, "coset_curvature");
  require_sphere(phi, "coset_curvature");
  return coset_curvature(b.a, d(b.a), pullback_coisotropy(phi), phi);
}

GaugeSmoothResult gauge_smooth(const PotentialField& b, const MapField& phi, int iterations,
                               double step) {
  const Grid& grid = phi.grid();
  if (iterations < 0 || !(step > 0.0))
    throw std::invalid_argument("gauge_smooth: iterations must be >= 0 and step > 0");

  auto evaluate = [&](const LatticeField& theta, LatticeField* grad) {
    const StabilizerField w = make_stabilizer(phi, theta);
    const LatticeField bw = gauge_transform_potential(b, w, phi).a;
    const double value = l2_norm(bw) * l2_norm(bw);
    if (grad) {
      // b^w . phi = b . phi + D theta, so dJ/dtheta(y) = 2 h^3 sum_mu (c_mu(y-e) - c_mu(y+e)) / (2h).
      const double scale = grid.cell_volume() / grid.h();
      for_each_site(grid, [&](std::size_t s) {
        double acc = 0.0;
        for (int mu = 0; mu < 3; ++mu) {
          const std::size_t lo = grid.shift(s, mu, -1);
          const std::size_t hi = grid.shift(s, mu, 1);
          acc += bw.vec3(lo, mu).dot(phi.point(lo)) - bw.vec3(hi, mu).dot(phi.point(hi));
        }
        *grad->at(s) = scale * acc;
      });
    }
    return value;
  };

  LatticeField theta(grid, 0, 1);
  LatticeField grad(grid, 0, 1);
  double value = evaluate(theta, &grad);
  GaugeSmoothResult result{make_stabilizer(phi, theta), {value}};
  double alpha = step;
  for (int it = 0; it < iterations; ++it) {
    const double gnorm = l2_norm(grad);
    if (gnorm == 0.0) break;
    LatticeField trial;
    LatticeField trial_grad(grid, 0, 1);
    double trial_value = value;
    bool accepted = false;
    for (int attempt = 0; attempt < 40; ++attempt) {
      trial = theta;
      trial -= alpha * grad;
      trial_value = evaluate(trial, &trial_grad);
      if (trial_value < value) {
        accepted = true;
        break;
      }
      alpha *= 0.5;
    }
    if (!accepted) break;
    const LatticeField s_k = trial - theta;
    const LatticeField y_k = trial_grad - grad;
    const double sy = l2_inner(s_k, y_k);
    if (sy > 0.0) alpha = l2_inner(s_k, s_k) / sy;
    theta = std::move(trial);
    grad = std::move(trial_grad);
    value = trial_value;
    result.objective.push_back(value);
  }
  result.w = make_stabilizer(phi, theta);
  return result;
}

}  // namespace hopf
