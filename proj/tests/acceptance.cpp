// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include "hopf/ansatz.hpp"
#include "hopf/coisotropy.hpp"
#include "hopf/energy.hpp"
#include "hopf/fields.hpp"
#include "hopf/form.hpp"
#include "hopf/gauge.hpp"
#include "hopf/lie.hpp"
#include "hopf/minimize.hpp"
#include "hopf/topology.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace hopf;

namespace {

struct Outcome {
  bool passed = false;
  std::string detail;
};

struct Criterion {
  int id;
  const char* name;
  double budget_seconds;
  std::function<Outcome()> run;
};

std::string format(const char* fmt, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, fmt, args...);
  return buf;
}

Quaternion random_unit(std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  return Quaternion{g(rng), g(rng), g(rng), g(rng)}.normalized();
}

LatticeField random_form(const Grid& grid, int degree, int dim, std::uint64_t seed) {
  LatticeField out(grid, degree, dim);
  for (int slot = 0; slot < out.slots(); ++slot)
    for (int c = 0; c < dim; ++c) {
      const LatticeField s = smooth_random_scalar(grid, seed + 13 * slot + c, 1.0);
      for (std::size_t site = 0; site < grid.sites(); ++site) out.at(site, slot)[c] = s.at(site)[0];
    }
  return out;
}

// 1. |omega_perp(S)| = |S| on CP1, by the closed form and by the generic projector path.
Outcome coisotropy_isometry() {
  const HomogeneousPair pair = HomogeneousPair::su2_u1();
  std::mt19937_64 rng(1);
  std::normal_distribution<double> gauss;
  double worst_cp1 = 0.0, worst_generic = 0.0;
  for (int t = 0; t < 10000; ++t) {
    const Quaternion g = random_unit(rng);
    const Vec3 q = rotate(g, Vec3::UnitX());
    const Vec3 xi(gauss(rng), gauss(rng), gauss(rng));
    const Vec3 eta = xi - xi.dot(q) * q;  // tangent at q
    worst_cp1 = std::max(worst_cp1, std::abs(coisotropy_form(q, eta).norm() - cp1_tangent_norm(eta)));
    const LieVector w = coisotropy_form(pair, su2_matrix(g), LieVector(xi));
    const Vec3 s = cp1_infinitesimal_action(xi, q);  // the tangent vector xi.x
    worst_generic = std::max(worst_generic, std::abs(w.norm() - cp1_tangent_norm(s)));
  }
  const double worst = std::max(worst_cp1, worst_generic);
  return {worst <= 1e-12, format("max deviation cp1 %.2e, generic %.2e (10000 samples each)", worst_cp1,
                                 worst_generic)};
}

// 2. d o d = 0, flat plaquettes, isotropy split.
Outcome discrete_identities() {
  const Grid grid(32);
  LatticeField f0 = random_form(grid, 0, 3, 10);
  LatticeField f1 = random_form(grid, 1, 3, 20);
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> uni(-1.0, 1.0);
  for (double& v : f0.data()) v += 0.1 * uni(rng);  // not smooth either
  for (double& v : f1.data()) v += 0.1 * uni(rng);
  const double dd0 = d(d(f0)).max_abs();
  const double dd1 = d(d(f1)).max_abs();
  const PotentialField flat = pure_gauge_potential(smooth_random_lift(grid, 30, 0.8, 1));
  const double plaquette = plaquette_defect(flat);
  PotentialField a(random_form(grid, 1, 3, 40));
  split_potential(a, smooth_random_map(grid, 50, 1.0));
  const SplitResidual split = split_residual(a);
  const double worst = std::max({dd0, dd1, plaquette, split.reconstruction, split.orthogonality});
  return {worst <= 1e-12, format("dd0 %.1e, dd1 %.1e, plaquette %.1e, reconstruction %.1e, orthogonality %.1e", dd0,
                                 dd1, plaquette, split.reconstruction, split.orthogonality)};
}

// 3. |D_phi(a^w)|^2 = |D_phi a|^2 pointwise and in total.
Outcome gauge_invariance() {
  const Grid grid(32);
  const MapField phi = smooth_random_map(grid, 60, 1.0);
  const StabilizerField w = make_stabilizer(phi, smooth_random_scalar(grid, 61, 1.5));
  const PotentialField a(random_form(grid, 1, 3, 62));
  const PotentialField aw = gauge_transform(a, w);
  const LatticeField da = covariant_potential(a, phi);
  const LatticeField daw = covariant_potential(aw, phi);
  double pointwise = 0.0;
  for (std::size_t s = 0; s < grid.sites(); ++s) {
    double n0 = 0.0, n1 = 0.0;
    for (int mu = 0; mu < 3; ++mu) {
      n0 += da.vec3(s, mu).squaredNorm();
      n1 += daw.vec3(s, mu).squaredNorm();
    }
    pointwise = std::max(pointwise, std::abs(n1 - n0) / std::max(1.0, n0));
  }
  const double e0 = energy_potential(a, phi).total;
  const double e1 = energy_potential(aw, phi).total;
  const double total = std::abs(e1 - e0) / e0;
  return {pointwise <= 1e-10 && total <= 1e-10,
          format("pointwise %.2e, total relative %.2e (E = %.6f)", pointwise, total, e0)};
}

// 4. Identity suite at n = 16, 32, 64.
Outcome identity_convergence() {
  const auto results = identity_suite({16, 32, 64}, 7);
  bool ok = !results.empty();
  int algebraic = 0;
  double worst_residual = 0.0, worst_order = 1e300;
  std::string failed;
  for (const auto& r : results) {
    ok = ok && r.passed;
    if (!r.passed) failed += " " + r.name;
    if (r.algebraic) {
      ++algebraic;
      for (double x : r.residual) worst_residual = std::max(worst_residual, x);
    } else {
      worst_order = std::min(worst_order, r.fitted_order);
    }
  }
  std::string detail = format("%zu identities (%d algebraic, max residual %.1e; min order %.3f)", results.size(),
                              algebraic, worst_residual, worst_order);
  if (!failed.empty()) detail += "; failed:" + failed;
  return {ok, detail};
}

double cs_charge(const LiftField& u) { return chern_simons_charge(pure_gauge_potential(u)).cs.at(0); }

// 5. Charge integrality and agreement of the three routes, and additivity.
Outcome charge_agreement() {
  const Grid grid(48);
  bool ok = true;
  std::ostringstream detail;
  for (int q : {1, 2}) {
    const Ansatz a = make_ansatz(AnsatzKind::hopf, grid, q);
    const double cs = cs_charge(a.u);
    const double wh = whitehead_charge(a.psi);
    int link = 0;
    try {
      link = linking_charge(a.psi, Vec3::UnitY(), Vec3::UnitZ());
    } catch (const std::exception&) {
      link = -999;
    }
    ok = ok && std::abs(cs - q) <= 0.02 && std::abs(wh - q) <= 0.02 && link == q;
    detail << format("Q=%d: cs %.5f, whitehead %.5f, linking %d; ", q, cs, wh, link);
  }
  // The degree of a product is the sum of the degrees. Stabilizer of i with
  // random phase (degree 0), and the square of the charge-1 lift (degree 2).
  const LiftField u = make_ansatz(AnsatzKind::hopf, grid, 1).u;
  const LatticeField theta = smooth_random_scalar(grid, 70, 2.0, 1);
  LiftField w(grid);
  for (std::size_t s = 0; s < grid.sites(); ++s) w.set(s, Quaternion::exp({theta.at(s)[0], 0.0, 0.0}));
  const double cu = cs_charge(u), cw = cs_charge(w);
  const double gap_w = std::abs(cs_charge(u * w) - (cu + cw));
  const double gap_u = std::abs(cs_charge(u * u) - 2.0 * cu);
  ok = ok && gap_w <= 0.03 && gap_u <= 0.03;
  detail << format("additivity |Q(uw) - Q(u) - Q(w)| = %.1e, |Q(uu) - 2Q(u)| = %.1e", gap_w, gap_u);
  return {ok, detail.str()};
}

// 6. Analytic gradient against central differences of the energy.
Outcome gradient_check() {
  const Grid grid(16);
  const MapField psi = make_ansatz(AnsatzKind::hopf, grid, 1, 0.2, 80).psi;
  const LatticeField grad = energy_gradient(psi);
  std::mt19937_64 rng(81);
  std::normal_distribution<double> gauss;
  const double eps = 1e-5;
  double worst = 0.0;
  for (int t = 0; t < 100; ++t) {
    LatticeField dir(grid, 0, 3);
    for (std::size_t s = 0; s < grid.sites(); ++s) {
      const Vec3 p = psi.point(s);
      const Vec3 v(gauss(rng), gauss(rng), gauss(rng));
      dir.set_vec3(s, 0, v - v.dot(p) * p);
    }
    auto energy_at = [&](double step) {
      MapField q = psi;
      for (std::size_t i = 0; i < q.values.data().size(); ++i) q.values.data()[i] += step * dir.data()[i];
      return energy_map(q).total;
    };
    const double fd = (energy_at(eps) - energy_at(-eps)) / (2.0 * eps);
    double analytic = 0.0;
    for (std::size_t i = 0; i < dir.data().size(); ++i) analytic += grad.data()[i] * dir.data()[i];
    worst = std::max(worst, std::abs(analytic - fd) / std::abs(fd));
  }
  return {worst <= 1e-6, format("max relative error %.2e over 100 directions", worst)};
}

// 7. Relaxation of hopf(1) at n = 32.
Outcome minimization() {
  const Grid grid(32);
  const MapField psi0 = make_ansatz(AnsatzKind::hopf, grid, 1).psi;
  RelaxConfig cfg;  // defaults: 2000 iterations, grad_tol 1e-3, Barzilai-Borwein
  const RelaxRun run = relax(psi0, cfg);
  setenv("HOPF_THREADS", "2", 1);
  const RelaxRun again = relax(psi0, cfg);
  unsetenv("HOPF_THREADS");

  bool monotone = true;
  for (std::size_t k = 1; k < run.history.size(); ++k)
    monotone = monotone && run.history[k].energy < run.history[k - 1].energy;
  const HistoryEntry& first = run.history.front();
  const HistoryEntry& last = run.history.back();
  const bool converged = last.grad_norm <= 1e-3 * first.grad_norm;
  const double charge = last.charge.value_or(std::nan(""));
  const double drift = std::abs(charge - 1.0);
  const bool charge_kept = drift <= 0.05;
  const bool reproducible = history_csv(run) == history_csv(again) && run.psi.values.data() == again.psi.values.data();
  const auto jumps = charge_guard(run);
  return {monotone && converged && charge_kept && reproducible,
          format("%s after %d iterations: E %.4f -> %.4f, grad ratio %.2e, charge %.4f, monotone %s, "
                 "reproducible %s, charge_guard flags %zu",
                 to_string(run.reason).c_str(), last.iter, first.energy, last.energy,
                 last.grad_norm / first.grad_norm, charge, monotone ? "yes" : "no", reproducible ? "yes" : "no",
                 jumps.size())};
}

// 8. E(u phi) against E_phi(u^-1 du), and the cross-product / coisotropy Skyrme ratio.
Outcome dual_formulation() {
  std::vector<int> sizes{16, 32, 64};
  std::vector<double> gaps;
  std::ostringstream detail;
  for (int n : sizes) {
    const Grid grid(n);
    const LiftField u = smooth_random_lift(grid, 90, 0.8, 1);
    const MapField phi = smooth_random_map(grid, 91, 0.8, 1);
    const double direct = energy_map(act(u, phi)).total;
    const double potential = energy_potential(pure_gauge_potential(u), phi).total;
    gaps.push_back(std::abs(direct - potential) / direct);
  }
  const double order = fitted_order(sizes, gaps);
  detail << format("relative gaps %.2e %.2e %.2e, order %.3f; ", gaps[0], gaps[1], gaps[2], order);

  const Grid grid(32);
  const MapField psi = make_ansatz(AnsatzKind::hopf, grid, 1).psi;
  const LatticeField cois = energy_map(psi, EnergyVariant::coisotropy, {0.0, 1.0}).density;
  const LatticeField cross = energy_map(psi, EnergyVariant::cross_product, {0.0, 1.0}).density;
  double sum = 0.0, sum2 = 0.0;
  int count = 0;
  for (std::size_t s = 0; s < grid.sites(); ++s) {
    if (cois.at(s)[0] <= 1e-8) continue;
    const double r = cross.at(s)[0] / cois.at(s)[0];
    sum += r;
    sum2 += r * r;
    ++count;
  }
  const double mean = sum / count;
  const double spread = std::sqrt(std::max(0.0, sum2 / count - mean * mean)) / mean;
  detail << format("Skyrme ratio mean %.12f over %d sites, std/mean %.1e (frozen %.1f)", mean, count, spread,
                   kCrossProductRatio);
  const bool ok = order >= 0.9 && spread <= 1e-10 && std::abs(mean - kCrossProductRatio) <= 1e-10;
  return {ok, detail.str()};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "coisotropy isometry", 1.0, coisotropy_isometry},
      {2, "exact discrete identities", 5.0, discrete_identities},
      {3, "gauge invariance", 10.0, gauge_invariance},
      {4, "identity suite convergence", 180.0, identity_convergence},
      {5, "topological charge", 120.0, charge_agreement},
      {6, "gradient correctness", 30.0, gradient_check},
      {7, "minimization", 600.0, minimization},
      {8, "dual formulation", 120.0, dual_formulation},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = seconds <= c.budget_seconds;
    const bool passed = o.passed && in_time;
    if (!passed) ++failures;
    std::printf("%s criterion %d (%s): %s [%.2f s of %.0f s]\n", passed ? "PASS" : "FAIL", c.id, c.name,
                o.detail.c_str(), seconds, c.budget_seconds);
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
