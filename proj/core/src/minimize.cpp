#include "hopf/minimize.hpp"

#include "hopf/parallel.hpp"
#include "hopf/topology.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>

namespace hopf {

std::string to_string(StepRule rule) {
  switch (rule) {
    case StepRule::fixed: return "fixed";
    case StepRule::barzilai_borwein: return "barzilai_borwein";
    case StepRule::backtracking: return "backtracking";
  }
  return "?";
}

StepRule parse_step_rule(const std::string& name) {
  if (name == "fixed") return StepRule::fixed;
  if (name == "barzilai_borwein") return StepRule::barzilai_borwein;
  if (name == "backtracking") return StepRule::backtracking;
  throw std::invalid_argument("unknown step rule: " + name);
}

std::string to_string(StopReason reason) {
  switch (reason) {
    case StopReason::converged: return "converged";
    case StopReason::max_iters: return "max_iters";
    case StopReason::stalled: return "stalled";
    case StopReason::diverged: return "diverged";
  }
  return "?";
}

void RelaxConfig::validate() const {
  if (max_iters < 1) throw std::invalid_argument("max_iters must be >= 1");
  if (!(grad_tol > 0.0 && grad_tol < 1.0)) throw std::invalid_argument("grad_tol must lie in (0, 1)");
  if (!(step_init > 0.0)) throw std::invalid_argument("step_init must be positive");
  if (!(max_move > 0.0)) throw std::invalid_argument("max_move must be positive");
  if (!(stabilizer >= 0.0)) throw std::invalid_argument("stabilizer must be >= 0");
  if (checkpoint_every < 0 || charge_check_every < 0)
    throw std::invalid_argument("checkpoint and charge cadences must be >= 0");
}

namespace {

// f(x+e) - 2 f(x) + f(x-e) for a 3-component 0-form.
Vec3 second_difference(const LatticeField& f, const Grid& grid, std::size_t s, int mu) {
  return f.vec3(grid.shift(s, mu, 1)) - 2.0 * f.vec3(s) + f.vec3(grid.shift(s, mu, -1));
}

}  // namespace

double stabilizer_penalty(const MapField& psi, double weight) {
  if (weight == 0.0) return 0.0;
  const Grid& grid = psi.grid();
  const std::size_t slab = static_cast<std::size_t>(grid.n) * grid.n;
  const double sum = ordered_sum(grid.n, [&](int z) {
    double acc = 0.0;
    for (std::size_t s = slab * z; s < slab * (z + 1); ++s)
      for (int mu = 0; mu < 3; ++mu) acc += second_difference(psi.values, grid, s, mu).squaredNorm();
    return acc;
  });
  return weight * grid.h() / 32.0 * sum;
}

LatticeField stabilizer_gradient(const MapField& psi, double weight) {
  const Grid& grid = psi.grid();
  LatticeField out(grid, 0, 3);
  if (weight == 0.0) return out;
  std::vector<LatticeField> lap(3, LatticeField(grid, 0, 3));
  for (int mu = 0; mu < 3; ++mu)
    for_each_site(grid, [&](std::size_t s) { lap[mu].set_vec3(s, 0, second_difference(psi.values, grid, s, mu)); });
  const double c = weight * grid.h() / 16.0;
  for_each_site(grid, [&](std::size_t s) {
    Vec3 g = Vec3::Zero();
    for (int mu = 0; mu < 3; ++mu) g += second_difference(lap[mu], grid, s, mu);
    out.set_vec3(s, 0, c * g);
  });
  return out;
}

namespace {

constexpr double kMinStep = 1e-14;

struct State {
  MapField psi;
  EnergyReport energy;
  double objective = 0.0;
  LatticeField grad;
  double grad_norm = 0.0;
  double grad_max = 0.0;  // largest per-site gradient magnitude
};

State evaluate(MapField psi, const RelaxConfig& cfg) {
  State s;
  s.energy = energy_map(psi, EnergyVariant::coisotropy, cfg.scales);
  s.objective = s.energy.total + stabilizer_penalty(psi, cfg.stabilizer);
  s.grad = energy_gradient_ambient(psi, cfg.scales);
  s.grad += stabilizer_gradient(psi, cfg.stabilizer);
  for_each_site(psi.grid(), [&](std::size_t site) {
    const Vec3 p = psi.point(site);
    const Vec3 g = s.grad.vec3(site);
    s.grad.set_vec3(site, 0, g - g.dot(p) * p);
  });
  // Functional derivative: the site gradient divided by the cell volume.
  s.grad_norm = l2_norm(s.grad) / psi.grid().cell_volume();
  for (std::size_t site = 0; site < s.grad.sites(); ++site)
    s.grad_max = std::max(s.grad_max, s.grad.vec3(site).norm());
  s.psi = std::move(psi);
  return s;
}

MapField retract(const MapField& psi, const LatticeField& grad, double step) {
  MapField out = psi;
  auto& v = out.values.data();
  const auto& g = grad.data();
  for (std::size_t i = 0; i < v.size(); ++i) v[i] -= step * g[i];
  out.renormalize();
  return out;
}

HistoryEntry entry(int iter, const State& s, double step) {
  return {iter, s.objective, s.energy.dirichlet, s.energy.skyrme, s.grad_norm, step, std::nullopt};
}

}  // namespace

RelaxRun relax(const MapField& psi0, const RelaxConfig& cfg, const CheckpointSink& sink) {
  cfg.validate();
  if (psi0.target != MapTarget::sphere) throw std::invalid_argument("relax: CP1-valued map required");
  if (psi0.constraint_violation() > 1e-10 || !psi0.values.finite())
    throw std::invalid_argument("relax: initial map is not a valid CP1 map");

  auto estimate = [](const MapField& psi) {
    try {
      return whitehead_charge(psi);
    } catch (const std::runtime_error&) {
      // Nonzero torus fluxes: the field has left every sector with a defined charge.
      return std::numeric_limits<double>::quiet_NaN();
    }
  };
  auto sample_charge = [&](int iter, HistoryEntry& e, const MapField& psi) {
    if (cfg.charge_check_every > 0 && iter % cfg.charge_check_every == 0) e.charge = estimate(psi);
  };

  State cur = evaluate(psi0, cfg);
  RelaxRun run;
  run.history.push_back(entry(0, cur, 0.0));
  sample_charge(0, run.history.back(), cur.psi);
  const double target = cfg.grad_tol * cur.grad_norm;

  double alpha = cfg.step_init;
  int iter = 0;
  StopReason reason = StopReason::max_iters;
  if (cur.grad_norm <= target || cur.grad_norm == 0.0) reason = StopReason::converged;

  while (reason == StopReason::max_iters && iter < cfg.max_iters) {
    std::optional<State> next;
    double used = std::min(alpha, cfg.max_move / cur.grad_max);
    if (cfg.step_rule == StepRule::fixed) {
      next = evaluate(retract(cur.psi, cur.grad, used), cfg);
      if (!std::isfinite(next->objective)) {
        reason = StopReason::diverged;
        break;
      }
    } else {
      while (used >= kMinStep) {
        State trial = evaluate(retract(cur.psi, cur.grad, used), cfg);
        if (!std::isfinite(trial.objective)) {
          reason = StopReason::diverged;
          break;
        }
        if (trial.objective < cur.objective) {
          next = std::move(trial);
          break;
        }
        used *= 0.5;
      }
      if (reason == StopReason::diverged) break;
      if (!next) {
        reason = StopReason::stalled;
        break;
      }
    }

    ++iter;
    if (cfg.step_rule == StepRule::barzilai_borwein) {
      const LatticeField s = next->psi.values - cur.psi.values;
      const LatticeField y = next->grad - cur.grad;
      const double sy = l2_inner(s, y);
      alpha = sy > 0.0 ? l2_inner(s, s) / sy : 2.0 * used;
    } else if (cfg.step_rule == StepRule::backtracking) {
      alpha = 2.0 * used;
    }
    cur = std::move(*next);
    run.history.push_back(entry(iter, cur, used));
    sample_charge(iter, run.history.back(), cur.psi);
    if (sink && cfg.checkpoint_every > 0 && iter % cfg.checkpoint_every == 0) sink(iter, cur.psi);
    if (cur.grad_norm <= target) reason = StopReason::converged;
  }

  if (!run.history.back().charge && cfg.charge_check_every > 0)
    run.history.back().charge = estimate(cur.psi);
  run.reason = reason;
  run.psi = std::move(cur.psi);
  if (sink) sink(iter, run.psi);
  return run;
}

std::vector<int> charge_guard(const RelaxRun& run, double threshold) {
  std::vector<int> flagged;
  const HistoryEntry* prev = nullptr;
  for (const auto& e : run.history) {
    if (!e.charge) continue;
    if (prev && !(std::abs(*e.charge - *prev->charge) <= threshold)) flagged.push_back(e.iter);
    prev = &e;
  }
  return flagged;
}

std::string history_csv(const RelaxRun& run) {
  std::string out = "iter,energy,dirichlet,skyrme,grad_norm,step,charge\n";
  char buf[512];
  for (const auto& e : run.history) {
    std::snprintf(buf, sizeof buf, "%d,%.17g,%.17g,%.17g,%.17g,%.17g,", e.iter, e.energy, e.dirichlet,
                  e.skyrme, e.grad_norm, e.step);
    out += buf;
    if (e.charge) {
      std::snprintf(buf, sizeof buf, "%.17g", *e.charge);
      out += buf;
    }
    out += '\n';
  }
  return out;
}

}  // namespace hopf
