#pragma once

#include "hopf/energy.hpp"
#include "hopf/fields.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace hopf {

enum class StepRule { fixed, barzilai_borwein, backtracking };
std::string to_string(StepRule rule);
StepRule parse_step_rule(const std::string& name);

struct RelaxConfig {
  int max_iters = 2000;
  double grad_tol = 1e-3;          ///< stop when |grad| <= grad_tol * |grad_0|
  double step_init = 1e-2;
  StepRule step_rule = StepRule::barzilai_borwein;
  int checkpoint_every = 0;        ///< 0 disables intermediate checkpoints
  int charge_check_every = 50;     ///< 0 disables charge monitoring
  /// Upper bound on step * max_x |grad(x)|, the largest per-site move before retraction.
  /// Large moves let the lattice field tunnel out of its homotopy sector.
  double max_move = 0.05;
  /// Weight of the optional grid-scale penalty (h / 32) sum_x,mu |psi(x+e) - 2 psi(x) + psi(x-e)|^2
  /// added to the descent objective. It damps checkerboard modes, which the centered-difference
  /// energy does not see. At weight 1 the quadratic part of the Dirichlet stencil becomes the
  /// forward one. Off by default, so the objective is the energy itself.
  double stabilizer = 0.0;
  EnergyScales scales;

  /// Throws std::invalid_argument when a field is out of range.
  void validate() const;
};

struct HistoryEntry {
  int iter = 0;
  double energy = 0.0;             ///< descent objective: dirichlet + skyrme + stabilizer penalty
  double dirichlet = 0.0;
  double skyrme = 0.0;
  double grad_norm = 0.0;
  double step = 0.0;               ///< step of the move that produced this state; 0 for iter 0
  std::optional<double> charge;
};

enum class StopReason { converged, max_iters, stalled, diverged };
std::string to_string(StopReason reason);

struct RelaxRun {
  std::vector<HistoryEntry> history;
  MapField psi;                    ///< last accepted state
  StopReason reason = StopReason::max_iters;
};

/// Called with the iteration number and state at each checkpoint and once at the end.
using CheckpointSink = std::function<void(int, const MapField&)>;

/// The stabilizer penalty of RelaxConfig and its (ambient) gradient.
double stabilizer_penalty(const MapField& psi, double weight);
LatticeField stabilizer_gradient(const MapField& psi, double weight);

/// Projected gradient descent on the coisotropy energy of a CP1 map (plus the optional stabilizer):
/// psi <- normalize(psi - step * grad). barzilai_borwein and backtracking accept a step
/// only if it strictly lowers the energy, halving the step otherwise; fixed accepts every
/// step. The charge is monitored with the Whitehead route, never constrained.
RelaxRun relax(const MapField& psi0, const RelaxConfig& cfg, const CheckpointSink& sink = {});

/// Iterations k whose charge differs by more than threshold from the previous estimate.
std::vector<int> charge_guard(const RelaxRun& run, double threshold = 0.25);

/// iter,energy,dirichlet,skyrme,grad_norm,step,charge with %.17g; empty charge when not sampled.
std::string history_csv(const RelaxRun& run);

}  // namespace hopf
