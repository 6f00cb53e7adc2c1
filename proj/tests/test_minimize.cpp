#include "hopf/ansatz.hpp"
#include "hopf/minimize.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <cstdlib>
#include <limits>

using namespace hopf;

namespace {

RelaxRun synthetic_run(const std::vector<std::optional<double>>& charges) {
  RelaxRun run;
  for (std::size_t k = 0; k < charges.size(); ++k) {
    HistoryEntry e;
    e.iter = static_cast<int>(10 * k);
    e.charge = charges[k];
    run.history.push_back(e);
  }
  return run;
}

}  // namespace

TEST(Minimize, StepRuleNames) {
  for (StepRule r : {StepRule::fixed, StepRule::barzilai_borwein, StepRule::backtracking})
    EXPECT_EQ(parse_step_rule(to_string(r)), r);
  EXPECT_THROW(parse_step_rule("newton"), std::invalid_argument);
}

TEST(Minimize, ConfigValidation) {
  RelaxConfig cfg;
  EXPECT_NO_THROW(cfg.validate());
  cfg.max_iters = 0;
  EXPECT_THROW(cfg.validate(), std::invalid_argument);
  cfg = {};
  cfg.grad_tol = 1.0;
  EXPECT_THROW(cfg.validate(), std::invalid_argument);
  cfg = {};
  cfg.step_init = 0.0;
  EXPECT_THROW(cfg.validate(), std::invalid_argument);
}

TEST(Minimize, ConstantMapIsCritical) {
  const RelaxRun run = relax(MapField::constant(Grid(8)), RelaxConfig{});
  EXPECT_EQ(run.reason, StopReason::converged);
  ASSERT_EQ(run.history.size(), 1u);
  EXPECT_EQ(run.history[0].energy, 0.0);
  EXPECT_EQ(run.history[0].grad_norm, 0.0);
}

TEST(Minimize, NullSectorRelaxesToZero) {
  const Grid grid(32);
  const MapField psi0 = make_ansatz(AnsatzKind::constant, grid, 0, 0.3, 11).psi;
  RelaxConfig cfg;
  cfg.max_iters = 500;
  cfg.grad_tol = 1e-6;
  cfg.charge_check_every = 0;
  const RelaxRun run = relax(psi0, cfg);
  ASSERT_GE(run.history.size(), 2u);
  EXPECT_LE(run.history.back().energy, 1e-3 * run.history.front().energy);
  for (std::size_t k = 1; k < run.history.size(); ++k)
    EXPECT_LT(run.history[k].energy, run.history[k - 1].energy) << "iter " << run.history[k].iter;
}

TEST(Minimize, BacktrackingIsMonotone) {
  const Grid grid(16);
  const MapField psi0 = make_ansatz(AnsatzKind::hopf, grid, 1, 0.2, 3).psi;
  RelaxConfig cfg;
  cfg.max_iters = 40;
  cfg.step_rule = StepRule::backtracking;
  cfg.step_init = 1.0;  // forces halving on the first step
  cfg.charge_check_every = 10;
  const RelaxRun run = relax(psi0, cfg);
  EXPECT_EQ(run.history.size(), 41u);
  for (std::size_t k = 1; k < run.history.size(); ++k) {
    EXPECT_LT(run.history[k].energy, run.history[k - 1].energy);
    EXPECT_LE(run.history[k].step, 1.0);
  }
  EXPECT_TRUE(run.history[10].charge.has_value());
  EXPECT_FALSE(run.history[11].charge.has_value());
  EXPECT_TRUE(run.history.back().charge.has_value());
  EXPECT_LE(run.psi.constraint_violation(), 1e-14);
}

TEST(Minimize, HistoryIsReproducible) {
  const Grid grid(16);
  const MapField psi0 = make_ansatz(AnsatzKind::hopf, grid, 1, 0.2, 5).psi;
  RelaxConfig cfg;
  cfg.max_iters = 30;
  cfg.charge_check_every = 15;
  setenv("HOPF_THREADS", "1", 1);
  const RelaxRun a = relax(psi0, cfg);
  setenv("HOPF_THREADS", "4", 1);
  const RelaxRun b = relax(psi0, cfg);
  unsetenv("HOPF_THREADS");
  EXPECT_EQ(history_csv(a), history_csv(b));
  EXPECT_EQ(a.psi.values.data(), b.psi.values.data());
}

TEST(Minimize, CheckpointCadence) {
  const Grid grid(8);
  const MapField psi0 = make_ansatz(AnsatzKind::constant, grid, 0, 0.3, 2).psi;
  RelaxConfig cfg;
  cfg.max_iters = 25;
  cfg.grad_tol = 1e-12;
  cfg.checkpoint_every = 10;
  cfg.charge_check_every = 0;
  std::vector<int> seen;
  const RelaxRun run = relax(psi0, cfg, [&](int it, const MapField&) { seen.push_back(it); });
  ASSERT_EQ(run.reason, StopReason::max_iters);
  EXPECT_EQ(seen, (std::vector<int>{10, 20, 25}));
}

TEST(Minimize, ChargeGuard) {
  EXPECT_TRUE(charge_guard(synthetic_run({1.0, 1.01, 0.99, 1.0})).empty());
  EXPECT_EQ(charge_guard(synthetic_run({1.0, 1.0, 0.02, 0.0})), std::vector<int>{20});
  EXPECT_EQ(charge_guard(synthetic_run({1.0, std::nullopt, 0.9})).size(), 0u);
  const double nan = std::numeric_limits<double>::quiet_NaN();
  EXPECT_EQ(charge_guard(synthetic_run({1.0, nan})), std::vector<int>{10});
  EXPECT_EQ(charge_guard(synthetic_run({1.0, 0.8}), 0.1), std::vector<int>{10});
}

TEST(Minimize, HistoryCsvLayout) {
  RelaxRun run = synthetic_run({1.0, std::nullopt});
  run.history[0].energy = 0.1;
  const std::string csv = history_csv(run);
  EXPECT_EQ(csv.rfind("iter,energy,dirichlet,skyrme,grad_norm,step,charge\n", 0), 0u);
  EXPECT_NE(csv.find("\n0,0.10000000000000001,"), std::string::npos);
  EXPECT_EQ(csv.back(), '\n');
  EXPECT_NE(csv.find("\n10,0,0,0,0,0,\n"), std::string::npos);
}

TEST(Minimize, StabilizerPenaltyWeights) {
  const Grid grid(8);
  EXPECT_EQ(stabilizer_penalty(MapField::constant(grid), 1.0), 0.0);
  const MapField psi = make_ansatz(AnsatzKind::hopf, grid, 1).psi;
  EXPECT_EQ(stabilizer_penalty(psi, 0.0), 0.0);
  EXPECT_GT(stabilizer_penalty(psi, 1.0), 0.0);
  EXPECT_EQ(stabilizer_gradient(psi, 0.0).max_abs(), 0.0);
}
