#include "cli.hpp"

#include "hopf/ansatz.hpp"
#include "hopf/config.hpp"
#include "hopf/energy.hpp"
#include "hopf/export.hpp"
#include "hopf/gauge.hpp"
#include "hopf/invariants.hpp"
#include "hopf/minimize.hpp"
#include "hopf/snapshot.hpp"
#include "hopf/topology.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <cstdio>
#include <filesystem>
#include <optional>
#include <ostream>
#include <sstream>

namespace hopf::cli {

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kBadInput = 2;
constexpr int kNumerical = 3;

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

Vec3 parse_vec3(const std::string& text) {
  std::vector<double> v;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) v.push_back(std::stod(item));
  if (v.size() != 3) throw CLI::ValidationError("expected three comma-separated numbers: " + text);
  const Vec3 out(v[0], v[1], v[2]);
  if (out.norm() == 0.0) throw CLI::ValidationError("regular value must be nonzero");
  return out.normalized();
}

std::optional<LiftField> sibling_lift(const std::string& path, const MapField& psi) {
  const std::string lift_path = lift_sibling_path(path);
  if (!fs::exists(lift_path)) return std::nullopt;
  LiftField u = to_lift_field(read_snapshot(lift_path));
  if (!(u.grid() == psi.grid())) return std::nullopt;
  if (psi.target == MapTarget::sphere &&
      max_abs_diff(act(u, MapField::constant(psi.grid())).values, psi.values) > 1e-10)
    return std::nullopt;  // stale: the map was changed after the lift was written
  return u;
}

struct Options {
  // ansatz
  std::string config_path;
  std::string kind;
  int charge = 1;
  int n = 0;
  double length = 0.0;
  double noise = -1.0;
  long long seed = -1;
  std::string out_path = "ansatz.hopf";
  // shared
  std::string input;
  bool as_json = false;
  std::string variant = "coisotropy";
  std::string p = "0,1,0";
  std::string q = "0,0,1";
  std::string out_dir;
  int max_iters = 0;
  std::vector<int> sizes{16, 32, 64};
  long long check_seed = 7;
  int check_n = 32;
  std::string prefix = "export";
};

int cmd_ansatz(const Options& o, std::ostream& out) {
  RunConfig cfg = o.config_path.empty() ? RunConfig{} : load_run_config(o.config_path);
  if (!o.kind.empty()) cfg.ansatz_kind = parse_ansatz_kind(o.kind);
  if (o.n > 0) cfg.grid_n = o.n;
  if (o.length > 0.0) cfg.grid_length = o.length;
  if (o.noise >= 0.0) cfg.ansatz_noise = o.noise;
  if (o.seed >= 0) cfg.seed = static_cast<std::uint64_t>(o.seed);
  cfg.ansatz_charge = o.charge;

  const Ansatz a = make_ansatz(cfg.ansatz_kind, cfg.grid(), cfg.ansatz_charge, cfg.ansatz_noise, cfg.seed);
  const std::string creation = "ansatz kind=" + to_string(cfg.ansatz_kind) +
                               " charge=" + std::to_string(cfg.ansatz_charge) + " noise=" + fmt(cfg.ansatz_noise) +
                               " seed=" + std::to_string(cfg.seed);
  Snapshot map_snap = make_snapshot(a.psi, creation);
  Snapshot lift_snap = make_snapshot(a.u, creation);
  if (cfg.ansatz_kind != AnsatzKind::great_circle) {
    const double q = cfg.ansatz_kind == AnsatzKind::constant ? 0.0 : cfg.ansatz_charge;
    map_snap.charge = q;
    lift_snap.charge = q;
  }
  write_snapshot(o.out_path, map_snap);
  write_snapshot(lift_sibling_path(o.out_path), lift_snap);
  out << "wrote " << o.out_path << " and " << lift_sibling_path(o.out_path) << '\n';
  return kOk;
}

int cmd_energy(const Options& o, std::ostream& out) {
  const MapField psi = to_map_field(read_snapshot(o.input));
  const EnergyReport e = energy_map(psi, parse_energy_variant(o.variant));
  if (o.as_json) {
    out << json{{"dirichlet", e.dirichlet}, {"skyrme", e.skyrme}, {"total", e.total}, {"model", e.model_tag}}.dump()
        << '\n';
  } else {
    out << "model     " << e.model_tag << "\ndirichlet " << fmt(e.dirichlet) << "\nskyrme    " << fmt(e.skyrme)
        << "\ntotal     " << fmt(e.total) << '\n';
  }
  return kOk;
}

int cmd_hopf(const Options& o, std::ostream& out, std::ostream& err) {
  const MapField psi = to_map_field(read_snapshot(o.input));
  if (psi.target != MapTarget::sphere) {
    err << "hopf: the snapshot is not a CP1 map; use 'degree' for SU2-valued fields\n";
    return kBadInput;
  }
  ChargeReport report;
  if (const auto u = sibling_lift(o.input, psi)) report = chern_simons_charge(pure_gauge_potential(*u), &psi);
  try {
    report.whitehead = whitehead_charge(psi);
  } catch (const std::runtime_error& e) {
    err << "whitehead route unavailable: " << e.what() << '\n';
  }
  try {
    report.linking = linking_charge(psi, parse_vec3(o.p), parse_vec3(o.q));
  } catch (const std::runtime_error& e) {
    err << "linking route unavailable: " << e.what() << '\n';
  }
  if (report.cs.empty() && report.whitehead) {
    // Without a lift the rounded charge comes from the Whitehead route.
    report.rounded = {static_cast<int>(std::lround(*report.whitehead))};
    report.deviation = std::abs(*report.whitehead - report.rounded[0]);
  }
  if (o.as_json) {
    out << report.to_json() << '\n';
    return kOk;
  }
  if (!report.cs.empty()) out << "chern_simons " << fmt(report.cs[0]) << '\n';
  if (report.whitehead) out << "whitehead    " << fmt(*report.whitehead) << '\n';
  if (report.linking) out << "linking      " << *report.linking << '\n';
  if (!report.rounded.empty()) out << "rounded      " << report.rounded[0] << "\ndeviation    " << fmt(report.deviation) << '\n';
  return kOk;
}

int cmd_degree(const Options& o, std::ostream& out) {
  const Snapshot snap = read_snapshot(o.input);
  LiftField u;
  if (snap.kind == FieldKind::lift_su2) {
    u = to_lift_field(snap);
  } else {
    const MapField psi = to_map_field(snap);
    const auto lift = sibling_lift(o.input, psi);
    if (!lift) throw SnapshotError("no matching lift found next to " + o.input);
    u = *lift;
  }
  const ChargeReport report = chern_simons_charge(pure_gauge_potential(u));
  if (o.as_json) {
    out << json{{"degree", report.cs[0]}, {"rounded", report.rounded[0]}, {"deviation", report.deviation}}.dump() << '\n';
  } else {
    out << "degree    " << fmt(report.cs[0]) << "\nrounded   " << report.rounded[0] << "\ndeviation "
        << fmt(report.deviation) << '\n';
  }
  return kOk;
}

int cmd_relax(const Options& o, std::ostream& out, std::ostream& err) {
  RunConfig cfg = o.config_path.empty() ? RunConfig{} : load_run_config(o.config_path);
  if (!o.out_dir.empty()) cfg.output_dir = o.out_dir;
  if (o.max_iters > 0) cfg.optimizer.max_iters = o.max_iters;
  const MapField psi0 = to_map_field(read_snapshot(o.input));
  if (psi0.target != MapTarget::sphere) {
    err << "relax: CP1-valued map required\n";
    return kBadInput;
  }
  fs::create_directories(cfg.output_dir);
  const fs::path dir(cfg.output_dir);

  auto sink = [&](int iter, const MapField& psi) {
    char name[64];
    std::snprintf(name, sizeof name, "checkpoint_%06d.hopf", iter);
    write_snapshot((dir / name).string(), make_snapshot(psi, "relax iter=" + std::to_string(iter)));
  };
  const RelaxRun run = relax(psi0, cfg.optimizer, sink);

  Snapshot final_snap = make_snapshot(run.psi, "relax final reason=" + to_string(run.reason));
  if (run.history.back().charge && std::isfinite(*run.history.back().charge)) final_snap.charge = run.history.back().charge;
  write_snapshot((dir / "final.hopf").string(), final_snap);
  write_text_atomic((dir / "history.csv").string(), history_csv(run));

  const HistoryEntry& last = run.history.back();
  out << "reason    " << to_string(run.reason) << "\niters     " << last.iter << "\nenergy    " << fmt(last.energy)
      << "\ngrad_norm " << fmt(last.grad_norm) << '\n';
  if (last.charge) out << "charge    " << fmt(*last.charge) << '\n';
  for (int iter : charge_guard(run)) err << "warning: charge jump at iteration " << iter << '\n';
  return run.reason == StopReason::diverged ? kNumerical : kOk;
}

json residual_json(const IdentityResidual& r) {
  return {{"name", r.name},         {"kind", r.algebraic ? "algebraic" : "differential"},
          {"sizes", r.sizes},       {"residual", r.residual},
          {"order", r.fitted_order}, {"budget", r.budget},
          {"passed", r.passed}};
}

int cmd_check(const Options& o, std::ostream& out) {
  std::vector<IdentityResidual> all = invariant_suite(o.check_n, static_cast<std::uint64_t>(o.check_seed));
  const auto gauge = identity_suite(o.sizes, static_cast<std::uint64_t>(o.check_seed));
  all.insert(all.end(), gauge.begin(), gauge.end());
  bool ok = true;
  for (const auto& r : all) ok = ok && r.passed;

  if (o.as_json) {
    json rows = json::array();
    for (const auto& r : all) rows.push_back(residual_json(r));
    out << json{{"passed", ok}, {"identities", rows}}.dump() << '\n';
  } else {
    for (const auto& r : all) {
      char line[256];
      const double worst = *std::max_element(r.residual.begin(), r.residual.end());
      if (r.algebraic)
        std::snprintf(line, sizeof line, "%-4s %-36s algebraic    max %.3e (budget %.0e)\n", r.passed ? "ok" : "FAIL",
                      r.name.c_str(), worst, r.budget);
      else
        std::snprintf(line, sizeof line, "%-4s %-36s differential order %.3f (min %.2f)\n", r.passed ? "ok" : "FAIL",
                      r.name.c_str(), r.fitted_order, r.budget);
      out << line;
    }
    out << (ok ? "all identities within budget\n" : "some identities out of budget\n");
  }
  return ok ? kOk : kCheckFailed;
}

int cmd_export(const Options& o, std::ostream& out) {
  const Snapshot snap = read_snapshot(o.input);
  const std::string vtk = o.prefix + ".vtk";
  const std::string csv = o.prefix + "_density.csv";
  if (snap.kind == FieldKind::potential) {
    const PotentialField a = to_potential_field(snap);
    std::vector<LatticeField> axes(3, LatticeField(a.grid(), 0, 3));
    for (int mu = 0; mu < 3; ++mu)
      for (std::size_t s = 0; s < a.grid().sites(); ++s) axes[mu].set_vec3(s, 0, a.a.vec3(s, mu));
    write_text_atomic(vtk, vtk_document(a.grid(), {{"a_x", &axes[0]}, {"a_y", &axes[1]}, {"a_z", &axes[2]}}));
    LatticeField density(a.grid(), 0, 1);
    for (std::size_t s = 0; s < a.grid().sites(); ++s)
      for (int mu = 0; mu < 3; ++mu) *density.at(s) += 0.5 * a.a.vec3(s, mu).squaredNorm();
    write_text_atomic(csv, density_csv(density));
  } else {
    const MapField psi = to_map_field(snap);
    write_text_atomic(vtk, vtk_document(psi.grid(), {{"psi", &psi.values}}));
    write_text_atomic(csv, density_csv(energy_map(psi).density));
  }
  out << "wrote " << vtk << " and " << csv << '\n';
  return kOk;
}

int cmd_info(const Options& o, std::ostream& out) {
  const Snapshot s = read_snapshot(o.input);
  json j{{"n", s.grid.n},
         {"length", s.grid.length},
         {"kind", to_string(s.kind)},
         {"components", s.components},
         {"creation", s.creation},
         {"charge", s.charge ? json(*s.charge) : json(nullptr)},
         {"version", kSnapshotVersion}};
  out << (o.as_json ? j.dump() : j.dump(2)) << '\n';
  return kOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Faddeev-Skyrme lattice toolkit"};
  app.require_subcommand(1);
  Options o;

  auto* ansatz = app.add_subcommand("ansatz", "write an initial map and its lift");
  ansatz->add_option("--config", o.config_path, "run configuration file")->check(CLI::ExistingFile);
  ansatz->add_option("--kind", o.kind, "constant | hopf | ball_degree | great_circle");
  ansatz->add_option("--charge", o.charge, "winding number");
  ansatz->add_option("--n", o.n, "sites per axis");
  ansatz->add_option("--length", o.length, "period L");
  ansatz->add_option("--noise", o.noise, "amplitude of the smooth random perturbation");
  ansatz->add_option("--seed", o.seed, "random seed");
  ansatz->add_option("--out,-o", o.out_path, "output snapshot");

  auto* energy = app.add_subcommand("energy", "print the energy of a map");
  energy->add_option("snapshot", o.input)->required();
  energy->add_option("--variant", o.variant, "coisotropy | cross_product | isotropic_skyrme");
  energy->add_flag("--json", o.as_json);

  auto* hopf = app.add_subcommand("hopf", "Hopf charge by every available route");
  hopf->add_option("snapshot", o.input)->required();
  hopf->add_option("--p", o.p, "first regular value for the linking route");
  hopf->add_option("--q", o.q, "second regular value for the linking route");
  hopf->add_flag("--json", o.as_json);

  auto* degree = app.add_subcommand("degree", "degree of the lift");
  degree->add_option("snapshot", o.input)->required();
  degree->add_flag("--json", o.as_json);

  auto* relax_cmd = app.add_subcommand("relax", "minimize the energy from a snapshot");
  relax_cmd->add_option("snapshot", o.input)->required();
  relax_cmd->add_option("--config", o.config_path, "run configuration file")->check(CLI::ExistingFile);
  relax_cmd->add_option("--out-dir", o.out_dir, "directory for checkpoints and history");
  relax_cmd->add_option("--max-iters", o.max_iters, "override optimizer.max_iters");

  auto* check = app.add_subcommand("check", "run the identity and invariant suites");
  check->add_option("--sizes", o.sizes, "grid sizes for convergence orders")->delimiter(',')->expected(2, 16);
  check->add_option("--seed", o.check_seed, "seed of the random fields");
  check->add_option("--n", o.check_n, "grid size of the invariant suite");
  check->add_flag("--json", o.as_json);

  auto* export_cmd = app.add_subcommand("export", "write VTK and density CSV");
  export_cmd->add_option("snapshot", o.input)->required();
  export_cmd->add_option("--out,-o", o.prefix, "output prefix");

  auto* info = app.add_subcommand("info", "print a snapshot header");
  info->add_option("snapshot", o.input)->required();
  info->add_flag("--json", o.as_json);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kBadInput;
  }

  try {
    if (*ansatz) return cmd_ansatz(o, out);
    if (*energy) return cmd_energy(o, out);
    if (*hopf) return cmd_hopf(o, out, err);
    if (*degree) return cmd_degree(o, out);
    if (*relax_cmd) return cmd_relax(o, out, err);
    if (*check) return cmd_check(o, out);
    if (*export_cmd) return cmd_export(o, out);
    if (*info) return cmd_info(o, out);
  } catch (const SnapshotError& e) {
    err << "error: " << e.what() << '\n';
    return kBadInput;
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
    return kBadInput;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kBadInput;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kNumerical;
  }
  return kBadInput;
}

}  // namespace hopf::cli
