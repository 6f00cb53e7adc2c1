#include "hopf/ansatz.hpp"
#include "hopf/config.hpp"
#include "hopf/export.hpp"
#include "hopf/snapshot.hpp"

#include "../tools/cli.hpp"
#include "json.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace hopf;
namespace fs = std::filesystem;
using nlohmann::json;

namespace {

class TempDir {
 public:
  TempDir() {
    path_ = fs::temp_directory_path() /
            ("hopf_test_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(path_);
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  std::string operator/(const std::string& name) const { return (path_ / name).string(); }

 private:
  fs::path path_;
};

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "hopf");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), {}};
}

void spit(const std::string& path, const std::string& text) { std::ofstream(path, std::ios::binary) << text; }

}  // namespace

TEST(Snapshot, RoundTripIsBitwise) {
  const Grid grid(6, 3.5);
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const MapField psi = smooth_random_map(grid, seed, 1.0);
    Snapshot s = make_snapshot(psi, "seed " + std::to_string(seed));
    s.charge = 0.25 * static_cast<double>(seed);
    const Snapshot back = decode_snapshot(encode_snapshot(s));
    EXPECT_EQ(back.payload, s.payload);
    EXPECT_EQ(back.grid, s.grid);
    EXPECT_EQ(back.kind, FieldKind::map_s2);
    EXPECT_EQ(back.creation, s.creation);
    EXPECT_EQ(back.charge, s.charge);
    EXPECT_EQ(encode_snapshot(back), encode_snapshot(s));
    EXPECT_EQ(to_map_field(back).values.data(), psi.values.data());
  }
  const LiftField u = smooth_random_lift(grid, 9, 1.0);
  EXPECT_EQ(to_lift_field(decode_snapshot(encode_snapshot(make_snapshot(u)))).values.data(), u.values.data());
  const PotentialField a = pure_gauge_potential(u);
  const Snapshot ps = make_snapshot(a);
  EXPECT_EQ(ps.kind, FieldKind::potential);
  EXPECT_EQ(ps.components, 9);
  EXPECT_EQ(to_potential_field(decode_snapshot(encode_snapshot(ps))).a.data(), a.a.data());
}

TEST(Snapshot, HeaderLayout) {
  const std::vector<std::uint8_t> bytes = encode_snapshot(make_snapshot(MapField::constant(Grid(4))));
  ASSERT_GE(bytes.size(), 12u);
  EXPECT_EQ(std::string(bytes.begin(), bytes.begin() + 4), "HOPF");
  EXPECT_EQ(bytes[4], 1);
  EXPECT_EQ(bytes[5] | bytes[6] | bytes[7], 0);
  const std::uint32_t meta = bytes[8] | bytes[9] << 8 | bytes[10] << 16 | bytes[11] << 24;
  const json j = json::parse(bytes.begin() + 12, bytes.begin() + 12 + meta);
  EXPECT_EQ(j.at("n"), 4);
  EXPECT_EQ(j.at("kind"), "map_s2");
  EXPECT_EQ(bytes.size(), 12u + meta + 64u * 3u * 8u);
  // The first payload double is psi_x = 1 at site 0, little-endian.
  const std::vector<std::uint8_t> one{0, 0, 0, 0, 0, 0, 0xf0, 0x3f};
  EXPECT_EQ(std::vector<std::uint8_t>(bytes.begin() + 12 + meta, bytes.begin() + 20 + meta), one);
}

TEST(Snapshot, RejectsMalformedData) {
  std::vector<std::uint8_t> bytes = encode_snapshot(make_snapshot(MapField::constant(Grid(4))));
  auto bad_magic = bytes;
  bad_magic[0] = 'X';
  EXPECT_THROW(decode_snapshot(bad_magic), SnapshotError);
  auto bad_version = bytes;
  bad_version[4] = 9;
  EXPECT_THROW(decode_snapshot(bad_version), SnapshotError);
  auto truncated = bytes;
  truncated.pop_back();
  EXPECT_THROW(decode_snapshot(truncated), SnapshotError);
  EXPECT_THROW(decode_snapshot({'H', 'O'}), SnapshotError);
  EXPECT_THROW(to_potential_field(make_snapshot(MapField::constant(Grid(4)))), SnapshotError);
}

TEST(Snapshot, FileRoundTrip) {
  TempDir dir;
  const Snapshot s = make_snapshot(smooth_random_map(Grid(5), 3, 1.0), "file");
  write_snapshot(dir / "a.hopf", s);
  EXPECT_EQ(read_snapshot(dir / "a.hopf").payload, s.payload);
  EXPECT_FALSE(fs::exists(dir / "a.hopf.tmp"));
  EXPECT_THROW(read_snapshot(dir / "missing.hopf"), SnapshotError);
  EXPECT_EQ(lift_sibling_path("out/x.hopf"), "out/x_lift.hopf");
}

TEST(Config, ParsesKnownKeys) {
  const RunConfig cfg = parse_run_config(
      "# comment\n"
      "grid.n = 24\n"
      "grid.length = 5.5   # trailing\n"
      "model.variant = cross_product\n"
      "ansatz.kind = great_circle\n"
      "ansatz.charge = 2\n"
      "optimizer.max_iters = 77\n"
      "optimizer.step_rule = backtracking\n"
      "optimizer.grad_tol = 1e-4\n"
      "output.dir = runs/a\n"
      "seed = 19\n");
  EXPECT_EQ(cfg.grid_n, 24);
  EXPECT_DOUBLE_EQ(cfg.grid_length, 5.5);
  EXPECT_EQ(cfg.model_variant, EnergyVariant::cross_product);
  EXPECT_EQ(cfg.ansatz_kind, AnsatzKind::great_circle);
  EXPECT_EQ(cfg.ansatz_charge, 2);
  EXPECT_EQ(cfg.optimizer.max_iters, 77);
  EXPECT_EQ(cfg.optimizer.step_rule, StepRule::backtracking);
  EXPECT_DOUBLE_EQ(cfg.optimizer.grad_tol, 1e-4);
  EXPECT_EQ(cfg.output_dir, "runs/a");
  EXPECT_EQ(cfg.seed, 19u);
  EXPECT_EQ(to_text(parse_run_config(to_text(cfg))), to_text(cfg));
}

TEST(Config, RejectsBadInput) {
  EXPECT_THROW(parse_run_config("grid.m = 3\n"), ConfigError);
  EXPECT_THROW(parse_run_config("grid.n = 8\ngrid.n = 9\n"), ConfigError);
  EXPECT_THROW(parse_run_config("grid.n = eight\n"), ConfigError);
  EXPECT_THROW(parse_run_config("grid.n 8\n"), ConfigError);
  EXPECT_THROW(parse_run_config("optimizer.grad_tol = 2\n"), ConfigError);
  EXPECT_THROW(parse_run_config("model.variant = other\n"), ConfigError);
  EXPECT_THROW(load_run_config("/nonexistent/run.cfg"), ConfigError);
}

TEST(Export, VtkAndCsv) {
  const Grid grid(4, 2.0);
  const MapField psi = MapField::constant(grid);
  const std::string vtk = vtk_document(grid, {{"psi", &psi.values}});
  EXPECT_EQ(vtk.rfind("# vtk DataFile Version", 0), 0u);
  EXPECT_NE(vtk.find("DATASET STRUCTURED_POINTS"), std::string::npos);
  EXPECT_NE(vtk.find("DIMENSIONS 4 4 4"), std::string::npos);
  EXPECT_NE(vtk.find("POINT_DATA 64"), std::string::npos);
  EXPECT_NE(vtk.find("VECTORS psi double"), std::string::npos);
  LatticeField density(grid, 0, 1);
  const std::string csv = density_csv(density);
  EXPECT_EQ(csv.rfind("i,j,k,x,y,z,density\n", 0), 0u);
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 65);
}

TEST(Cli, ConstantAnsatzHasZeroEnergy) {
  TempDir dir;
  const auto made = run_cli({"ansatz", "--kind", "constant", "--n", "16", "--out", dir / "c.hopf"});
  ASSERT_EQ(made.code, 0) << made.err;
  EXPECT_TRUE(fs::exists(dir / "c_lift.hopf"));
  const auto e = run_cli({"energy", dir / "c.hopf", "--json"});
  ASSERT_EQ(e.code, 0) << e.err;
  EXPECT_EQ(json::parse(e.out).at("total").get<double>(), 0.0);
  const auto text = run_cli({"energy", dir / "c.hopf"});
  EXPECT_NE(text.out.find("total     0"), std::string::npos) << text.out;
  const auto info = run_cli({"info", dir / "c.hopf", "--json"});
  ASSERT_EQ(info.code, 0);
  EXPECT_EQ(json::parse(info.out).at("n"), 16);
}

TEST(Cli, HopfChargeOfAnsatz) {
  TempDir dir;
  ASSERT_EQ(run_cli({"ansatz", "--kind", "hopf", "--charge", "1", "--n", "48", "--out", dir / "h.hopf"}).code, 0);
  const auto r = run_cli({"hopf", dir / "h.hopf", "--json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const json j = json::parse(r.out);
  EXPECT_EQ(j.at("rounded").at(0), 1);
  EXPECT_LE(j.at("deviation").get<double>(), 0.02);
  EXPECT_EQ(j.at("linking"), 1);
  EXPECT_NEAR(j.at("whitehead").get<double>(), 1.0, 0.02);
  const auto d = run_cli({"degree", dir / "h.hopf", "--json"});
  ASSERT_EQ(d.code, 0) << d.err;
  EXPECT_EQ(json::parse(d.out).at("rounded"), 1);
}

TEST(Cli, BadInputsExitTwo) {
  TempDir dir;
  spit(dir / "junk.hopf", "NOPE0000");
  const auto r = run_cli({"info", dir / "junk.hopf"});
  EXPECT_EQ(r.code, 2);
  EXPECT_FALSE(r.err.empty());
  spit(dir / "bad.cfg", "grid.n = 16\nbogus.key = 1\n");
  const auto c = run_cli({"ansatz", "--config", dir / "bad.cfg", "--out", dir / "x.hopf"});
  EXPECT_EQ(c.code, 2);
  EXPECT_NE(c.err.find("bogus.key"), std::string::npos) << c.err;
  EXPECT_EQ(run_cli({"energy"}).code, 2);
  EXPECT_EQ(run_cli({"--help"}).code, 0);
}

TEST(Cli, RelaxHistoryIsByteIdentical) {
  TempDir dir;
  spit(dir / "run.cfg",
       "grid.n = 12\nansatz.kind = hopf\nansatz.noise = 0.1\nseed = 4\n"
       "optimizer.max_iters = 15\noptimizer.checkpoint_every = 5\noptimizer.charge_check_every = 5\n");
  ASSERT_EQ(run_cli({"ansatz", "--config", dir / "run.cfg", "--out", dir / "start.hopf"}).code, 0);
  for (const char* sub : {"a", "b"}) {
    const auto r = run_cli({"relax", dir / "start.hopf", "--config", dir / "run.cfg", "--out-dir", dir / sub});
    ASSERT_EQ(r.code, 0) << r.err;
  }
  const std::string ha = slurp(dir / "a/history.csv");
  EXPECT_EQ(std::count(ha.begin(), ha.end(), '\n'), 17);
  EXPECT_EQ(ha, slurp(dir / "b/history.csv"));
  EXPECT_EQ(slurp(dir / "a/final.hopf"), slurp(dir / "b/final.hopf"));
  EXPECT_TRUE(fs::exists(dir / "a/checkpoint_000005.hopf"));
  EXPECT_TRUE(fs::exists(dir / "a/checkpoint_000010.hopf"));
}

TEST(Cli, ExportWritesFiles) {
  TempDir dir;
  ASSERT_EQ(run_cli({"ansatz", "--kind", "great_circle", "--n", "8", "--out", dir / "g.hopf"}).code, 0);
  const auto r = run_cli({"export", dir / "g.hopf", "--out", dir / "g"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(slurp(dir / "g.vtk").find("VECTORS"), std::string::npos);
  EXPECT_EQ(slurp(dir / "g_density.csv").rfind("i,j,k,x,y,z,density", 0), 0u);
}

TEST(Cli, CheckPassesAndReportsJson) {
  const auto r = run_cli({"check", "--sizes", "16,32,64", "--n", "16", "--json"});
  EXPECT_EQ(r.code, 0) << r.out;
  const json j = json::parse(r.out);
  EXPECT_TRUE(j.at("passed").get<bool>());
  EXPECT_GE(j.at("identities").size(), 26u);
}
