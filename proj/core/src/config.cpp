#include "hopf/config.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>

namespace hopf {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

template <class T>
T parse_number(const std::string& key, const std::string& value) {
  T out{};
  const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
  if (ec != std::errc() || ptr != value.data() + value.size())
    throw ConfigError("bad value for " + key + ": '" + value + "'");
  return out;
}

template <class F>
auto parse_enum(const std::string& key, const std::string& value, F&& parse) {
  try {
    return parse(value);
  } catch (const std::invalid_argument&) {
    throw ConfigError("bad value for " + key + ": '" + value + "'");
  }
}

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

using Setter = std::function<void(RunConfig&, const std::string&, const std::string&)>;

const std::map<std::string, Setter>& setters() {
  static const std::map<std::string, Setter> table = {
      {"grid.n", [](RunConfig& c, const auto& k, const auto& v) { c.grid_n = parse_number<int>(k, v); }},
      {"grid.length",
       [](RunConfig& c, const auto& k, const auto& v) { c.grid_length = parse_number<double>(k, v); }},
      {"model.pair",
       [](RunConfig& c, const auto& k, const auto& v) {
         if (v != "su2_u1" && v != "su2_group" && v != "su3_flag")
           throw ConfigError("bad value for " + k + ": '" + v + "'");
         c.model_pair = v;
       }},
      {"model.variant",
       [](RunConfig& c, const auto& k, const auto& v) { c.model_variant = parse_enum(k, v, parse_energy_variant); }},
      {"ansatz.kind",
       [](RunConfig& c, const auto& k, const auto& v) { c.ansatz_kind = parse_enum(k, v, parse_ansatz_kind); }},
      {"ansatz.charge",
       [](RunConfig& c, const auto& k, const auto& v) { c.ansatz_charge = parse_number<int>(k, v); }},
      {"ansatz.noise",
       [](RunConfig& c, const auto& k, const auto& v) { c.ansatz_noise = parse_number<double>(k, v); }},
      {"optimizer.max_iters",
       [](RunConfig& c, const auto& k, const auto& v) { c.optimizer.max_iters = parse_number<int>(k, v); }},
      {"optimizer.grad_tol",
       [](RunConfig& c, const auto& k, const auto& v) { c.optimizer.grad_tol = parse_number<double>(k, v); }},
      {"optimizer.step_init",
       [](RunConfig& c, const auto& k, const auto& v) { c.optimizer.step_init = parse_number<double>(k, v); }},
      {"optimizer.step_rule",
       [](RunConfig& c, const auto& k, const auto& v) { c.optimizer.step_rule = parse_enum(k, v, parse_step_rule); }},
      {"optimizer.checkpoint_every",
       [](RunConfig& c, const auto& k, const auto& v) { c.optimizer.checkpoint_every = parse_number<int>(k, v); }},
      {"optimizer.charge_check_every",
       [](RunConfig& c, const auto& k, const auto& v) { c.optimizer.charge_check_every = parse_number<int>(k, v); }},
      {"optimizer.max_move",
       [](RunConfig& c, const auto& k, const auto& v) { c.optimizer.max_move = parse_number<double>(k, v); }},
      {"optimizer.stabilizer",
       [](RunConfig& c, const auto& k, const auto& v) { c.optimizer.stabilizer = parse_number<double>(k, v); }},
      {"output.dir", [](RunConfig& c, const auto&, const auto& v) { c.output_dir = v; }},
      {"seed", [](RunConfig& c, const auto& k, const auto& v) { c.seed = parse_number<std::uint64_t>(k, v); }},
  };
  return table;
}

}  // namespace

RunConfig parse_run_config(const std::string& text) {
  RunConfig cfg;
  std::set<std::string> seen;
  std::istringstream in(text);
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const auto hash = raw.find('#');
    const std::string line = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError("line " + std::to_string(line_no) + ": expected 'key = value'");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    const auto it = setters().find(key);
    if (it == setters().end())
      throw ConfigError("line " + std::to_string(line_no) + ": unknown key '" + key + "'");
    if (!seen.insert(key).second)
      throw ConfigError("line " + std::to_string(line_no) + ": duplicate key '" + key + "'");
    it->second(cfg, key, value);
  }
  if (cfg.grid_n < 4) throw ConfigError("grid.n must be >= 4");
  if (!(cfg.grid_length > 0.0)) throw ConfigError("grid.length must be positive");
  if (cfg.ansatz_noise < 0.0) throw ConfigError("ansatz.noise must be >= 0");
  try {
    cfg.optimizer.validate();
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::string("optimizer: ") + e.what());
  }
  return cfg;
}

RunConfig load_run_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_run_config(buf.str());
}

std::string to_text(const RunConfig& cfg) {
  std::ostringstream out;
  out << "grid.n = " << cfg.grid_n << '\n'
      << "grid.length = " << format_double(cfg.grid_length) << '\n'
      << "model.pair = " << cfg.model_pair << '\n'
      << "model.variant = " << to_string(cfg.model_variant) << '\n'
      << "ansatz.kind = " << to_string(cfg.ansatz_kind) << '\n'
      << "ansatz.charge = " << cfg.ansatz_charge << '\n'
      << "ansatz.noise = " << format_double(cfg.ansatz_noise) << '\n'
      << "optimizer.max_iters = " << cfg.optimizer.max_iters << '\n'
      << "optimizer.grad_tol = " << format_double(cfg.optimizer.grad_tol) << '\n'
      << "optimizer.step_init = " << format_double(cfg.optimizer.step_init) << '\n'
      << "optimizer.step_rule = " << to_string(cfg.optimizer.step_rule) << '\n'
      << "optimizer.checkpoint_every = " << cfg.optimizer.checkpoint_every << '\n'
      << "optimizer.charge_check_every = " << cfg.optimizer.charge_check_every << '\n'
      << "optimizer.max_move = " << format_double(cfg.optimizer.max_move) << '\n'
      << "optimizer.stabilizer = " << format_double(cfg.optimizer.stabilizer) << '\n'
      << "output.dir = " << cfg.output_dir << '\n'
      << "seed = " << cfg.seed << '\n';
  return out.str();
}

}  // namespace hopf
