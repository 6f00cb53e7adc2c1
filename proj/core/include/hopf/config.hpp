#pragma once

#include "hopf/ansatz.hpp"
#include "hopf/energy.hpp"
#include "hopf/minimize.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>

namespace hopf {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Run settings read from `key = value` lines; `#` starts a comment.
struct RunConfig {
  int grid_n = 32;                              ///< grid.n
  double grid_length = 6.283185307179586;       ///< grid.length
  std::string model_pair = "su2_u1";            ///< model.pair: su2_u1 | su2_group | su3_flag
  EnergyVariant model_variant = EnergyVariant::coisotropy;  ///< model.variant
  AnsatzKind ansatz_kind = AnsatzKind::hopf;    ///< ansatz.kind
  int ansatz_charge = 1;                        ///< ansatz.charge
  double ansatz_noise = 0.0;                    ///< ansatz.noise
  RelaxConfig optimizer;                        ///< optimizer.<field>
  std::string output_dir = ".";                 ///< output.dir
  std::uint64_t seed = 0;                       ///< seed

  Grid grid() const { return Grid(grid_n, grid_length); }
};

/// Throws ConfigError on syntax errors, unknown keys, duplicate keys or bad values.
RunConfig parse_run_config(const std::string& text);
RunConfig load_run_config(const std::string& path);

/// The configuration as a document that parse_run_config reads back to the same values.
std::string to_text(const RunConfig& cfg);

}  // namespace hopf
