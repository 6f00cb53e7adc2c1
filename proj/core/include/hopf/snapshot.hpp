#pragma once

#include "hopf/fields.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace hopf {

enum class FieldKind { map_s2, lift_su2, potential };
std::string to_string(FieldKind kind);
FieldKind parse_field_kind(const std::string& name);

/// Malformed or unsupported snapshot data.
class SnapshotError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::uint32_t kSnapshotVersion = 1;

/// On disk: "HOPF", u32 LE version, u32 LE metadata length, UTF-8 JSON metadata with
/// sorted keys, then n^3 * components little-endian doubles, site-major with x fastest
/// and components innermost.
struct Snapshot {
  Grid grid;
  FieldKind kind = FieldKind::map_s2;
  int components = 3;
  std::string creation;                 ///< free-form provenance, e.g. the producing command
  std::optional<double> charge;
  std::vector<double> payload;
};

std::vector<std::uint8_t> encode_snapshot(const Snapshot& snap);
/// Throws SnapshotError on bad magic, version, metadata or payload length.
Snapshot decode_snapshot(const std::vector<std::uint8_t>& bytes);

/// Writes to a temporary sibling and renames it into place.
void write_snapshot(const std::string& path, const Snapshot& snap);
Snapshot read_snapshot(const std::string& path);

/// Sphere maps become map_s2; group-valued maps and lifts become lift_su2.
Snapshot make_snapshot(const MapField& psi, std::string creation = {});
Snapshot make_snapshot(const LiftField& u, std::string creation = {});
Snapshot make_snapshot(const PotentialField& a, std::string creation = {});

/// map_s2 gives a sphere map, lift_su2 a group-valued map. Throws SnapshotError otherwise.
MapField to_map_field(const Snapshot& snap);
LiftField to_lift_field(const Snapshot& snap);
PotentialField to_potential_field(const Snapshot& snap);

/// Path of the lift written next to a map snapshot: "dir/name.hopf" -> "dir/name_lift.hopf".
std::string lift_sibling_path(const std::string& path);

}  // namespace hopf
