#include "hopf/snapshot.hpp"

#include "json.hpp"

#include <bit>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <iterator>

namespace hopf {

namespace {

constexpr char kMagic[4] = {'H', 'O', 'P', 'F'};

template <class T>
T to_little(T v) {
  if constexpr (std::endian::native == std::endian::big) {
    unsigned char b[sizeof(T)];
    std::memcpy(b, &v, sizeof(T));
    for (std::size_t i = 0; i < sizeof(T) / 2; ++i) std::swap(b[i], b[sizeof(T) - 1 - i]);
    std::memcpy(&v, b, sizeof(T));
  }
  return v;
}

void put_u32(std::vector<std::uint8_t>& out, std::uint32_t v) {
  v = to_little(v);
  const auto* p = reinterpret_cast<const std::uint8_t*>(&v);
  out.insert(out.end(), p, p + 4);
}

std::uint32_t get_u32(const std::uint8_t* p) {
  std::uint32_t v;
  std::memcpy(&v, p, 4);
  return to_little(v);
}

int expected_components(FieldKind kind) {
  switch (kind) {
    case FieldKind::map_s2: return 3;
    case FieldKind::lift_su2: return 4;
    case FieldKind::potential: return 9;
  }
  return 0;
}

Snapshot from_field(const LatticeField& f, FieldKind kind, std::string creation) {
  Snapshot s;
  s.grid = f.grid();
  s.kind = kind;
  s.components = f.slots() * f.dim();
  s.creation = std::move(creation);
  s.payload = f.data();
  return s;
}

void require_kind(const Snapshot& s, FieldKind kind) {
  if (s.kind != kind)
    throw SnapshotError("snapshot holds " + to_string(s.kind) + ", expected " + to_string(kind));
}

}  // namespace

std::string to_string(FieldKind kind) {
  switch (kind) {
    case FieldKind::map_s2: return "map_s2";
    case FieldKind::lift_su2: return "lift_su2";
    case FieldKind::potential: return "potential";
  }
  return "?";
}

FieldKind parse_field_kind(const std::string& name) {
  if (name == "map_s2") return FieldKind::map_s2;
  if (name == "lift_su2") return FieldKind::lift_su2;
  if (name == "potential") return FieldKind::potential;
  throw SnapshotError("unknown field kind: " + name);
}

std::vector<std::uint8_t> encode_snapshot(const Snapshot& snap) {
  if (snap.components != expected_components(snap.kind))
    throw SnapshotError("component count does not match field kind");
  if (snap.payload.size() != snap.grid.sites() * static_cast<std::size_t>(snap.components))
    throw SnapshotError("payload size does not match grid and component count");

  nlohmann::json meta;
  meta["n"] = snap.grid.n;
  meta["length"] = snap.grid.length;
  meta["kind"] = to_string(snap.kind);
  meta["components"] = snap.components;
  meta["creation"] = snap.creation;
  meta["charge"] = snap.charge ? nlohmann::json(*snap.charge) : nlohmann::json(nullptr);
  const std::string text = meta.dump();

  std::vector<std::uint8_t> out;
  out.reserve(12 + text.size() + 8 * snap.payload.size());
  out.insert(out.end(), kMagic, kMagic + 4);
  put_u32(out, kSnapshotVersion);
  put_u32(out, static_cast<std::uint32_t>(text.size()));
  out.insert(out.end(), text.begin(), text.end());
  const std::size_t base = out.size();
  out.resize(base + 8 * snap.payload.size());
  for (std::size_t i = 0; i < snap.payload.size(); ++i) {
    const double v = to_little(snap.payload[i]);
    std::memcpy(out.data() + base + 8 * i, &v, 8);
  }
  return out;
}

Snapshot decode_snapshot(const std::vector<std::uint8_t>& bytes) {
  if (bytes.size() < 12 || std::memcmp(bytes.data(), kMagic, 4) != 0)
    throw SnapshotError("not a snapshot: bad magic");
  const std::uint32_t version = get_u32(bytes.data() + 4);
  if (version != kSnapshotVersion)
    throw SnapshotError("unsupported snapshot version " + std::to_string(version));
  const std::uint32_t meta_len = get_u32(bytes.data() + 8);
  if (bytes.size() < 12 + static_cast<std::size_t>(meta_len))
    throw SnapshotError("truncated snapshot metadata");

  Snapshot s;
  try {
    const auto meta = nlohmann::json::parse(bytes.begin() + 12, bytes.begin() + 12 + meta_len);
    s.grid = Grid(meta.at("n").get<int>(), meta.at("length").get<double>());
    s.kind = parse_field_kind(meta.at("kind").get<std::string>());
    s.components = meta.at("components").get<int>();
    s.creation = meta.value("creation", std::string());
    if (meta.contains("charge") && !meta["charge"].is_null()) s.charge = meta["charge"].get<double>();
  } catch (const SnapshotError&) {
    throw;
  } catch (const std::exception& e) {
    throw SnapshotError(std::string("bad snapshot metadata: ") + e.what());
  }
  if (s.components != expected_components(s.kind))
    throw SnapshotError("component count does not match field kind");

  const std::size_t count = s.grid.sites() * static_cast<std::size_t>(s.components);
  const std::size_t base = 12 + meta_len;
  if (bytes.size() - base != 8 * count) throw SnapshotError("payload length mismatch");
  s.payload.resize(count);
  for (std::size_t i = 0; i < count; ++i) {
    double v;
    std::memcpy(&v, bytes.data() + base + 8 * i, 8);
    s.payload[i] = to_little(v);
  }
  return s;
}

void write_snapshot(const std::string& path, const Snapshot& snap) {
  const std::vector<std::uint8_t> bytes = encode_snapshot(snap);
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + tmp + " for writing");
    out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
    if (!out) throw std::runtime_error("write failed: " + tmp);
  }
  std::filesystem::rename(tmp, path);
}

Snapshot read_snapshot(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw SnapshotError("cannot open " + path);
  std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return decode_snapshot(bytes);
}

Snapshot make_snapshot(const MapField& psi, std::string creation) {
  return from_field(psi.values, psi.target == MapTarget::sphere ? FieldKind::map_s2 : FieldKind::lift_su2,
                    std::move(creation));
}

Snapshot make_snapshot(const LiftField& u, std::string creation) {
  return from_field(u.values, FieldKind::lift_su2, std::move(creation));
}

Snapshot make_snapshot(const PotentialField& a, std::string creation) {
  if (a.a.degree() != 1 || a.a.dim() != 3) throw SnapshotError("potential must be an su2-valued 1-form");
  return from_field(a.a, FieldKind::potential, std::move(creation));
}

MapField to_map_field(const Snapshot& snap) {
  if (snap.kind == FieldKind::potential) throw SnapshotError("snapshot holds a potential, not a map");
  MapField psi(snap.grid, snap.kind == FieldKind::map_s2 ? MapTarget::sphere : MapTarget::group);
  psi.values.data() = snap.payload;
  return psi;
}

LiftField to_lift_field(const Snapshot& snap) {
  require_kind(snap, FieldKind::lift_su2);
  LiftField u(snap.grid);
  u.values.data() = snap.payload;
  return u;
}

PotentialField to_potential_field(const Snapshot& snap) {
  require_kind(snap, FieldKind::potential);
  LatticeField a(snap.grid, 1, 3);
  a.data() = snap.payload;
  return PotentialField(std::move(a));
}

std::string lift_sibling_path(const std::string& path) {
  const std::filesystem::path p(path);
  return (p.parent_path() / (p.stem().string() + "_lift" + p.extension().string())).string();
}

}  // namespace hopf
