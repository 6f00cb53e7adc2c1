#include "hopf/export.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <stdexcept>

namespace hopf {

std::string vtk_document(const Grid& grid, const std::vector<VectorFieldRef>& fields,
                         const std::string& title) {
  std::string out;
  char buf[256];
  out += "# vtk DataFile Version 3.0\n" + title + "\nASCII\nDATASET STRUCTURED_POINTS\n";
  std::snprintf(buf, sizeof buf, "DIMENSIONS %d %d %d\nORIGIN 0 0 0\nSPACING %.17g %.17g %.17g\n", grid.n,
                grid.n, grid.n, grid.h(), grid.h(), grid.h());
  out += buf;
  std::snprintf(buf, sizeof buf, "POINT_DATA %zu\n", grid.sites());
  out += buf;
  for (const auto& [name, field] : fields) {
    if (!field || field->degree() != 0 || field->dim() < 3)
      throw std::invalid_argument("vtk_document: " + name + " is not a vector-valued 0-form");
    if (!(field->grid() == grid)) throw std::invalid_argument("vtk_document: grid mismatch for " + name);
    out += "VECTORS " + name + " double\n";
    for (std::size_t s = 0; s < grid.sites(); ++s) {
      const double* p = field->at(s);
      std::snprintf(buf, sizeof buf, "%.17g %.17g %.17g\n", p[0], p[1], p[2]);
      out += buf;
    }
  }
  return out;
}

std::string density_csv(const LatticeField& density) {
  if (density.degree() != 0 || density.dim() != 1)
    throw std::invalid_argument("density_csv: scalar 0-form required");
  const Grid& grid = density.grid();
  std::string out = "i,j,k,x,y,z,density\n";
  char buf[256];
  for (std::size_t s = 0; s < grid.sites(); ++s) {
    const auto c = grid.coords(s);
    const auto x = grid.position(s);
    std::snprintf(buf, sizeof buf, "%d,%d,%d,%.17g,%.17g,%.17g,%.17g\n", c[0], c[1], c[2], x[0], x[1], x[2],
                  *density.at(s));
    out += buf;
  }
  return out;
}

void write_text_atomic(const std::string& path, const std::string& text) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + tmp + " for writing");
    out << text;
    if (!out) throw std::runtime_error("write failed: " + tmp);
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace hopf
