#pragma once

#include "hopf/form.hpp"

#include <string>
#include <utility>
#include <vector>

namespace hopf {

/// A named 0-form with 3 components (or the first 3 of a wider field).
using VectorFieldRef = std::pair<std::string, const LatticeField*>;

/// Legacy ASCII VTK, STRUCTURED_POINTS, one POINT_DATA VECTORS block per field.
std::string vtk_document(const Grid& grid, const std::vector<VectorFieldRef>& fields,
                         const std::string& title = "hopf export");

/// CSV with columns i,j,k,x,y,z,density for a scalar 0-form.
std::string density_csv(const LatticeField& density);

/// Writes text to a temporary sibling and renames it into place.
void write_text_atomic(const std::string& path, const std::string& text);

}  // namespace hopf
