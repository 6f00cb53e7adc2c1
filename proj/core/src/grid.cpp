#include "hopf/grid.hpp"

#include <stdexcept>
#include <string>

namespace hopf {

Grid::Grid(int n_, double length_) : n(n_), length(length_) {
  if (n < 4) throw std::invalid_argument("grid needs n >= 4, got " + std::to_string(n));
  if (!(length > 0.0)) throw std::invalid_argument("grid length must be positive");
}

void require_same_grid(const Grid& a, const Grid& b, const char* context) {
  if (!(a == b)) throw std::invalid_argument(std::string(context) + ": grid mismatch");
}

}  // namespace hopf
