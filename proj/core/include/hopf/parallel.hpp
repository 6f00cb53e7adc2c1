#pragma once

#include "hopf/grid.hpp"

#include <cstddef>
#include <functional>
#include <vector>

namespace hopf {

/// Worker count: HOPF_THREADS if set to a positive integer, else the hardware count.
int worker_count();

/// Runs body(i) for every i in [0, count), split into contiguous blocks across workers.
void parallel_for(int count, const std::function<void(int)>& body);

/// Sum of term(i) over [0, count). Partials are computed per index and then added in
/// index order, so the result does not depend on the worker count.
double ordered_sum(int count, const std::function<double(int)>& term);

/// Component-wise ordered_sum for vector-valued terms of fixed length.
std::vector<double> ordered_sum(int count, int length,
                                const std::function<void(int, double*)>& term);

/// Runs body(site) for every lattice site, one z-slab per task.
template <class F>
void for_each_site(const Grid& grid, F&& body) {
  const std::size_t slab = static_cast<std::size_t>(grid.n) * grid.n;
  parallel_for(grid.n, [&](int z) {
    for (std::size_t s = slab * z; s < slab * (z + 1); ++s) body(s);
  });
}

}  // namespace hopf
