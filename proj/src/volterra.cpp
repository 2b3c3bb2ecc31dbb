// Copyright (c) 2026 biloewner contributors
// SPDX-License-Identifier: Apache-2.0

#include "biloewner/volterra.hpp"

#include <string>

#include "biloewner/parallel.hpp"

namespace biloewner {

Complex eval_generalized_tf(const BilinearSystem& sys, std::span<const Complex> points,
                            int max_level) {
  require_consistent(sys);
  const auto l = points.size();
  if (l < 1) throw InvalidArgumentError("tf: at least one point is required");
  if (static_cast<int>(l) > max_level)
    throw InvalidArgumentError("tf: level " + std::to_string(l) + " exceeds the cap of " +
                               std::to_string(max_level));
  // Right-to-left: w = Phi(s_l) B, then w = Phi(s_i) (N w).
  Vector w = ResolventFactor(sys, points[l - 1]).solve(sys.B);
  for (std::size_t idx = l - 1; idx-- > 0;)
    w = ResolventFactor(sys, points[idx]).solve(Vector(sys.N * w));
  return (sys.C * w)(0);
}

std::vector<Complex> eval_tf_grid(const BilinearSystem& sys, int level,
                                  const std::vector<std::vector<Complex>>& grid, int max_level) {
  for (std::size_t g = 0; g < grid.size(); ++g)
    if (static_cast<int>(grid[g].size()) != level)
      throw InvalidArgumentError("tf grid: tuple " + std::to_string(g) + " has length " +
                                 std::to_string(grid[g].size()) + ", expected " +
                                 std::to_string(level));
  std::vector<Complex> values(grid.size());
  parallel_for(grid.size(), [&](std::size_t g) {
    try {
      values[g] = eval_generalized_tf(sys, grid[g], max_level);
    } catch (const SingularPencilError& e) {
      throw SingularPencilError(e.at(), "tuple " + std::to_string(g));
    }
  });
  return values;
}

}  // namespace biloewner
