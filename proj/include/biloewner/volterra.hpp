// Copyright (c) 2026 biloewner contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <span>
#include <vector>

#include "biloewner/system.hpp"

namespace biloewner {

/// Generalized (Volterra) transfer function
///   H_l(s_1, ..., s_l) = C Phi(s_1) N Phi(s_2) N ... N Phi(s_l) B.
/// Points are passed outermost-first (s_1 multiplies into C last). Evaluated
/// right-to-left with one solve per level; no resolvent products are
/// materialized. Levels beyond max_level are rejected to avoid silent cost
/// blowups.
Complex eval_generalized_tf(const BilinearSystem& sys, std::span<const Complex> points,
                            int max_level = kDefaultMaxChainLevel);

/// Element-wise eval_generalized_tf over a batch of level-l tuples; order
/// preserved, tuples may be evaluated concurrently. A singular pencil is
/// reported with the offending tuple index.
std::vector<Complex> eval_tf_grid(const BilinearSystem& sys, int level,
                                  const std::vector<std::vector<Complex>>& grid,
                                  int max_level = kDefaultMaxChainLevel);

}  // namespace biloewner
