// Copyright (c) 2026 biloewner contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>

#include "biloewner/system.hpp"

namespace biloewner {

/// Seeded random descriptor bilinear system with well-conditioned E and
/// spectral abscissa exactly -margin. The bilinear coupling is scaled to keep
/// the controllability series converging at desk-scale excitations.
BilinearSystem random_stable_system(std::uint64_t seed, int n, double margin = 0.5,
                                    bool real_valued = false, bool descriptor = true);

/// Seeded generator with distinct imaginary-axis points, kept clear of
/// resonances k*lambda_i == mu_j up to the given order. Weights R, L have
/// moduli in [0.5, 1.5].
GeneratorPair random_imaginary_generator(std::uint64_t seed, int rho, int resonance_guard = 6);

}  // namespace biloewner
