// Copyright (c) 2026 biloewner contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

#include "biloewner/rom.hpp"

namespace biloewner {

/// Time-domain record of one simulation: uniform grid, input and output
/// samples. Immutable output of the integrators.
struct SimulationTrace {
  std::vector<double> t;
  std::vector<Complex> u;
  std::vector<Complex> y;
  Eigen::Index state_dim = 0;
};

/// Uniform grid 0, dt, ..., covering [0, t_end].
std::vector<double> uniform_grid(double t_end, double dt);

/// Closed-form generator output u(t) = sum_i R_i zeta0_i exp(lambda_i t)
/// (the generator input Delta is identically zero; excitation is carried by
/// the initial condition). A conjugate-symmetric generator yields a real
/// signal; its imaginary residue is zeroed, with a warning on stderr above
/// 1e-12 relative.
std::vector<Complex> generator_signal(const GeneratorPair& gen, const Vector& zeta0,
                                      const std::vector<double>& t_grid);

/// Fixed-step RK4 on E x' = A x + N x u + B u with u interpolated linearly
/// between samples; y = C x recorded per step. E is factored once.
SimulationTrace simulate_bilinear(const BilinearSystem& sys, const std::vector<Complex>& u,
                                  const Vector& x0, double dt);

/// Same integrator driving the moment-matching model through mm_rhs/mm_output.
SimulationTrace simulate_mm(const MomentMatchingROM& rom, const std::vector<Complex>& u,
                            const Vector& x0, double dt);

/// Trailing-window error metrics between two traces on identical grids. The
/// window is the last (1 - transient_fraction) of the horizon; rms_rel is
/// normalized by the RMS of a's window (zero window => reported as absolute
/// with the flag set).
struct SteadyStateMetrics {
  double rms_abs = 0.0;
  double rms_rel = 0.0;
  double sup_abs = 0.0;
  bool zero_reference = false;
};

SteadyStateMetrics steady_state_compare(const SimulationTrace& a, const SimulationTrace& b,
                                        double transient_fraction = kDefaultTransientFraction);

}  // namespace biloewner
