// Copyright (c) 2026 biloewner contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>

#include "biloewner/lofuncs.hpp"
#include "biloewner/pencil.hpp"

namespace biloewner {

/// Moment-matching reduced model: a rho-dimensional ODE with state-dependent
/// mass, reconstructed deterministically from the Loewner data built on the
/// moment tuples (Lw, Lws, T are rho x rho*kappa; V is rho; W is 1 x
/// rho*kappa). For kappa = 1 it coincides with the bilinear Loewner ROM in
/// descriptor form; for kappa >= 2 it is an ordinary differential equation,
/// not a descriptor model.
struct MomentMatchingROM {
  LoewnerData data;
  int kappa = 0;
  GeneratorPair gen;

  Eigen::Index rho() const { return gen.rho(); }
};

MomentMatchingROM build_mm_rom(const BilinearSystem& sys, const GeneratorPair& gen, int kappa);

/// Stacked monomial map and its jacobian:
///   value = [v(zeta_1); ...; v(zeta_rho)],  v(z) = (z, z^2, ..., z^kappa),
///   jacobian = blockdiag(dv/dzeta_i), shape (rho*kappa) x rho.
struct PolyMap {
  Vector value;
  Matrix jacobian;
};

PolyMap poly_map(int kappa, Eigen::Index rho, const Vector& zeta);

/// Time derivative of the moment-matching model:
///   (Lw J(x)) x' = Lws w(x) - (T w(x) + V) u.
/// Raises SingularMass when the mass matrix condition estimate exceeds 1e12.
Vector mm_rhs(const MomentMatchingROM& rom, const Vector& x, Complex u);

/// y = W w(x).
Complex mm_output(const MomentMatchingROM& rom, const Vector& x);

/// Truncated Loewner-function series of the moment-matching model, read
/// directly off the data matrices (an independent route from the recursion
/// used by loewner_series).
LoewnerFunctionSeries mm_series(const MomentMatchingROM& rom);

/// kappa = 1 bridge: the moment-matching model and the bilinear Loewner ROM
/// built from the same data are one and the same model. Compares vector
/// fields and outputs on a grid of random (x, u) samples.
struct BridgeReport {
  int samples = 0;
  double max_field_rel = 0.0;
  double max_output_rel = 0.0;
  double tol = 0.0;
  bool pass = false;
};

BridgeReport kappa1_bridge_check(const BilinearSystem& sys, const GeneratorPair& gen,
                                 int samples = 100, double tol = 1e-10,
                                 std::uint64_t seed = 0x1b1dull);

}  // namespace biloewner
