// Copyright (c) 2026 biloewner contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

#include "biloewner/system.hpp"

namespace biloewner {

/// Power-series coefficients of the tangential controllability function,
/// per generator index i:
///   Phi_1^(i) = (lambda_i E - A)^{-1} B R_i,
///   Phi_k^(i) = (k lambda_i E - A)^{-1} N Phi_{k-1}^(i) R_i  for k > 1.
struct SeriesCoefficients {
  int kappa = 0;
  GeneratorPair gen;
  std::vector<Matrix> phi;     // per i: n x kappa, column k-1 holds Phi_k^(i)
  std::vector<double> radius;  // per i: convergence-radius estimate (may be inf)
};

SeriesCoefficients phi_coefficients(const BilinearSystem& sys, const GeneratorPair& gen,
                                    int kappa);

/// X(zeta) = sum_i sum_{k<=kappa} Phi_k^(i) zeta_i^k. The radius guard is
/// advisory; when enforced, |zeta_i| beyond the estimate raises OutOfRadius.
Vector eval_controllability(const SeriesCoefficients& coeffs, const Vector& zeta,
                            bool enforce_radius = true);

/// Observability rows O_j = L_j C (mu_j E - A)^{-1}, one per generator index.
std::vector<RowVector> observability_map(const BilinearSystem& sys, const GeneratorPair& gen);

/// Scalar series coefficients for one generator index pair (i from the input
/// generator, j from the observer generator). Orders run 1..kappa except
/// vfun (0..kappa) and left/right, which carry the order-(kappa+1) boundary
/// term of the truncated functions when it is off-resonance.
struct PairSeries {
  std::vector<Complex> loewner;  // L_k    = -O_j E Phi_k^(i)
  std::vector<Complex> wfun;     // W_k    =  C Phi_k^(i)
  std::vector<Complex> shifted;  // Ls_k   = -O_j A Phi_k^(i) = mu_j L_k + L_j W_k
  std::vector<Complex> vfun;     // V_0    =  O_j B, V_k = O_j N Phi_k^(i)
  std::vector<Complex> left;     // Ll_k   =  V_{k-1} R_i / (mu_j - k lambda_i)
  std::vector<Complex> right;    // Lr_k   =  L_k - Ll_k; boundary Lr_{kappa+1} = -Ll_{kappa+1}
  bool has_boundary = false;
};

struct LoewnerFunctionSeries {
  int kappa = 0;
  GeneratorPair gen;
  std::vector<RowVector> obs_rows;             // O_j
  std::vector<std::vector<PairSeries>> pairs;  // [j][i]
};

/// Builds all Loewner-function series of a realization at the generator.
/// Hard ResonanceError when k lambda_i == mu_j for some k <= kappa; the
/// kappa+1 boundary term is skipped (per pair) when resonant there.
LoewnerFunctionSeries loewner_series(const BilinearSystem& sys, const GeneratorPair& gen,
                                     int kappa);

/// Euclidean norm of the controllability-PDE residual
///   r(zeta) = E (dX/dzeta) Lambda zeta - A X(zeta) - (N X(zeta) + B) R zeta
/// at each sample, with X the truncated series. For rho = 1 this is exactly
/// the tail term -(N Phi_kappa R) zeta^{kappa+1}; for rho > 1 the bilinear
/// cross terms between components are measured, not cancelled.
std::vector<double> pde_residual(const BilinearSystem& sys, const SeriesCoefficients& coeffs,
                                 const std::vector<Vector>& samples, bool enforce_radius = true);

/// Per-coefficient comparison of left- and right-Loewner series (orders up to
/// the common kappa). Derivatives at zero reduce to coefficients, so this is
/// the kappa-Loewner-equivalence test of the two underlying systems.
struct EquivalenceReport {
  struct Entry {
    int i = 0;  // 1-based
    int j = 0;  // 1-based
    int k = 1;
    Complex left_a, left_b, right_a, right_b;
    double abs_left = 0.0, rel_left = 0.0;
    double abs_right = 0.0, rel_right = 0.0;
  };
  std::vector<Entry> entries;
  int kappa = 0;
  double tol = 0.0;
  double max_abs = 0.0;
  double max_rel = 0.0;
  bool pass = false;
};

EquivalenceReport compare_series(const LoewnerFunctionSeries& a, const LoewnerFunctionSeries& b,
                                 double tol);

EquivalenceReport kappa_equivalence(const BilinearSystem& sys_a, const BilinearSystem& sys_b,
                                    const GeneratorPair& gen, int kappa, double tol);

}  // namespace biloewner
