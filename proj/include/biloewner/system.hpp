// Copyright (c) 2026 biloewner contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Dense>
#include <complex>
#include <limits>
#include <string>
#include <vector>

#include "biloewner/errors.hpp"

namespace biloewner {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RowVector = Eigen::RowVectorXcd;

// Shared numeric policy. All arithmetic is complex double precision, even for
// real input data: interpolation points live on the imaginary axis.
inline constexpr double kResonanceRelTol = 1e-10;
inline constexpr double kDefaultSvdRelTol = 1e-10;
inline constexpr int kDefaultMaxChainLevel = 12;
inline constexpr double kMassConditionLimit = 1e12;
inline constexpr int kDefaultResonanceScanOrder = 32;
inline constexpr double kRadiusSafetyFactor = 0.5;
inline constexpr double kDefaultDt = 1e-3;
inline constexpr double kDefaultTransientFraction = 0.8;

/// Descriptor bilinear realization  E x' = A x + N x u + B u,  y = C x.
/// Represents both full models and reduced-order models. Immutable by
/// convention after construction; all operations are pure functions.
struct BilinearSystem {
  Matrix E;    // n x n
  Matrix A;    // n x n
  Matrix N;    // n x n
  Vector B;    // n
  RowVector C; // 1 x n

  Eigen::Index order() const { return E.rows(); }
};

/// Interpolation/generator data: diagonal input generator (lambda, R) and
/// diagonal observer generator (mu, L), both of size rho.
struct GeneratorPair {
  Vector lambda; // rho, pairwise distinct
  Vector R;      // rho
  Vector mu;     // rho, pairwise distinct
  Vector L;      // rho
  // When set, validation requires every lambda and mu to be purely imaginary
  // (steady-state assumption); unset allows arbitrary interpolation points.
  bool strict_imaginary = false;

  Eigen::Index rho() const { return lambda.size(); }
};

/// Outcome of validate_system. errors empty => system usable downstream.
struct ValidationReport {
  std::vector<std::string> errors;
  std::vector<std::string> warnings;
  // max Re eig(E^{-1} A) when E is invertible, NaN otherwise.
  double spectral_abscissa = std::numeric_limits<double>::quiet_NaN();

  bool ok() const { return errors.empty(); }
};

/// Throws InvalidArgumentError on any dimension mismatch.
void require_consistent(const BilinearSystem& sys);
void require_consistent(const GeneratorPair& gen);

/// |k*lambda - mu| < kResonanceRelTol * max(1, |mu|).
bool is_resonant(Complex lambda, Complex mu, int k);

/// Collects dimension errors, singular-pencil errors, stability/resonance
/// warnings. Never throws; always returns a report.
ValidationReport validate_system(const BilinearSystem& sys, const GeneratorPair* gen = nullptr,
                                 int kappa_max = kDefaultResonanceScanOrder);

/// Factorization of (sE - A). The contract is a backward-stable solve; chains
/// of resolvent applications reuse the factor instead of materializing
/// inverses.
class ResolventFactor {
 public:
  ResolventFactor(const BilinearSystem& sys, Complex s);

  Vector solve(const Vector& b) const { return lu_.solve(b); }
  Matrix solve(const Matrix& b) const { return lu_.solve(b); }
  Complex shift() const { return s_; }

 private:
  Eigen::FullPivLU<Matrix> lu_;
  Complex s_;
};

/// Phi(s) = (sE - A)^{-1}, materialized (desk scale only; internals use
/// ResolventFactor on vectors). Throws SingularPencilError.
Matrix resolvent(const BilinearSystem& sys, Complex s);

}  // namespace biloewner
