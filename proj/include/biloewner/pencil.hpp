// Copyright (c) 2026 biloewner contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <vector>

#include "biloewner/system.hpp"

namespace biloewner {

/// One multi-tuple of interpolation frequencies, stored canonically as the
/// deepest tuple (argument order of H_l, outermost first); the shallower
/// members of the nested family are implied. Left tuples imply prefixes
/// (mu_1), (mu_1, mu_2), ...; right tuples imply suffixes ..., (lambda_2,
/// lambda_1), (lambda_1), i.e. the innermost frequency is the last entry.
struct MultiTuple {
  std::vector<Complex> points;

  int depth() const { return static_cast<int>(points.size()); }
};

/// Left and right multi-tuple families. Row count q = sum of left depths,
/// column count k = sum of right depths.
struct MultiTupleSet {
  std::vector<MultiTuple> left;
  std::vector<MultiTuple> right;

  Eigen::Index total_rows() const;
  Eigen::Index total_cols() const;
};

/// Moment-matching tuples: rho left tuples {mu_j} of depth 1 and rho right
/// tuples (kappa*lambda_i, ..., 2*lambda_i, lambda_i) of depth kappa.
/// Hard ResonanceError when k*lambda_i == mu_j for some k <= kappa.
MultiTupleSet moment_tuples(const GeneratorPair& gen, int kappa);

/// Symmetric tuples for the interpolatory bilinear-Loewner ROM: the right
/// family as in moment_tuples, and left tuples extended to the same depth
/// with harmonics (mu_j, 2*mu_j, ..., kappa*mu_j). The resulting Loewner
/// matrices are square (rho*kappa each side), so the pencil is regular for
/// generic data and the ROM keeps order rho*kappa.
MultiTupleSet blf_tuples(const GeneratorPair& gen, int kappa);

/// Columns of the generalized reachability block for one right tuple:
/// c_1 = Phi(lambda_1) B, c_m = Phi(lambda_m) N c_{m-1}. One solve per depth.
Matrix reachability_block(const BilinearSystem& sys, const MultiTuple& right_tuple);

/// Rows of the generalized observability block for one left tuple:
/// r_1 = C Phi(mu_1), r_m = r_{m-1} N Phi(mu_m).
Matrix observability_block(const BilinearSystem& sys, const MultiTuple& left_tuple);

/// Loewner data quintuple plus the generating factors.
///   Lw = -O E R, Lws = -O A R, V = O B, W = C R, T = O N R.
/// O and R are kept so tests can recompute the factored form bit-for-bit.
struct LoewnerData {
  Matrix Lw;     // q x k
  Matrix Lws;    // q x k
  Vector V;      // q
  RowVector W;   // 1 x k
  Matrix T;      // q x k
  Matrix O;      // q x n
  Matrix R;      // n x k
  MultiTupleSet tuples;

  Eigen::Index rows() const { return Lw.rows(); }
  Eigen::Index cols() const { return Lw.cols(); }
  /// First column index of right tuple i inside the concatenated matrices.
  Eigen::Index col_offset(std::size_t i) const;
  /// First row index of left tuple j.
  Eigen::Index row_offset(std::size_t j) const;
};

LoewnerData assemble_loewner(const BilinearSystem& sys, const MultiTupleSet& tuples);

/// Interpolatory ROM from Loewner data. A square regular pencil is returned
/// verbatim as (E_r, A_r, N_r, B_r, C_r) = (-Lw, -Lws, T, V, W); redundant
/// data goes through short SVDs of [Lw Lws] and [Lw; Lws], truncated at
/// svd_rel_tol relative to the largest singular value (and at max_order when
/// given), projecting all five matrices. Throws DegenerateDataError when
/// nothing survives the threshold.
BilinearSystem blf_rom(const LoewnerData& data, double svd_rel_tol = kDefaultSvdRelTol,
                       std::optional<int> max_order = std::nullopt);

/// Check of the two interpolation families tying a ROM to the full model:
///   H_l(l*lambda_i, ..., lambda_i)            for l = 1..kappa
///   H_{l+1}(mu_i, l*lambda_i, ..., lambda_i)  for l = 1..kappa.
struct InterpolationReport {
  struct Entry {
    int family = 0;  // 1 or 2
    int i = 0;       // generator index, 1-based
    int level = 0;   // transfer-function level l
    std::vector<Complex> points;
    Complex h_full;
    Complex h_rom;
    double rel = 0.0;
  };
  std::vector<Entry> entries;
  double max_rel = 0.0;
  double tol = 0.0;
  bool pass = false;
};

InterpolationReport interpolation_check(const BilinearSystem& full, const BilinearSystem& rom,
                                        const GeneratorPair& gen, int kappa, double tol);

}  // namespace biloewner
