// Copyright (c) 2026 biloewner contributors
// SPDX-License-Identifier: Apache-2.0

#include "biloewner/pencil.hpp"

#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <random>

#include "biloewner/volterra.hpp"

namespace biloewner {

Eigen::Index MultiTupleSet::total_rows() const {
  Eigen::Index q = 0;
  for (const auto& t : left) q += t.depth();
  return q;
}

Eigen::Index MultiTupleSet::total_cols() const {
  Eigen::Index k = 0;
  for (const auto& t : right) k += t.depth();
  return k;
}

Eigen::Index LoewnerData::col_offset(std::size_t i) const {
  Eigen::Index off = 0;
  for (std::size_t c = 0; c < i; ++c) off += tuples.right[c].depth();
  return off;
}

Eigen::Index LoewnerData::row_offset(std::size_t j) const {
  Eigen::Index off = 0;
  for (std::size_t r = 0; r < j; ++r) off += tuples.left[r].depth();
  return off;
}

MultiTupleSet moment_tuples(const GeneratorPair& gen, int kappa) {
  require_consistent(gen);
  if (kappa < 1) throw InvalidArgumentError("moment tuples: kappa must be >= 1");
  for (Eigen::Index i = 0; i < gen.rho(); ++i)
    for (Eigen::Index j = 0; j < gen.rho(); ++j)
      for (int k = 1; k <= kappa; ++k)
        if (is_resonant(gen.lambda(i), gen.mu(j), k))
          throw ResonanceError(static_cast<int>(i) + 1, static_cast<int>(j) + 1, k);

  MultiTupleSet set;
  for (Eigen::Index j = 0; j < gen.rho(); ++j) set.left.push_back({{gen.mu(j)}});
  for (Eigen::Index i = 0; i < gen.rho(); ++i) {
    MultiTuple t;
    for (int k = kappa; k >= 1; --k) t.points.push_back(double(k) * gen.lambda(i));
    set.right.push_back(std::move(t));
  }
  return set;
}

MultiTupleSet blf_tuples(const GeneratorPair& gen, int kappa) {
  MultiTupleSet set = moment_tuples(gen, kappa);
  set.left.clear();
  for (Eigen::Index j = 0; j < gen.rho(); ++j) {
    MultiTuple t;
    for (int k = 1; k <= kappa; ++k) t.points.push_back(double(k) * gen.mu(j));
    set.left.push_back(std::move(t));
  }
  return set;
}

Matrix reachability_block(const BilinearSystem& sys, const MultiTuple& right_tuple) {
  require_consistent(sys);
  const int d = right_tuple.depth();
  if (d < 1) throw InvalidArgumentError("reachability block: empty tuple");
  Matrix block(sys.order(), d);
  // Innermost frequency (last entry) is applied to B first; each further
  // depth reuses the running vector and adds one solve.
  Vector w = ResolventFactor(sys, right_tuple.points[d - 1]).solve(sys.B);
  block.col(0) = w;
  for (int m = 1; m < d; ++m) {
    w = ResolventFactor(sys, right_tuple.points[d - 1 - m]).solve(Vector(sys.N * w));
    block.col(m) = w;
  }
  return block;
}

namespace {

// Row-shape solve: r (sE - A)^{-1} as solve of the transposed system. Plain
// transpose, not adjoint: ((sE - A)^T)^{-1} = ((sE - A)^{-1})^T.
RowVector solve_from_left(const BilinearSystem& sys, Complex s, const RowVector& r) {
  Eigen::FullPivLU<Matrix> lu((s * sys.E - sys.A).transpose());
  if (!lu.isInvertible()) throw SingularPencilError(s);
  return lu.solve(Vector(r.transpose())).transpose();
}

}  // namespace

Matrix observability_block(const BilinearSystem& sys, const MultiTuple& left_tuple) {
  require_consistent(sys);
  const int d = left_tuple.depth();
  if (d < 1) throw InvalidArgumentError("observability block: empty tuple");
  Matrix block(d, sys.order());
  RowVector r = solve_from_left(sys, left_tuple.points[0], sys.C);
  block.row(0) = r;
  for (int m = 1; m < d; ++m) {
    r = solve_from_left(sys, left_tuple.points[m], RowVector(r * sys.N));
    block.row(m) = r;
  }
  return block;
}

LoewnerData assemble_loewner(const BilinearSystem& sys, const MultiTupleSet& tuples) {
  require_consistent(sys);
  if (tuples.left.empty() || tuples.right.empty())
    throw InvalidArgumentError("assemble: left and right tuple lists must be nonempty");

  const Eigen::Index n = sys.order();
  const Eigen::Index q = tuples.total_rows();
  const Eigen::Index k = tuples.total_cols();

  Matrix O(q, n);
  Eigen::Index row = 0;
  for (const auto& t : tuples.left) {
    O.middleRows(row, t.depth()) = observability_block(sys, t);
    row += t.depth();
  }
  Matrix R(n, k);
  Eigen::Index col = 0;
  for (const auto& t : tuples.right) {
    R.middleCols(col, t.depth()) = reachability_block(sys, t);
    col += t.depth();
  }

  LoewnerData data;
  data.Lw = -(O * (sys.E * R));
  data.Lws = -(O * (sys.A * R));
  data.V = O * sys.B;
  data.W = sys.C * R;
  data.T = O * (sys.N * R);
  data.O = std::move(O);
  data.R = std::move(R);
  data.tuples = tuples;
  return data;
}

namespace {

// Regularity probe for the pencil (Lw, Lws): full rank of s*Lw - Lws at any
// of 3 pseudo-random shifts. Deterministic seed for reproducible runs.
bool loewner_pencil_is_regular(const Matrix& Lw, const Matrix& Lws) {
  std::mt19937_64 rng(0x10e3u);
  std::uniform_real_distribution<double> dist(-2.0, 2.0);
  const double scale = std::max(1.0, Lws.norm() / std::max(Lw.norm(), 1e-300));
  for (int probe = 0; probe < 3; ++probe) {
    const Complex s = scale * Complex(dist(rng), dist(rng));
    Eigen::FullPivLU<Matrix> lu(s * Lw - Lws);
    if (lu.isInvertible()) return true;
  }
  return false;
}

Eigen::Index count_above(const Eigen::VectorXd& sigma, double rel_tol) {
  if (sigma.size() == 0 || sigma(0) <= 0.0) return 0;
  const double cut = rel_tol * sigma(0);
  Eigen::Index r = 0;
  while (r < sigma.size() && sigma(r) > cut) ++r;
  return r;
}

}  // namespace

BilinearSystem blf_rom(const LoewnerData& data, double svd_rel_tol,
                       std::optional<int> max_order) {
  const Eigen::Index q = data.rows();
  const Eigen::Index k = data.cols();
  if (q < 1 || k < 1) throw InvalidArgumentError("blf rom: empty Loewner data");
  if (svd_rel_tol < 0.0) throw InvalidArgumentError("blf rom: svd_rel_tol must be >= 0");

  const bool order_binds = max_order.has_value() && *max_order < std::min(q, k);
  if (q == k && !order_binds && loewner_pencil_is_regular(data.Lw, data.Lws)) {
    // Regular square pencil: the quintuple itself is the realization.
    return BilinearSystem{-data.Lw, -data.Lws, data.T, data.V, data.W};
  }

  // Redundant data: project onto the dominant row/column spaces of the pencil.
  Matrix row_stack(q, 2 * k);
  row_stack << data.Lw, data.Lws;
  Matrix col_stack(2 * q, k);
  col_stack << data.Lw, data.Lws;

  Eigen::JacobiSVD<Matrix> row_svd(row_stack, Eigen::ComputeThinU);
  Eigen::JacobiSVD<Matrix> col_svd(col_stack, Eigen::ComputeThinV);
  const Eigen::Index r_row = count_above(row_svd.singularValues(), svd_rel_tol);
  const Eigen::Index r_col = count_above(col_svd.singularValues(), svd_rel_tol);
  Eigen::Index r = std::min(r_row, r_col);
  if (max_order.has_value()) r = std::min<Eigen::Index>(r, std::max(0, *max_order));
  if (r < 1) throw DegenerateDataError("all singular values fall below the truncation threshold");

  const Matrix Y = row_svd.matrixU().leftCols(r);
  const Matrix X = col_svd.matrixV().leftCols(r);
  return BilinearSystem{-(Y.adjoint() * data.Lw * X), -(Y.adjoint() * data.Lws * X),
                        Y.adjoint() * data.T * X, Y.adjoint() * data.V, data.W * X};
}

InterpolationReport interpolation_check(const BilinearSystem& full, const BilinearSystem& rom,
                                        const GeneratorPair& gen, int kappa, double tol) {
  require_consistent(gen);
  if (kappa < 1) throw InvalidArgumentError("interpolation check: kappa must be >= 1");
  InterpolationReport report;
  report.tol = tol;
  for (Eigen::Index i = 0; i < gen.rho(); ++i) {
    for (int l = 1; l <= kappa; ++l) {
      std::vector<Complex> chain;
      for (int k = l; k >= 1; --k) chain.push_back(double(k) * gen.lambda(i));
      for (int family = 1; family <= 2; ++family) {
        std::vector<Complex> points = chain;
        if (family == 2) points.insert(points.begin(), gen.mu(i));
        InterpolationReport::Entry entry;
        entry.family = family;
        entry.i = static_cast<int>(i) + 1;
        entry.level = static_cast<int>(points.size());
        entry.points = points;
        entry.h_full = eval_generalized_tf(full, points);
        entry.h_rom = eval_generalized_tf(rom, points);
        const double denom = std::max(std::abs(entry.h_full), std::abs(entry.h_rom));
        entry.rel = denom > 0.0 ? std::abs(entry.h_full - entry.h_rom) / denom : 0.0;
        report.max_rel = std::max(report.max_rel, entry.rel);
        report.entries.push_back(std::move(entry));
      }
    }
  }
  report.pass = report.max_rel <= tol;
  return report;
}

}  // namespace biloewner
