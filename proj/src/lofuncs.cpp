// Copyright (c) 2026 biloewner contributors
// SPDX-License-Identifier: Apache-2.0

#include "biloewner/lofuncs.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace biloewner {

SeriesCoefficients phi_coefficients(const BilinearSystem& sys, const GeneratorPair& gen,
                                    int kappa) {
  require_consistent(sys);
  require_consistent(gen);
  if (kappa < 1) throw InvalidArgumentError("phi coefficients: kappa must be >= 1");

  SeriesCoefficients out;
  out.kappa = kappa;
  out.gen = gen;
  out.phi.reserve(gen.rho());
  out.radius.reserve(gen.rho());
  for (Eigen::Index i = 0; i < gen.rho(); ++i) {
    Matrix phi(sys.order(), kappa);
    Vector w = ResolventFactor(sys, gen.lambda(i)).solve(sys.B) * gen.R(i);
    phi.col(0) = w;
    for (int k = 2; k <= kappa; ++k) {
      w = ResolventFactor(sys, double(k) * gen.lambda(i)).solve(Vector(sys.N * w)) * gen.R(i);
      phi.col(k - 1) = w;
    }
    // Radius estimate: max of the last (up to) 3 ratios ||Phi_k||/||Phi_{k+1}||
    // times a 0.5 safety factor. A vanishing next coefficient means the series
    // terminates there, so the guard never trips.
    double radius = std::numeric_limits<double>::infinity();
    if (kappa >= 2) {
      double best = 0.0;
      const int first = std::max(1, kappa - 3);
      for (int k = first; k <= kappa - 1; ++k) {
        const double num = phi.col(k - 1).norm();
        const double den = phi.col(k).norm();
        best = std::max(best, den > 0.0 ? num / den
                                        : std::numeric_limits<double>::infinity());
      }
      radius = kRadiusSafetyFactor * best;
    }
    out.phi.push_back(std::move(phi));
    out.radius.push_back(radius);
  }
  return out;
}

Vector eval_controllability(const SeriesCoefficients& coeffs, const Vector& zeta,
                            bool enforce_radius) {
  const Eigen::Index rho = coeffs.gen.rho();
  if (zeta.size() != rho)
    throw InvalidArgumentError("eval: zeta has length " + std::to_string(zeta.size()) +
                               ", expected " + std::to_string(rho));
  if (enforce_radius)
    for (Eigen::Index i = 0; i < rho; ++i)
      if (std::abs(zeta(i)) > coeffs.radius[i])
        throw OutOfRadiusError(static_cast<int>(i) + 1, std::abs(zeta(i)), coeffs.radius[i]);

  Vector x = Vector::Zero(coeffs.phi[0].rows());
  for (Eigen::Index i = 0; i < rho; ++i) {
    Complex power = 1.0;
    for (int k = 1; k <= coeffs.kappa; ++k) {
      power *= zeta(i);
      x += coeffs.phi[i].col(k - 1) * power;
    }
  }
  return x;
}

std::vector<RowVector> observability_map(const BilinearSystem& sys, const GeneratorPair& gen) {
  require_consistent(sys);
  require_consistent(gen);
  std::vector<RowVector> rows;
  rows.reserve(gen.rho());
  for (Eigen::Index j = 0; j < gen.rho(); ++j) {
    Eigen::FullPivLU<Matrix> lu((gen.mu(j) * sys.E - sys.A).transpose());
    if (!lu.isInvertible()) throw SingularPencilError(gen.mu(j));
    rows.push_back(RowVector(lu.solve(Vector(sys.C.transpose())).transpose()) * gen.L(j));
  }
  return rows;
}

LoewnerFunctionSeries loewner_series(const BilinearSystem& sys, const GeneratorPair& gen,
                                     int kappa) {
  if (kappa < 1) throw InvalidArgumentError("loewner series: kappa must be >= 1");
  for (Eigen::Index i = 0; i < gen.rho(); ++i)
    for (Eigen::Index j = 0; j < gen.rho(); ++j)
      for (int k = 1; k <= kappa; ++k)
        if (is_resonant(gen.lambda(i), gen.mu(j), k))
          throw ResonanceError(static_cast<int>(i) + 1, static_cast<int>(j) + 1, k);

  const SeriesCoefficients coeffs = phi_coefficients(sys, gen, kappa);
  const std::vector<RowVector> obs = observability_map(sys, gen);

  LoewnerFunctionSeries series;
  series.kappa = kappa;
  series.gen = gen;
  series.obs_rows = obs;
  series.pairs.resize(gen.rho());

  for (Eigen::Index j = 0; j < gen.rho(); ++j) {
    series.pairs[j].resize(gen.rho());
    for (Eigen::Index i = 0; i < gen.rho(); ++i) {
      const Matrix& phi = coeffs.phi[i];
      PairSeries p;
      p.loewner.resize(kappa);
      p.wfun.resize(kappa);
      p.shifted.resize(kappa);
      p.vfun.resize(kappa + 1);
      p.vfun[0] = (obs[j] * sys.B)(0);
      for (int k = 1; k <= kappa; ++k) {
        p.loewner[k - 1] = -(obs[j] * (sys.E * phi.col(k - 1)))(0);
        p.wfun[k - 1] = (sys.C * phi.col(k - 1))(0);
        p.shifted[k - 1] = -(obs[j] * (sys.A * phi.col(k - 1)))(0);
        p.vfun[k] = (obs[j] * (sys.N * phi.col(k - 1)))(0);
      }
      // Left-Loewner coefficients from the order-by-order solution of its
      // defining PDE: (k lambda - mu) Ll_k = -(V R)_k, i.e. denominators
      // (mu - k lambda). The truncated function keeps the kappa+1 term, which
      // exists only off-resonance.
      p.has_boundary = !is_resonant(gen.lambda(i), gen.mu(j), kappa + 1);
      const int top = p.has_boundary ? kappa + 1 : kappa;
      p.left.resize(top);
      p.right.resize(top);
      for (int k = 1; k <= top; ++k) {
        p.left[k - 1] = p.vfun[k - 1] * gen.R(i) / (gen.mu(j) - double(k) * gen.lambda(i));
        p.right[k - 1] = (k <= kappa ? p.loewner[k - 1] : Complex(0.0)) - p.left[k - 1];
      }
      series.pairs[j][i] = std::move(p);
    }
  }
  return series;
}

std::vector<double> pde_residual(const BilinearSystem& sys, const SeriesCoefficients& coeffs,
                                 const std::vector<Vector>& samples, bool enforce_radius) {
  require_consistent(sys);
  const Eigen::Index rho = coeffs.gen.rho();
  std::vector<double> norms;
  norms.reserve(samples.size());
  for (const Vector& zeta : samples) {
    if (zeta.size() != rho) throw InvalidArgumentError("pde residual: zeta has wrong length");
    const Vector x = eval_controllability(coeffs, zeta, enforce_radius);
    // dX/dzeta * Lambda * zeta = sum_i sum_k k lambda_i Phi_k^(i) zeta_i^k
    Vector weighted = Vector::Zero(sys.order());
    Complex r_zeta = 0.0;
    for (Eigen::Index i = 0; i < rho; ++i) {
      Complex power = 1.0;
      for (int k = 1; k <= coeffs.kappa; ++k) {
        power *= zeta(i);
        weighted += coeffs.phi[i].col(k - 1) * (double(k) * coeffs.gen.lambda(i) * power);
      }
      r_zeta += coeffs.gen.R(i) * zeta(i);
    }
    const Vector residual = sys.E * weighted - sys.A * x - (sys.N * x + sys.B) * r_zeta;
    norms.push_back(residual.norm());
  }
  return norms;
}

EquivalenceReport compare_series(const LoewnerFunctionSeries& a, const LoewnerFunctionSeries& b,
                                 double tol) {
  if (a.gen.rho() != b.gen.rho())
    throw InvalidArgumentError("compare: series have different generator sizes");
  EquivalenceReport report;
  report.kappa = std::min(a.kappa, b.kappa);
  report.tol = tol;
  report.pass = true;

  const Eigen::Index rho = a.gen.rho();
  for (Eigen::Index j = 0; j < rho; ++j) {
    for (Eigen::Index i = 0; i < rho; ++i) {
      const PairSeries& pa = a.pairs[j][i];
      const PairSeries& pb = b.pairs[j][i];
      // Scale of the pair: largest compared coefficient magnitude. A delta
      // that is negligible against this scale passes even when the
      // coefficient itself is a near-zero cancellation.
      double scale = 0.0;
      for (int k = 1; k <= report.kappa; ++k)
        scale = std::max({scale, std::abs(pa.left[k - 1]), std::abs(pb.left[k - 1]),
                          std::abs(pa.right[k - 1]), std::abs(pb.right[k - 1])});
      for (int k = 1; k <= report.kappa; ++k) {
        EquivalenceReport::Entry e;
        e.i = static_cast<int>(i) + 1;
        e.j = static_cast<int>(j) + 1;
        e.k = k;
        e.left_a = pa.left[k - 1];
        e.left_b = pb.left[k - 1];
        e.right_a = pa.right[k - 1];
        e.right_b = pb.right[k - 1];
        e.abs_left = std::abs(e.left_a - e.left_b);
        e.abs_right = std::abs(e.right_a - e.right_b);
        const double dl = std::max(std::abs(e.left_a), std::abs(e.left_b));
        const double dr = std::max(std::abs(e.right_a), std::abs(e.right_b));
        e.rel_left = dl > 0.0 ? e.abs_left / dl : 0.0;
        e.rel_right = dr > 0.0 ? e.abs_right / dr : 0.0;
        const bool ok_left = e.rel_left <= tol || e.abs_left <= tol * scale;
        const bool ok_right = e.rel_right <= tol || e.abs_right <= tol * scale;
        if (!(ok_left && ok_right)) report.pass = false;
        report.max_abs = std::max({report.max_abs, e.abs_left, e.abs_right});
        report.max_rel = std::max({report.max_rel, e.rel_left, e.rel_right});
        report.entries.push_back(std::move(e));
      }
    }
  }
  return report;
}

EquivalenceReport kappa_equivalence(const BilinearSystem& sys_a, const BilinearSystem& sys_b,
                                    const GeneratorPair& gen, int kappa, double tol) {
  return compare_series(loewner_series(sys_a, gen, kappa), loewner_series(sys_b, gen, kappa),
                        tol);
}

}  // namespace biloewner
