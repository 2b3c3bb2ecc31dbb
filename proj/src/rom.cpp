// Copyright (c) 2026 biloewner contributors
// SPDX-License-Identifier: Apache-2.0

#include "biloewner/rom.hpp"

#include <cmath>
#include <random>

namespace biloewner {

MomentMatchingROM build_mm_rom(const BilinearSystem& sys, const GeneratorPair& gen, int kappa) {
  MomentMatchingROM rom;
  rom.data = assemble_loewner(sys, moment_tuples(gen, kappa));
  rom.kappa = kappa;
  rom.gen = gen;
  // Moment tuples force these shapes; anything else is a construction bug.
  const Eigen::Index rho = gen.rho();
  if (rom.data.rows() != rho || rom.data.cols() != rho * kappa)
    throw InvalidArgumentError("mm rom: unexpected Loewner data shape");
  return rom;
}

PolyMap poly_map(int kappa, Eigen::Index rho, const Vector& zeta) {
  if (kappa < 1) throw InvalidArgumentError("poly map: kappa must be >= 1");
  if (zeta.size() != rho) throw InvalidArgumentError("poly map: zeta has wrong length");
  PolyMap out;
  out.value = Vector::Zero(rho * kappa);
  out.jacobian = Matrix::Zero(rho * kappa, rho);
  for (Eigen::Index i = 0; i < rho; ++i) {
    Complex power = 1.0;
    for (int k = 1; k <= kappa; ++k) {
      out.jacobian(i * kappa + k - 1, i) = double(k) * power;  // k zeta^{k-1}
      power *= zeta(i);
      out.value(i * kappa + k - 1) = power;
    }
  }
  return out;
}

Vector mm_rhs(const MomentMatchingROM& rom, const Vector& x, Complex u) {
  const PolyMap map = poly_map(rom.kappa, rom.rho(), x);
  const Matrix mass = rom.data.Lw * map.jacobian;
  Eigen::PartialPivLU<Matrix> lu(mass);
  const double rc = lu.rcond();
  if (!(rc > 1.0 / kMassConditionLimit))
    throw SingularMassError("mass matrix is singular to working precision");
  const Vector rhs =
      rom.data.Lws * map.value - (rom.data.T * map.value + rom.data.V) * u;
  return lu.solve(rhs);
}

Complex mm_output(const MomentMatchingROM& rom, const Vector& x) {
  return (rom.data.W * poly_map(rom.kappa, rom.rho(), x).value)(0);
}

LoewnerFunctionSeries mm_series(const MomentMatchingROM& rom) {
  const GeneratorPair& gen = rom.gen;
  const int kappa = rom.kappa;
  LoewnerFunctionSeries series;
  series.kappa = kappa;
  series.gen = gen;
  series.pairs.resize(gen.rho());
  for (Eigen::Index j = 0; j < gen.rho(); ++j) {
    series.pairs[j].resize(gen.rho());
    for (Eigen::Index i = 0; i < gen.rho(); ++i) {
      PairSeries p;
      p.loewner.resize(kappa);
      p.wfun.resize(kappa);
      p.shifted.resize(kappa);
      p.vfun.resize(kappa + 1);
      // The data entries are the plain (unweighted) chain products; the
      // generator weights enter as L_j and R_i^k, exactly as in the series
      // built from a realization.
      p.vfun[0] = gen.L(j) * rom.data.V(j);
      Complex r_power = 1.0;
      for (int k = 1; k <= kappa; ++k) {
        r_power *= gen.R(i);
        const Eigen::Index col = i * kappa + k - 1;
        p.loewner[k - 1] = gen.L(j) * r_power * rom.data.Lw(j, col);
        p.wfun[k - 1] = r_power * rom.data.W(col);
        p.shifted[k - 1] = gen.L(j) * r_power * rom.data.Lws(j, col);
        p.vfun[k] = gen.L(j) * r_power * rom.data.T(j, col);
      }
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

BridgeReport kappa1_bridge_check(const BilinearSystem& sys, const GeneratorPair& gen,
                                 int samples, double tol, std::uint64_t seed) {
  const MomentMatchingROM mm = build_mm_rom(sys, gen, 1);
  const BilinearSystem blf = blf_rom(assemble_loewner(sys, blf_tuples(gen, 1)));

  Eigen::PartialPivLU<Matrix> elu(blf.E);
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> dist(0.0, 0.5);
  auto draw = [&] { return Complex(dist(rng), dist(rng)); };

  BridgeReport report;
  report.samples = samples;
  report.tol = tol;
  for (int s = 0; s < samples; ++s) {
    Vector x(gen.rho());
    for (Eigen::Index i = 0; i < x.size(); ++i) x(i) = draw();
    const Complex u = draw();
    const Vector f_blf = elu.solve(Vector(blf.A * x + blf.N * x * u + blf.B * u));
    const Vector f_mm = mm_rhs(mm, x, u);
    const double fd = std::max(f_blf.norm(), f_mm.norm());
    report.max_field_rel =
        std::max(report.max_field_rel, fd > 0.0 ? (f_blf - f_mm).norm() / fd : 0.0);
    const Complex y_blf = (blf.C * x)(0);
    const Complex y_mm = mm_output(mm, x);
    const double yd = std::max(std::abs(y_blf), std::abs(y_mm));
    report.max_output_rel =
        std::max(report.max_output_rel, yd > 0.0 ? std::abs(y_blf - y_mm) / yd : 0.0);
  }
  report.pass = report.max_field_rel <= tol && report.max_output_rel <= tol;
  return report;
}

}  // namespace biloewner
