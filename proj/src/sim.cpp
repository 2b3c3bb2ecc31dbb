// Copyright (c) 2026 biloewner contributors
// SPDX-License-Identifier: Apache-2.0

#include "biloewner/sim.hpp"

#include <algorithm>
#include <cmath>
#include <iostream>

namespace biloewner {

std::vector<double> uniform_grid(double t_end, double dt) {
  if (!(dt > 0.0)) throw InvalidArgumentError("grid: dt must be > 0");
  if (!(t_end >= dt)) throw InvalidArgumentError("grid: horizon shorter than one step");
  const auto steps = static_cast<std::size_t>(std::llround(t_end / dt));
  std::vector<double> t(steps + 1);
  for (std::size_t k = 0; k <= steps; ++k) t[k] = double(k) * dt;
  return t;
}

std::vector<Complex> generator_signal(const GeneratorPair& gen, const Vector& zeta0,
                                      const std::vector<double>& t_grid) {
  require_consistent(gen);
  if (zeta0.size() != gen.rho())
    throw InvalidArgumentError("generator signal: zeta0 has wrong length");

  std::vector<Complex> u(t_grid.size(), Complex(0.0));
  for (std::size_t k = 0; k < t_grid.size(); ++k)
    for (Eigen::Index i = 0; i < gen.rho(); ++i)
      u[k] += gen.R(i) * zeta0(i) * std::exp(gen.lambda(i) * t_grid[k]);

  // Conjugate-symmetric mode pairs produce a real signal up to roundoff.
  bool symmetric = true;
  for (Eigen::Index i = 0; i < gen.rho() && symmetric; ++i) {
    const Complex li = gen.lambda(i);
    const Complex ci = gen.R(i) * zeta0(i);
    bool matched = false;
    for (Eigen::Index j = 0; j < gen.rho(); ++j) {
      const Complex lj = gen.lambda(j);
      const Complex cj = gen.R(j) * zeta0(j);
      if (std::abs(lj - std::conj(li)) <= 1e-12 * std::max(1.0, std::abs(li)) &&
          std::abs(cj - std::conj(ci)) <= 1e-12 * std::max(1.0, std::abs(ci))) {
        matched = true;
        break;
      }
    }
    symmetric = matched;
  }
  if (symmetric) {
    double scale = 0.0, residue = 0.0;
    for (const Complex& v : u) {
      scale = std::max(scale, std::abs(v));
      residue = std::max(residue, std::abs(v.imag()));
    }
    if (scale > 0.0 && residue > 1e-12 * scale)
      std::cerr << "warning: zeroing imaginary residue " << residue
                << " of a conjugate-symmetric generator signal\n";
    for (Complex& v : u) v = Complex(v.real(), 0.0);
  }
  return u;
}

namespace {

// Classical RK4 with linear interpolation of u inside each step. rhs(x, u, t)
// must be pure; y(x) is sampled on the grid nodes.
template <typename Rhs, typename Output>
SimulationTrace integrate_rk4(const std::vector<Complex>& u, const Vector& x0, double dt,
                              Rhs&& rhs, Output&& output) {
  if (!(dt > 0.0)) throw InvalidArgumentError("simulate: dt must be > 0");
  if (u.size() < 2) throw InvalidArgumentError("simulate: need at least two input samples");

  SimulationTrace trace;
  trace.state_dim = x0.size();
  trace.t.resize(u.size());
  trace.u = u;
  trace.y.resize(u.size());

  Vector x = x0;
  for (std::size_t k = 0; k < u.size(); ++k) {
    const double t = double(k) * dt;
    trace.t[k] = t;
    if (!x.allFinite()) throw NonFiniteError(t);
    trace.y[k] = output(x);
    if (k + 1 == u.size()) break;
    const Complex u0 = u[k];
    const Complex u1 = u[k + 1];
    const Complex um = 0.5 * (u0 + u1);
    const Vector k1 = rhs(x, u0, t);
    const Vector k2 = rhs(Vector(x + 0.5 * dt * k1), um, t + 0.5 * dt);
    const Vector k3 = rhs(Vector(x + 0.5 * dt * k2), um, t + 0.5 * dt);
    const Vector k4 = rhs(Vector(x + dt * k3), u1, t + dt);
    x += (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
  }
  return trace;
}

}  // namespace

SimulationTrace simulate_bilinear(const BilinearSystem& sys, const std::vector<Complex>& u,
                                  const Vector& x0, double dt) {
  require_consistent(sys);
  if (x0.size() != sys.order()) throw InvalidArgumentError("simulate: x0 has wrong length");
  Eigen::FullPivLU<Matrix> elu(sys.E);
  if (!elu.isInvertible())
    throw SingularPencilError(std::numeric_limits<double>::infinity(),
                              "descriptor integration requires invertible E");
  auto rhs = [&](const Vector& x, Complex uu, double) {
    return Vector(elu.solve(Vector(sys.A * x + sys.N * x * uu + sys.B * uu)));
  };
  auto output = [&](const Vector& x) { return (sys.C * x)(0); };
  return integrate_rk4(u, x0, dt, rhs, output);
}

SimulationTrace simulate_mm(const MomentMatchingROM& rom, const std::vector<Complex>& u,
                            const Vector& x0, double dt) {
  if (x0.size() != rom.rho()) throw InvalidArgumentError("simulate: x0 has wrong length");
  auto rhs = [&](const Vector& x, Complex uu, double t) {
    try {
      return mm_rhs(rom, x, uu);
    } catch (const SingularMassError&) {
      throw SingularMassError("mass matrix is singular to working precision", t);
    }
  };
  auto output = [&](const Vector& x) { return mm_output(rom, x); };
  return integrate_rk4(u, x0, dt, rhs, output);
}

SteadyStateMetrics steady_state_compare(const SimulationTrace& a, const SimulationTrace& b,
                                        double transient_fraction) {
  if (!(transient_fraction > 0.0 && transient_fraction < 1.0))
    throw InvalidArgumentError("compare: transient_fraction must lie in (0, 1)");
  if (a.t.size() != b.t.size()) throw GridMismatchError("traces have different lengths");
  if (a.t.size() < 2) throw GridMismatchError("traces too short");
  const double t_end = a.t.back();
  for (std::size_t k = 0; k < a.t.size(); ++k)
    if (std::abs(a.t[k] - b.t[k]) > 1e-12 * std::max(1.0, std::abs(t_end)))
      throw GridMismatchError("traces have different time grids");

  const double t_start = a.t.front() + transient_fraction * (t_end - a.t.front());
  std::size_t first = 0;
  while (first < a.t.size() && a.t[first] < t_start) ++first;
  if (first >= a.t.size()) first = a.t.size() - 1;

  SteadyStateMetrics m;
  double sum_sq = 0.0, ref_sq = 0.0;
  const std::size_t count = a.t.size() - first;
  for (std::size_t k = first; k < a.t.size(); ++k) {
    const double d = std::abs(a.y[k] - b.y[k]);
    sum_sq += d * d;
    ref_sq += std::norm(a.y[k]);
    m.sup_abs = std::max(m.sup_abs, d);
  }
  m.rms_abs = std::sqrt(sum_sq / double(count));
  const double ref = std::sqrt(ref_sq / double(count));
  if (ref > 0.0) {
    m.rms_rel = m.rms_abs / ref;
  } else {
    m.rms_rel = m.rms_abs;
    m.zero_reference = true;
  }
  return m;
}

}  // namespace biloewner
