// Copyright (c) 2026 biloewner contributors
// SPDX-License-Identifier: Apache-2.0

#include "biloewner/synth.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

namespace biloewner {

namespace {

Matrix random_matrix(std::mt19937_64& rng, int rows, int cols, bool real_valued) {
  std::normal_distribution<double> dist(0.0, 1.0);
  Matrix m(rows, cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c)
      m(r, c) = real_valued ? Complex(dist(rng), 0.0) : Complex(dist(rng), dist(rng));
  return m;
}

}  // namespace

BilinearSystem random_stable_system(std::uint64_t seed, int n, double margin, bool real_valued,
                                    bool descriptor) {
  if (n < 1) throw InvalidArgumentError("random system: n must be >= 1");
  if (!(margin > 0.0)) throw InvalidArgumentError("random system: margin must be > 0");
  std::mt19937_64 rng(seed);

  BilinearSystem sys;
  sys.E = Matrix::Identity(n, n);
  if (descriptor) {
    const Matrix g = random_matrix(rng, n, n, real_valued);
    // ||perturbation||_F < 0.5 keeps E comfortably invertible.
    sys.E += g * (0.4 / std::max(1.0, g.norm()));
  }
  sys.A = random_matrix(rng, n, n, real_valued) / std::sqrt(double(n));
  // Shift so the spectral abscissa of E^{-1}A is exactly -margin.
  const Matrix ea = sys.E.partialPivLu().solve(sys.A);
  const double abscissa = Eigen::ComplexEigenSolver<Matrix>(ea).eigenvalues().real().maxCoeff();
  sys.A -= (abscissa + margin) * sys.E;

  Matrix nmat = random_matrix(rng, n, n, real_valued);
  sys.N = nmat * (0.4 / std::max(1.0, nmat.norm()));
  sys.B = random_matrix(rng, n, 1, real_valued).col(0);
  sys.C = random_matrix(rng, 1, n, real_valued).row(0);
  return sys;
}

GeneratorPair random_imaginary_generator(std::uint64_t seed, int rho, int resonance_guard) {
  if (rho < 1) throw InvalidArgumentError("random generator: rho must be >= 1");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> mag(0.3, 3.0);
  std::uniform_real_distribution<double> phase(0.0, 2.0 * M_PI);
  std::uniform_real_distribution<double> modulus(0.5, 1.5);
  std::uniform_int_distribution<int> coin(0, 1);

  GeneratorPair gen;
  gen.lambda.resize(rho);
  gen.R.resize(rho);
  gen.mu.resize(rho);
  gen.L.resize(rho);

  // Rejection sampling: distinct points, no k*lambda_i near mu_j for
  // k <= resonance_guard + 1 (the +1 covers series boundary terms).
  const double gap = 0.05;
  std::vector<Complex> lambdas, mus;
  auto accept = [&](Complex candidate, bool is_mu) {
    for (const Complex& l : lambdas) {
      if (std::abs(candidate - l) < gap) return false;
      if (is_mu)
        for (int k = 1; k <= resonance_guard + 1; ++k)
          if (std::abs(double(k) * l - candidate) < gap) return false;
    }
    for (const Complex& m : mus) {
      if (std::abs(candidate - m) < gap) return false;
      if (!is_mu)
        for (int k = 1; k <= resonance_guard + 1; ++k)
          if (std::abs(double(k) * candidate - m) < gap) return false;
    }
    return true;
  };
  auto draw_point = [&](bool is_mu) {
    for (int attempt = 0; attempt < 1000; ++attempt) {
      const double sign = coin(rng) == 0 ? 1.0 : -1.0;
      const Complex candidate(0.0, sign * mag(rng));
      if (accept(candidate, is_mu)) return candidate;
    }
    throw InvalidArgumentError("random generator: could not place resonance-free points");
  };

  for (int i = 0; i < rho; ++i) {
    lambdas.push_back(draw_point(false));
    gen.lambda(i) = lambdas.back();
  }
  for (int j = 0; j < rho; ++j) {
    mus.push_back(draw_point(true));
    gen.mu(j) = mus.back();
  }
  for (int i = 0; i < rho; ++i) {
    gen.R(i) = std::polar(modulus(rng), phase(rng));
    gen.L(i) = std::polar(modulus(rng), phase(rng));
  }
  return gen;
}

}  // namespace biloewner
