// Copyright (c) 2026 biloewner contributors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <random>

#include "biloewner/synth.hpp"
#include "biloewner/system.hpp"
#include "test_util.hpp"

using namespace biloewner;
using biloewner::testing::rel_err;
using biloewner::testing::scalar_gen13;
using biloewner::testing::scalar_s1;

TEST_CASE("validate: scalar stable system is clean") {
  const ValidationReport report = validate_system(scalar_s1());
  CHECK(report.errors.empty());
  CHECK(report.warnings.empty());
  CHECK(report.spectral_abscissa == doctest::Approx(-1.0));
}

TEST_CASE("validate: dimension mismatch is an error") {
  BilinearSystem sys = scalar_s1();
  sys.A = Matrix::Zero(2, 2);
  sys.E = Matrix::Identity(2, 2);
  sys.N = Matrix::Zero(2, 2);
  sys.B = Vector::Zero(3);
  sys.C = RowVector::Zero(2);
  const ValidationReport report = validate_system(sys);
  REQUIRE_FALSE(report.errors.empty());
  CHECK(report.errors[0].find("B has length 3") != std::string::npos);
}

TEST_CASE("validate: resonance 3*lambda == mu is warned") {
  const GeneratorPair gen = scalar_gen13();
  const ValidationReport report = validate_system(scalar_s1(), &gen);
  bool found = false;
  for (const auto& w : report.warnings)
    if (w.find("resonance: 3*lambda[1] == mu[1]") != std::string::npos) found = true;
  CHECK(found);
}

TEST_CASE("validate: unstable system warns, singular pencil errors") {
  BilinearSystem sys = scalar_s1();
  sys.A = Matrix::Constant(1, 1, Complex(0.5));
  ValidationReport report = validate_system(sys);
  CHECK(report.ok());
  REQUIRE_FALSE(report.warnings.empty());
  CHECK(report.spectral_abscissa == doctest::Approx(0.5));

  sys.E = Matrix::Zero(1, 1);
  sys.A = Matrix::Zero(1, 1);
  report = validate_system(sys);
  CHECK_FALSE(report.ok());
}

TEST_CASE("resolvent: scalar and identity cases") {
  CHECK(rel_err(resolvent(scalar_s1(), Complex(1.0))(0, 0), Complex(0.5)) < 1e-15);

  BilinearSystem sys;
  sys.E = Matrix::Identity(2, 2);
  sys.A = Matrix::Zero(2, 2);
  sys.N = Matrix::Zero(2, 2);
  sys.B = Vector::Zero(2);
  sys.C = RowVector::Zero(2);
  CHECK((resolvent(sys, Complex(1.0)) - Matrix::Identity(2, 2)).norm() < 1e-15);
}

TEST_CASE("resolvent: singular shift raises") {
  CHECK_THROWS_AS(resolvent(scalar_s1(), Complex(-1.0)), SingularPencilError);
  try {
    resolvent(scalar_s1(), Complex(-1.0));
  } catch (const SingularPencilError& e) {
    CHECK(e.at() == Complex(-1.0));
    CHECK(std::string(e.what()).find("singular pencil") != std::string::npos);
  }
}

TEST_CASE("resolvent identity on random well-conditioned systems") {
  for (std::uint64_t seed : {11u, 12u, 13u}) {
    for (int n : {3, 10, 20}) {
      const BilinearSystem sys = random_stable_system(seed + n, n);
      const Complex s1(0.7, 1.3), s2(-0.4, 2.1);
      const Matrix phi1 = resolvent(sys, s1);
      const Matrix phi2 = resolvent(sys, s2);
      const Matrix lhs = phi2 * sys.E * phi1;
      const Matrix rhs = (phi1 - phi2) / (s2 - s1);
      CHECK(rel_err(lhs, rhs) < 1e-10);
    }
  }
}

TEST_CASE("resolvent solve matches an independent QR solve") {
  std::mt19937_64 rng(99);
  std::normal_distribution<double> dist;
  for (int n : {4, 9}) {
    const BilinearSystem sys = random_stable_system(500 + n, n);
    Vector b(n);
    for (int i = 0; i < n; ++i) b(i) = Complex(dist(rng), dist(rng));
    const Complex s(0.3, 0.9);
    const Vector x = ResolventFactor(sys, s).solve(b);
    const Vector x_qr = (s * sys.E - sys.A).colPivHouseholderQr().solve(b);
    CHECK(rel_err(x, x_qr) < 1e-12);
  }
}

TEST_CASE("generator invariants: distinctness and strict_imaginary") {
  GeneratorPair gen = scalar_gen13();
  CHECK_NOTHROW(require_consistent(gen));

  GeneratorPair dup;
  dup.lambda = Vector::Constant(2, Complex(0.0, 1.0));
  dup.R = Vector::Constant(2, Complex(1.0));
  dup.mu = Vector(2);
  dup.mu << Complex(0.0, 2.0), Complex(0.0, 3.0);
  dup.L = Vector::Constant(2, Complex(1.0));
  CHECK_THROWS_AS(require_consistent(dup), InvalidArgumentError);

  gen.strict_imaginary = true;  // lambda = 1 has a real part
  const ValidationReport report = validate_system(scalar_s1(), &gen);
  CHECK_FALSE(report.ok());
}
