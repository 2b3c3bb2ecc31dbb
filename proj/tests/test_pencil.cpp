// Copyright (c) 2026 biloewner contributors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include "biloewner/pencil.hpp"
#include "biloewner/volterra.hpp"
#include "biloewner/synth.hpp"
#include "test_util.hpp"

using namespace biloewner;
using biloewner::testing::rel_err;
using biloewner::testing::scalar_gen13;
using biloewner::testing::scalar_s1;

TEST_CASE("moment tuples: nesting, resonance, depth 1") {
  const GeneratorPair gen = scalar_gen13();

  const MultiTupleSet set = moment_tuples(gen, 2);
  REQUIRE(set.left.size() == 1);
  REQUIRE(set.right.size() == 1);
  CHECK(set.left[0].points == std::vector<Complex>{Complex(3.0)});
  CHECK(set.right[0].points == std::vector<Complex>{Complex(2.0), Complex(1.0)});
  CHECK(set.total_rows() == 1);
  CHECK(set.total_cols() == 2);

  try {
    moment_tuples(gen, 3);  // 3*lambda == mu
    FAIL("expected ResonanceError");
  } catch (const ResonanceError& e) {
    CHECK(e.lambda_index() == 1);
    CHECK(e.mu_index() == 1);
    CHECK(e.multiplier() == 3);
  }

  const MultiTupleSet depth1 = moment_tuples(gen, 1);
  for (const auto& t : depth1.right) CHECK(t.depth() == 1);
}

TEST_CASE("blf tuples: symmetric depth with mu harmonics") {
  const GeneratorPair gen = scalar_gen13();
  const MultiTupleSet set = blf_tuples(gen, 2);
  CHECK(set.left[0].points == std::vector<Complex>{Complex(3.0), Complex(6.0)});
  CHECK(set.right[0].points == std::vector<Complex>{Complex(2.0), Complex(1.0)});
  CHECK(set.total_rows() == set.total_cols());
}

TEST_CASE("reachability block: scalar recursion, base case, N = 0") {
  const BilinearSystem sys = scalar_s1();
  const Matrix block = reachability_block(sys, MultiTuple{{Complex(2.0), Complex(1.0)}});
  REQUIRE(block.cols() == 2);
  CHECK(std::abs(block(0, 0) - Complex(0.5)) < 1e-15);
  CHECK(std::abs(block(0, 1) - Complex(1.0 / 6.0)) < 1e-15);

  const Matrix base = reachability_block(sys, MultiTuple{{Complex(5.0)}});
  CHECK(std::abs(base(0, 0) - Complex(1.0 / 6.0)) < 1e-15);

  BilinearSystem linear = sys;
  linear.N.setZero();
  const Matrix zero_tail = reachability_block(linear, MultiTuple{{Complex(2.0), Complex(1.0)}});
  CHECK(std::abs(zero_tail(0, 1)) == 0.0);
}

TEST_CASE("observability block: scalar recursion and C = 0") {
  const BilinearSystem sys = scalar_s1();
  const Matrix row = observability_block(sys, MultiTuple{{Complex(3.0)}});
  CHECK(std::abs(row(0, 0) - Complex(0.25)) < 1e-15);

  const Matrix rows = observability_block(sys, MultiTuple{{Complex(3.0), Complex(2.0)}});
  REQUIRE(rows.rows() == 2);
  CHECK(std::abs(rows(0, 0) - Complex(0.25)) < 1e-15);
  CHECK(std::abs(rows(1, 0) - Complex(1.0 / 12.0)) < 1e-15);

  BilinearSystem silent = sys;
  silent.C.setZero();
  CHECK(observability_block(silent, MultiTuple{{Complex(3.0), Complex(2.0)}}).norm() == 0.0);
}

TEST_CASE("assemble: scalar quintuple and factored recomputation") {
  const BilinearSystem sys = scalar_s1();
  const MultiTupleSet tuples{{MultiTuple{{Complex(3.0)}}}, {MultiTuple{{Complex(1.0)}}}};
  const LoewnerData data = assemble_loewner(sys, tuples);
  CHECK(std::abs(data.Lw(0, 0) - Complex(-0.125)) < 1e-16);
  CHECK(std::abs(data.Lws(0, 0) - Complex(0.125)) < 1e-16);
  CHECK(std::abs(data.V(0) - Complex(0.25)) < 1e-16);
  CHECK(std::abs(data.W(0) - Complex(0.5)) < 1e-16);
  CHECK(std::abs(data.T(0, 0) - Complex(0.125)) < 1e-16);

  // Bit-for-bit recomputation from freshly built factors.
  Matrix O(1, 1), R(1, 1);
  O = observability_block(sys, tuples.left[0]);
  R = reachability_block(sys, tuples.right[0]);
  const Matrix lw = -(O * (sys.E * R));
  CHECK(lw(0, 0) == data.Lw(0, 0));
  CHECK(data.O(0, 0) == O(0, 0));
  CHECK(data.R(0, 0) == R(0, 0));

  CHECK_THROWS_AS(assemble_loewner(sys, MultiTupleSet{{}, tuples.right}), InvalidArgumentError);
}

TEST_CASE("assemble: factored recomputation on a random system") {
  const BilinearSystem sys = random_stable_system(42, 6);
  const GeneratorPair gen = random_imaginary_generator(43, 2);
  const LoewnerData data = assemble_loewner(sys, blf_tuples(gen, 2));
  const Matrix lw = -(data.O * (sys.E * data.R));
  const Matrix lws = -(data.O * (sys.A * data.R));
  CHECK((lw - data.Lw).norm() == 0.0);
  CHECK((lws - data.Lws).norm() == 0.0);
}

TEST_CASE("linear case: Loewner entries are divided differences") {
  // With N = 0 and depth-1 tuples the entries reduce to the classical
  // formulas in H_1.
  BilinearSystem sys = random_stable_system(77, 7);
  sys.N.setZero();
  const GeneratorPair gen = random_imaginary_generator(78, 3);
  const MultiTupleSet tuples = moment_tuples(gen, 1);
  const LoewnerData data = assemble_loewner(sys, tuples);
  for (int j = 0; j < 3; ++j) {
    for (int i = 0; i < 3; ++i) {
      const Complex mu = gen.mu(j);
      const Complex lambda = gen.lambda(i);
      const Complex h_mu = eval_generalized_tf(sys, std::vector<Complex>{mu});
      const Complex h_lambda = eval_generalized_tf(sys, std::vector<Complex>{lambda});
      CHECK(rel_err(data.Lw(j, i), (h_mu - h_lambda) / (mu - lambda)) < 1e-10);
      CHECK(rel_err(data.Lws(j, i), (mu * h_mu - lambda * h_lambda) / (mu - lambda)) < 1e-10);
    }
  }
}

TEST_CASE("blf rom: scalar data reproduces the order-1 realization") {
  const BilinearSystem sys = scalar_s1();
  const MultiTupleSet tuples{{MultiTuple{{Complex(3.0)}}}, {MultiTuple{{Complex(1.0)}}}};
  const LoewnerData data = assemble_loewner(sys, tuples);
  const BilinearSystem rom = blf_rom(data, 0.0);
  CHECK(std::abs(rom.E(0, 0) - Complex(0.125)) < 1e-16);
  CHECK(std::abs(rom.A(0, 0) - Complex(-0.125)) < 1e-16);
  CHECK(std::abs(rom.N(0, 0) - Complex(0.125)) < 1e-16);
  CHECK(std::abs(rom.B(0) - Complex(0.25)) < 1e-16);
  CHECK(std::abs(rom.C(0) - Complex(0.5)) < 1e-16);
  // Its first transfer function is 1/(s+1) everywhere.
  for (const Complex s : {Complex(0.3, 0.1), Complex(-0.5, 2.0), Complex(4.0)})
    CHECK(rel_err(eval_generalized_tf(rom, std::vector<Complex>{s}), 1.0 / (s + 1.0)) < 1e-12);

  // Default tolerance hits the same verbatim path for square regular data.
  const BilinearSystem rom_default = blf_rom(data);
  CHECK(rom_default.E(0, 0) == rom.E(0, 0));
}

TEST_CASE("blf rom: degenerate data raises") {
  LoewnerData zeros;
  zeros.Lw = Matrix::Zero(2, 2);
  zeros.Lws = Matrix::Zero(2, 2);
  zeros.V = Vector::Zero(2);
  zeros.W = RowVector::Zero(2);
  zeros.T = Matrix::Zero(2, 2);
  CHECK_THROWS_AS(blf_rom(zeros, 1e-10), DegenerateDataError);
}

TEST_CASE("blf rom: redundant data falls back to the exact SVD projection") {
  // Scalar original, square kappa=2 data of rank 1: the projected ROM has
  // order 1 and reproduces the original's transfer functions exactly.
  const BilinearSystem sys = scalar_s1();
  const LoewnerData data = assemble_loewner(sys, blf_tuples(scalar_gen13(), 2));
  const BilinearSystem rom = blf_rom(data, 1e-12);
  CHECK(rom.order() == 1);
  const InterpolationReport report =
      interpolation_check(sys, rom, scalar_gen13(), 2, 1e-10);
  CHECK(report.pass);
}

TEST_CASE("blf rom: interpolation property on random systems") {
  for (std::uint64_t seed : {101u, 102u, 103u}) {
    const BilinearSystem sys = random_stable_system(seed, 10);
    for (int rho : {1, 2}) {
      const GeneratorPair gen = random_imaginary_generator(seed + 10 * rho, rho);
      for (int kappa : {1, 2, 3}) {
        const BilinearSystem rom = blf_rom(assemble_loewner(sys, blf_tuples(gen, kappa)), 1e-12);
        CHECK(rom.order() == rho * kappa);
        const InterpolationReport report = interpolation_check(sys, rom, gen, kappa, 1e-8);
        INFO("seed ", seed, " rho ", rho, " kappa ", kappa, " max_rel ", report.max_rel);
        CHECK(report.pass);
      }
    }
  }
}

TEST_CASE("blf rom: max_order forces the SVD path") {
  const BilinearSystem sys = random_stable_system(202, 8);
  const GeneratorPair gen = random_imaginary_generator(203, 2);
  const LoewnerData data = assemble_loewner(sys, blf_tuples(gen, 2));
  const BilinearSystem rom = blf_rom(data, 1e-12, 3);
  CHECK(rom.order() == 3);
}
