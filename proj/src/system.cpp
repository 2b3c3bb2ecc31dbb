// Copyright (c) 2026 biloewner contributors
// SPDX-License-Identifier: Apache-2.0

#include "biloewner/system.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <random>
#include <sstream>

namespace biloewner {

namespace {

std::string shape(const Matrix& m) {
  std::ostringstream os;
  os << m.rows() << "x" << m.cols();
  return os.str();
}

}  // namespace

void require_consistent(const BilinearSystem& sys) {
  const Eigen::Index n = sys.E.rows();
  if (n < 1) throw InvalidArgumentError("system: state dimension must be >= 1");
  if (sys.E.cols() != n) throw InvalidArgumentError("system: E is not square (" + shape(sys.E) + ")");
  if (sys.A.rows() != n || sys.A.cols() != n)
    throw InvalidArgumentError("system: A has shape " + shape(sys.A) + ", expected " + shape(sys.E));
  if (sys.N.rows() != n || sys.N.cols() != n)
    throw InvalidArgumentError("system: N has shape " + shape(sys.N) + ", expected " + shape(sys.E));
  if (sys.B.size() != n)
    throw InvalidArgumentError("system: B has length " + std::to_string(sys.B.size()) +
                               ", expected " + std::to_string(n));
  if (sys.C.size() != n)
    throw InvalidArgumentError("system: C has length " + std::to_string(sys.C.size()) +
                               ", expected " + std::to_string(n));
}

void require_consistent(const GeneratorPair& gen) {
  const Eigen::Index rho = gen.lambda.size();
  if (rho < 1) throw InvalidArgumentError("generator: rho must be >= 1");
  if (gen.R.size() != rho || gen.mu.size() != rho || gen.L.size() != rho)
    throw InvalidArgumentError("generator: lambda, R, mu, L must all have length rho");
  for (Eigen::Index i = 0; i < rho; ++i)
    for (Eigen::Index j = i + 1; j < rho; ++j) {
      if (gen.lambda(i) == gen.lambda(j))
        throw InvalidArgumentError("generator: lambda entries must be pairwise distinct");
      if (gen.mu(i) == gen.mu(j))
        throw InvalidArgumentError("generator: mu entries must be pairwise distinct");
    }
}

bool is_resonant(Complex lambda, Complex mu, int k) {
  return std::abs(double(k) * lambda - mu) < kResonanceRelTol * std::max(1.0, std::abs(mu));
}

namespace {

// Pencil regularity probe: det(sE - A) at 3 pseudo-random points; all
// rank-deficient => singular pencil. Deterministic seed so validation reports
// are reproducible.
bool pencil_is_regular(const BilinearSystem& sys) {
  std::mt19937_64 rng(0x1009u);
  std::uniform_real_distribution<double> dist(-2.0, 2.0);
  const double scale = std::max(1.0, sys.A.norm() / std::max(1.0, sys.E.norm()));
  for (int probe = 0; probe < 3; ++probe) {
    const Complex s = scale * Complex(dist(rng), dist(rng));
    Eigen::FullPivLU<Matrix> lu(s * sys.E - sys.A);
    if (lu.isInvertible()) return true;
  }
  return false;
}

void append_generator_warnings(const GeneratorPair& gen, int kappa_max,
                               const Vector* pencil_eigs, ValidationReport& report) {
  // Generator points sitting on the pencil spectrum make the resolvent blow up.
  if (pencil_eigs != nullptr) {
    auto near_spectrum = [&](Complex p) {
      for (Eigen::Index e = 0; e < pencil_eigs->size(); ++e)
        if (std::abs(p - (*pencil_eigs)(e)) < 1e-9 * std::max(1.0, std::abs(p))) return true;
      return false;
    };
    for (Eigen::Index i = 0; i < gen.rho(); ++i) {
      if (near_spectrum(gen.lambda(i)))
        report.warnings.push_back("lambda[" + std::to_string(i + 1) + "] equals a pencil eigenvalue");
      if (near_spectrum(gen.mu(i)))
        report.warnings.push_back("mu[" + std::to_string(i + 1) + "] equals a pencil eigenvalue");
    }
  }
  // Resonances k*lambda_i == mu_j appear as denominators of the left-Loewner
  // series; warn here, series constructors raise at the same threshold.
  for (Eigen::Index i = 0; i < gen.rho(); ++i)
    for (Eigen::Index j = 0; j < gen.rho(); ++j)
      for (int k = 1; k <= kappa_max; ++k)
        if (is_resonant(gen.lambda(i), gen.mu(j), k))
          report.warnings.push_back("resonance: " + std::to_string(k) + "*lambda[" +
                                    std::to_string(i + 1) + "] == mu[" + std::to_string(j + 1) +
                                    "]");
  if (gen.strict_imaginary) {
    for (Eigen::Index i = 0; i < gen.rho(); ++i) {
      if (std::abs(gen.lambda(i).real()) > 1e-12 * std::max(1.0, std::abs(gen.lambda(i))))
        report.errors.push_back("strict_imaginary: lambda[" + std::to_string(i + 1) +
                                "] has nonzero real part");
      if (std::abs(gen.mu(i).real()) > 1e-12 * std::max(1.0, std::abs(gen.mu(i))))
        report.errors.push_back("strict_imaginary: mu[" + std::to_string(i + 1) +
                                "] has nonzero real part");
    }
  }
}

}  // namespace

ValidationReport validate_system(const BilinearSystem& sys, const GeneratorPair* gen,
                                 int kappa_max) {
  ValidationReport report;
  try {
    require_consistent(sys);
  } catch (const InvalidArgumentError& e) {
    report.errors.push_back(e.what());
  }
  if (gen != nullptr) {
    try {
      require_consistent(*gen);
    } catch (const InvalidArgumentError& e) {
      report.errors.push_back(e.what());
    }
  }
  if (!report.errors.empty()) return report;

  if (!pencil_is_regular(sys)) report.errors.push_back("singular pencil: det(sE - A) == 0 at all probe points");

  Vector eigs;
  const Vector* eigs_ptr = nullptr;
  Eigen::FullPivLU<Matrix> elu(sys.E);
  if (elu.isInvertible()) {
    Eigen::ComplexEigenSolver<Matrix> es(elu.solve(sys.A));
    eigs = es.eigenvalues();
    eigs_ptr = &eigs;
    report.spectral_abscissa = eigs.real().maxCoeff();
    if (report.spectral_abscissa >= 0.0)
      report.warnings.push_back("spectral abscissa >= 0: unforced dynamics are not exponentially stable");
  } else {
    report.warnings.push_back("E is singular: spectral abscissa unavailable");
  }

  if (gen != nullptr && report.errors.empty())
    append_generator_warnings(*gen, kappa_max, eigs_ptr, report);
  return report;
}

ResolventFactor::ResolventFactor(const BilinearSystem& sys, Complex s) : s_(s) {
  require_consistent(sys);
  lu_.compute(s * sys.E - sys.A);
  if (!lu_.isInvertible()) throw SingularPencilError(s);
}

Matrix resolvent(const BilinearSystem& sys, Complex s) {
  ResolventFactor factor(sys, s);
  return factor.solve(Matrix(Matrix::Identity(sys.order(), sys.order())));
}

}  // namespace biloewner
