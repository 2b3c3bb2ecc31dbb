// Copyright (c) 2026 biloewner contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <complex>
#include <sstream>
#include <stdexcept>
#include <string>

namespace biloewner {

namespace detail {

inline std::string format_complex(std::complex<double> z) {
  std::ostringstream os;
  os << "(" << z.real() << (z.imag() < 0 ? " - " : " + ")
     << (z.imag() < 0 ? -z.imag() : z.imag()) << "i)";
  return os.str();
}

}  // namespace detail

/// Base class for all domain errors. kind() is a stable machine-readable tag
/// used by the CLI when emitting JSON error objects on stderr.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& message)
      : std::runtime_error(message), kind_(std::move(kind)) {}
  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

/// sE - A (or a Loewner pencil evaluated at s) is singular to working
/// precision.
class SingularPencilError : public Error {
 public:
  explicit SingularPencilError(std::complex<double> at, const std::string& context = "")
      : Error("SingularPencilAt",
              "singular pencil at s = " + detail::format_complex(at) +
                  (context.empty() ? "" : " (" + context + ")")),
        at_(at) {}
  std::complex<double> at() const noexcept { return at_; }

 private:
  std::complex<double> at_;
};

/// k*lambda_i == mu_j to working precision; the series denominators of the
/// left-Loewner function vanish there. Indices are 1-based.
class ResonanceError : public Error {
 public:
  ResonanceError(int lambda_index, int mu_index, int multiplier)
      : Error("ResonanceError",
              "resonance: " + std::to_string(multiplier) + "*lambda[" +
                  std::to_string(lambda_index) + "] == mu[" + std::to_string(mu_index) + "]"),
        lambda_index_(lambda_index),
        mu_index_(mu_index),
        multiplier_(multiplier) {}
  int lambda_index() const noexcept { return lambda_index_; }
  int mu_index() const noexcept { return mu_index_; }
  int multiplier() const noexcept { return multiplier_; }

 private:
  int lambda_index_;
  int mu_index_;
  int multiplier_;
};

/// All singular values of the Loewner data fall below the truncation
/// threshold; no reduced model can be extracted.
class DegenerateDataError : public Error {
 public:
  explicit DegenerateDataError(const std::string& message = "Loewner data is degenerate")
      : Error("DegenerateData", message) {}
};

/// |zeta_i| exceeds the convergence-radius estimate of series component i
/// (1-based) while the radius guard is enabled.
class OutOfRadiusError : public Error {
 public:
  OutOfRadiusError(int index, double magnitude, double radius)
      : Error("OutOfRadius",
              "|zeta[" + std::to_string(index) + "]| = " + std::to_string(magnitude) +
                  " exceeds convergence-radius estimate " + std::to_string(radius)),
        index_(index) {}
  int index() const noexcept { return index_; }

 private:
  int index_;
};

/// The state-dependent mass matrix of the moment-matching model is singular
/// (or numerically so) at the current state.
class SingularMassError : public Error {
 public:
  explicit SingularMassError(const std::string& message) : Error("SingularMass", message) {}
  SingularMassError(const std::string& message, double time)
      : Error("SingularMass", message + " at t = " + std::to_string(time)),
        time_(time),
        has_time_(true) {}
  bool has_time() const noexcept { return has_time_; }
  double time() const noexcept { return time_; }

 private:
  double time_ = 0.0;
  bool has_time_ = false;
};

/// The integrated state left the representable range (NaN or infinity).
class NonFiniteError : public Error {
 public:
  explicit NonFiniteError(double time)
      : Error("NonFinite", "non-finite state at t = " + std::to_string(time)), time_(time) {}
  double time() const noexcept { return time_; }

 private:
  double time_;
};

/// Two traces do not share the same time grid.
class GridMismatchError : public Error {
 public:
  explicit GridMismatchError(const std::string& message) : Error("GridMismatch", message) {}
};

/// Precondition violation: malformed dimensions, bad tuple layout, etc.
class InvalidArgumentError : public Error {
 public:
  explicit InvalidArgumentError(const std::string& message)
      : Error("InvalidArgument", message) {}
};

}  // namespace biloewner
