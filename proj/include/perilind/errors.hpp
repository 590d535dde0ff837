// errors.hpp — Exception hierarchy with stable error codes for the CLI layer.

#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace perilind {

// Base of every library error. `code()` is stable across releases and is what
// the CLI emits in its structured error JSON.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& message)
      : std::runtime_error(message), code_(std::move(code)) {}

  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

struct DimensionMismatch : Error {
  explicit DimensionMismatch(const std::string& m) : Error("dimension_mismatch", m) {}
};

struct NonHermitianInput : Error {
  explicit NonHermitianInput(const std::string& m) : Error("non_hermitian_input", m) {}
};

struct UnknownFrequency : Error {
  explicit UnknownFrequency(const std::string& m) : Error("unknown_frequency", m) {}
};

// Matrix logarithm rejected: an eigenvalue sits on (or too close to) the
// closed negative real axis, so the principal branch is not defined.
struct BranchFailure : Error {
  explicit BranchFailure(const std::string& m) : Error("branch_failure", m) {}
};

struct QuadratureNonConvergence : Error {
  explicit QuadratureNonConvergence(const std::string& m)
      : Error("quadrature_non_convergence", m) {}
};

struct TailDivergence : Error {
  explicit TailDivergence(const std::string& m) : Error("tail_divergence", m) {}
};

struct TruncationInsufficient : Error {
  explicit TruncationInsufficient(const std::string& m)
      : Error("truncation_insufficient", m) {}
};

// Raised by the weak-coupling builder when the Bohr spectrum is not
// congruence free for the requested drive frequency. Offending triples
// (omega, omega', k) with omega - omega' = k*Omega are attached.
class CongruenceViolation : public Error {
 public:
  struct Entry {
    double omega_a;
    double omega_b;
    long k;
  };

  CongruenceViolation(const std::string& m, std::vector<Entry> violations)
      : Error("congruence_violation", m), violations_(std::move(violations)) {}

  const std::vector<Entry>& violations() const { return violations_; }

 private:
  std::vector<Entry> violations_;
};

struct IntegratorStepFailure : Error {
  explicit IntegratorStepFailure(const std::string& m)
      : Error("integrator_step_failure", m) {}
};

struct DimensionTooLarge : Error {
  explicit DimensionTooLarge(const std::string& m) : Error("dimension_too_large", m) {}
};

struct IllConditionedEigenbasis : Error {
  explicit IllConditionedEigenbasis(const std::string& m)
      : Error("ill_conditioned_eigenbasis", m) {}
};

struct NotCommutative : Error {
  explicit NotCommutative(const std::string& m) : Error("not_commutative", m) {}
};

struct ParseError : Error {
  explicit ParseError(const std::string& m) : Error("parse_error", m) {}
};

// Aggregated config validation failure: every offending field is reported,
// not just the first one.
class ValidationError : public Error {
 public:
  explicit ValidationError(std::vector<std::string> issues)
      : Error("validation_error", join(issues)), issues_(std::move(issues)) {}

  const std::vector<std::string>& issues() const { return issues_; }

 private:
  static std::string join(const std::vector<std::string>& issues) {
    std::string out = "config validation failed:";
    for (const auto& i : issues) {
      out += "\n  - " + i;
    }
    return out;
  }

  std::vector<std::string> issues_;
};

}  // namespace perilind
