#pragma once

#include <stdexcept>
#include <string>

namespace nucert {

// Malformed or non-geometric input (CLI exit code 1).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A documented precondition of a bound or search does not hold.
class PreconditionError : public InputError {
 public:
  using InputError::InputError;
};

// Iterative solve or bounded search gave up (CLI exit code 2).
class SolverError : public std::runtime_error {
 public:
  SolverError(const std::string& what, double best_residual = 0.0)
      : std::runtime_error(what), best_residual_(best_residual) {}
  double best_residual() const { return best_residual_; }

 private:
  double best_residual_;
};

// No exactly-certified candidate was found (CLI exit code 3).
class CertificationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Internal invariant broken by the caller, e.g. a basis that is not adapted.
class ContractError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace nucert
