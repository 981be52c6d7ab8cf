#pragma once

#include <stdexcept>
#include <string>

namespace bcsreps {

// Invalid physical or structural input (wrong sign, out-of-range coupling,
// inconsistent geometry).  Maps to CLI exit code 2 when raised by argument
// handling, otherwise it indicates caller error.
class DomainError : public std::invalid_argument {
 public:
  explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

// A numerical routine failed to meet its own tolerance contract
// (non-bracketing root, quadrature non-convergence, cancellation guard).
// Maps to CLI exit code 3.
class NumericError : public std::runtime_error {
 public:
  explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace bcsreps
