#pragma once

#include <stdexcept>
#include <string>

namespace telecode {

// Bad arguments: wrong shapes, unknown names, malformed text. CLI exit code 2.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class DimensionError : public UsageError {
 public:
  using UsageError::UsageError;
};

// Input violates a domain invariant (non-unitary, not a density matrix, ...).
class ValidationError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A construction produced something it should not have (e.g. a dilation that is
// not unitary). Indicates a bug rather than bad input.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace telecode
