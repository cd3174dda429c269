#pragma once

#include <stdexcept>
#include <string>

namespace spinpoly {

// Requested object does not exist (e.g. coefficient index k > 2j).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// The direct central-factorial route only exists for even 2j-k.
class ParityError : public DomainError {
 public:
  using DomainError::DomainError;
};

// Operation is defined but deliberately not supported for this input.
class UnsupportedError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Malformed user input: non-unit axis, bad ranges, bad CLI values.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// The eigendecomposition oracle produced a spectrum that does not match
// {j, j-1, ..., -j}. Signals a broken matrix construction.
class OracleFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace spinpoly
