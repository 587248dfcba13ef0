#pragma once

#include <stdexcept>
#include <string>

namespace hfm {

// Malformed or mismatched input: wrong hyperfield, bad arity, schema violations.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Arithmetic outside the domain of an operation, e.g. the inverse of 0.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A derived object failed an internal consistency check (a GP ratio that depends
// on the chosen basis, an exchange-graph cycle that does not close, ...).
class ConsistencyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace hfm
