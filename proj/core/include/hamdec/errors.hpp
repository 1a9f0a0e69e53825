#pragma once

#include <stdexcept>
#include <string>

namespace hamdec {

// Raised when caller-supplied data violates a documented precondition
// (malformed cycles, mismatched instances, bad model references).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Raised when an internal contract is broken, e.g. asking for the components
// of a pair that still has broken vertices, or a solver assignment that does
// not decode to two 2-factors.
class ContractError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace hamdec
