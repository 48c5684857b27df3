#pragma once

#include <stdexcept>
#include <string>

namespace reslat {

/// Tables have the wrong shape or reference elements out of range.
class StructuralError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A documented precondition of an operation does not hold.
class ContractError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Two computations that must agree did not. Indicates a bug or a false
/// theorem; never an input problem.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace reslat
