#pragma once

#include <stdexcept>
#include <string>

namespace itw {

/// Malformed or out-of-contract input (bad vertex ids, unparsable files, ...).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A procedure declined to run because a stated precondition does not hold.
/// The message names the failing inequality.
class Refusal : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An exact search ran out of its node budget before deciding.
class BudgetExhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace itw
