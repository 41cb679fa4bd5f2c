#pragma once

#include <stdexcept>
#include <string>

namespace menum {

/// Malformed input: out-of-range ids, inconsistent instance data, guards exceeded.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A documented precondition or postcondition did not hold.
class ContractError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace menum
