#pragma once

#include <stdexcept>
#include <string>

namespace lierep {

/// Bad input: invalid type, rank mismatch, non-dominant weight where a
/// dominant one is required, out-of-range index, invalid subsystem base.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An internal identity failed (non-integral Freudenthal quotient, profile
/// not summing to the dimension, 64-bit overflow). Never a user error.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace lierep
