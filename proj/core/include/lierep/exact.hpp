#pragma once

#include <cstdint>
#include <limits>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "lierep/errors.hpp"

namespace lierep {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_string(const Integer& value) { return value.str(); }

/// "p/q", or "p" when the denominator is one.
inline std::string to_string(const Rational& value) {
  const auto num = boost::multiprecision::numerator(value);
  const auto den = boost::multiprecision::denominator(value);
  return den == 1 ? num.str() : num.str() + "/" + den.str();
}

inline bool is_integral(const Rational& value) {
  return boost::multiprecision::denominator(value) == 1;
}

/// Converts an integral rational to Integer; throws ConsistencyError otherwise.
inline Integer to_integer(const Rational& value, const char* what) {
  if (!is_integral(value)) {
    throw ConsistencyError(std::string(what) + ": expected an integer, got " +
                           to_string(value));
  }
  return boost::multiprecision::numerator(value);
}

// Checked 64-bit arithmetic for the hot loops. Overflow is an internal
// consistency failure, never silent wraparound.
namespace checked {

inline std::int64_t add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw ConsistencyError("int64 overflow in addition");
  return r;
}

inline std::int64_t sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw ConsistencyError("int64 overflow in subtraction");
  return r;
}

inline std::int64_t mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw ConsistencyError("int64 overflow in multiplication");
  return r;
}

}  // namespace checked

/// Narrows an Integer known to fit in 64 bits.
inline std::int64_t to_int64(const Integer& value) {
  if (value > std::numeric_limits<std::int64_t>::max() ||
      value < std::numeric_limits<std::int64_t>::min()) {
    throw ConsistencyError("value does not fit in int64: " + value.str());
  }
  return static_cast<std::int64_t>(value);
}

}  // namespace lierep
