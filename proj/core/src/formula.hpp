#pragma once

#include <map>
#include <string>
#include <string_view>

#include "lierep/exact.hpp"

namespace lierep::detail {

/// Evaluates the small closed forms of the golden tables, e.g. "n(n^2-1)/6",
/// "(a+1)(a+3)", "3a+3". Supports + - * / ^, parentheses, integer literals,
/// one-letter variables and implicit multiplication. Throws InvalidArgument
/// on a syntax error or unbound variable.
Rational evaluate_formula(std::string_view text, const std::map<char, Rational>& vars);

}  // namespace lierep::detail
