#pragma once

#include <string_view>

#include "ktorus/torus_algebra.hpp"

namespace ktorus {

/// Parses the expression grammar:
///   atoms      s1..sn, r1..rn, i, integer and rational literals p/q
///   operators  + - * ^ (integer exponents, negatives allowed), conj(...)
/// Whitespace-insensitive.  Variable count is max(min_vars, highest index
/// mentioned).  Syntax errors carry the offending position.
AlgebraElement parse_expr(std::string_view text, int min_vars = 1);

/// Highest s/r index mentioned, 0 if none.  Does not fully validate.
int scan_max_var(std::string_view text);

}  // namespace ktorus
