#pragma once

#include "pcert/multipoly.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace pcert {

/// Parses a polynomial expression over the declared variables.
///
/// Grammar: integers, rationals written `p/q`, the variables in `names`,
/// binary `+ - *`, `^` with a nonnegative integer exponent (binds tightest),
/// unary minus and parentheses. Multiplication is never implicit.
/// Throws ParseError carrying the offending offset.
MultiPoly parse_polynomial(std::string_view text, const std::vector<std::string>& names);

} // namespace pcert
