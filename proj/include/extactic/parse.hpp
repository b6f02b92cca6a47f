#pragma once

#include <string>

#include "extactic/multipoly.hpp"

namespace extactic {

// Polynomial grammar (UTF-8 text): integers, rationals a/b, declared
// variables, + - * ^, parentheses.  Implicit multiplication is rejected;
// ^ takes a nonnegative integer literal.  Errors carry the byte position.
MultiPoly parse_poly(const std::string& text, const VarsPtr& vars);

} // namespace extactic
