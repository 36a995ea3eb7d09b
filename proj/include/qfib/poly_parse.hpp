#pragma once

#include <span>
#include <string>
#include <vector>

#include "qfib/poly.hpp"

namespace qfib {

// Grammar: terms joined by + / -; a term is an optional rational coefficient
// ("3", "-1/2") and *-separated powers var^k. Whitespace is ignored.
// Throws Error kinds SyntaxError, UnknownVariable.
Poly parse_poly(const std::string& text, std::span<const std::string> var_names);

}  // namespace qfib
