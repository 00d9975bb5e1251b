#ifndef SIGLAT_DSL_PRINTER_HPP
#define SIGLAT_DSL_PRINTER_HPP

#include "siglat/dsl/ast.hpp"

#include <string>

namespace siglat::dsl {

/// Renders an expression with the fewest parentheses that re-parse to the
/// same tree under the precedence rules ("*" > "^" > "|", left-associative).
std::string to_string(const Expr& expr);

/// Renders a whole script, one statement per line; parse(to_string(s)) is
/// structurally equal to s.
std::string to_string(const Script& script);

std::string partition_literal_string(const std::vector<std::vector<int>>& blocks);

} // namespace siglat::dsl

#endif
