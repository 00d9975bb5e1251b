#ifndef SIGLAT_DSL_PARSER_HPP
#define SIGLAT_DSL_PARSER_HPP

#include "siglat/dsl/ast.hpp"

#include <stdexcept>
#include <string>
#include <string_view>

namespace siglat::dsl {

/// Syntax error with source position and the token class that was expected.
class ParseError : public std::runtime_error {
public:
    ParseError(SourcePos pos, std::string expected, std::string found);

    SourcePos pos() const { return pos_; }
    const std::string& expected() const { return expected_; }

private:
    SourcePos pos_;
    std::string expected_;
};

/// Parses a script. Grammar:
///
///   script     = { statement }
///   statement  = space_decl | var_decl | let_decl | constraint | check
///   space_decl = "space" IDENT "=" INT
///   var_decl   = "var" IDENT ":" IDENT
///   let_decl   = "let" IDENT "=" partition ":" IDENT
///   constraint = "constrain" IDENT "<=" IDENT
///   check      = "check" expr ("==" | "<=") expr
///   expr       = join_e ; join_e = meet_e { "|" meet_e }
///   meet_e     = prod_e { "^" prod_e } ; prod_e = atom_e { "*" atom_e }
///   atom_e     = IDENT | "discrete" "(" IDENT ")" | "trivial" "(" IDENT ")"
///              | "(" expr ")"
///   partition  = "{" block { "," block } "}" ; block = "{" INT { "," INT } "}"
///
/// "#" starts a comment running to end of line. Operators are
/// left-associative with precedence "*" > "^" > "|".
Script parse(std::string_view text);

/// Parses a bare partition literal such as "{{0},{1,2}}".
std::vector<std::vector<int>> parse_partition_literal(std::string_view text);

} // namespace siglat::dsl

#endif
