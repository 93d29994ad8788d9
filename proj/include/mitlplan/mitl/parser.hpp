#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "mitlplan/mitl/formula.hpp"

namespace mitlplan::mitl {

class ParseError : public std::runtime_error {
public:
  enum class Kind { Syntax, UnknownToken, PunctualInterval, InvalidInterval };

  ParseError(Kind kind, int line, int column, const std::string& message);

  Kind kind() const { return kind_; }
  int line() const { return line_; }
  int column() const { return column_; }

private:
  Kind kind_;
  int line_;
  int column_;
};

/// Parses the ASCII formula syntax:
///
///   formula  := unary | formula '&' formula | formula '|' formula
///             | formula '->' formula | formula 'U' [interval] formula
///   unary    := '!' unary | ('X'|'F'|'G') [interval] unary | atom
///             | 'true' | 'false' | '(' formula ')'
///   interval := '[' a ',' b ']' | '(' a ',' b ']' | '[' a ',' b ')'
///             | '(' a ',' b ')' | '[' a ',' 'inf' ')' | '[' '<=' b ']'
///
/// Precedence from tightest: unary operators, U (right associative), &, |,
/// -> (right associative). A missing interval means [0,inf).
Formula parse_formula(std::string_view text);

} // namespace mitlplan::mitl
