#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "qconic/error.hpp"
#include "qconic/polynomial.hpp"

namespace qconic {

/// Malformed input text. Line and column are 1-based.
class ParseError : public InputError {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_, column_;
};

/// Polynomial in x, y, z with rational coefficients. Grammar:
///   expr   := term (('+' | '-') term)*
///   term   := factor (('*' | '/') factor)*     divisor must be a nonzero constant
///   factor := ('+' | '-') factor | atom ('^' integer)?
///   atom   := integer | 'x' | 'y' | 'z' | '(' expr ')'
/// Products need an explicit '*'.
Poly3 parse_polynomial(std::string_view text);

/// parse_polynomial followed by the homogeneity check (NotHomogeneous).
HomogeneousForm parse_form(std::string_view text);

/// 1-based (line, column) of a byte offset in text.
std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t offset);

}  // namespace qconic
