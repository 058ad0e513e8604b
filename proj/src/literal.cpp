#include "qconic/literal.hpp"

#include <cctype>

namespace qconic {

ParseError::ParseError(const std::string& what, std::size_t line, std::size_t column)
    : InputError(what + " at line " + std::to_string(line) + ", column " + std::to_string(column)),
      line_(line),
      column_(column) {}

std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t offset) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Poly3 parse() {
    Poly3 p = expr();
    skip_space();
    if (pos_ < text_.size()) fail(std::string("unexpected '") + text_[pos_] + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    auto [line, col] = line_column(text_, pos_);
    throw ParseError(what, line, col);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Poly3 expr() {
    Poly3 acc = term();
    for (;;) {
      if (accept('+')) acc = acc + term();
      else if (accept('-')) acc = acc - term();
      else return acc;
    }
  }

  Poly3 term() {
    Poly3 acc = factor();
    for (;;) {
      if (accept('*')) {
        acc = acc * factor();
      } else if (accept('/')) {
        std::size_t at = pos_;
        Poly3 d = factor();
        if (d.total_degree() != 0) {
          pos_ = at;
          fail("division by a non-constant or zero expression");
        }
        acc = (Rational(1) / d.coeff({0, 0, 0})) * acc;
      } else {
        return acc;
      }
    }
  }

  Poly3 factor() {
    if (accept('-')) return -factor();
    if (accept('+')) return factor();
    Poly3 base = atom();
    if (accept('^')) {
      skip_space();
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) fail("expected a non-negative integer exponent");
      if (pos_ - start > 4) {
        pos_ = start;
        fail("exponent too large");
      }
      base = base.pow(std::stoi(std::string(text_.substr(start, pos_ - start))));
    }
    return base;
  }

  Poly3 atom() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return Poly3::constant(Rational(Integer(std::string(text_.substr(start, pos_ - start)))));
    }
    if (c == 'x' || c == 'y' || c == 'z') {
      ++pos_;
      return Poly3::variable(static_cast<std::size_t>(c - 'x'));
    }
    if (c == '(') {
      ++pos_;
      Poly3 inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    fail(std::string("unexpected '") + c + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Poly3 parse_polynomial(std::string_view text) { return Parser(text).parse(); }

HomogeneousForm parse_form(std::string_view text) { return HomogeneousForm::from_poly(parse_polynomial(text)); }

}  // namespace qconic
