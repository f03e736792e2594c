#pragma once

// Recursive-descent parser for the plain-text infix form produced by
// RationalExpr::to_string (and used in golden-table files):
//   expr    := term (('+' | '-') term)*
//   term    := unary (('*' | '/') unary)*
//   unary   := ('+' | '-') unary | power
//   power   := primary (('^' | '**') unary)?
//   primary := integer | identifier | 'sqrt(n)' | '(' expr ')'
// Exponents must be integer constants.

#include <cctype>
#include <string>
#include <string_view>

#include "nkt/rational_expr.hpp"

namespace nkt {

namespace detail {

class ExprParser {
 public:
  explicit ExprParser(std::string_view text) : text_(text) {}

  RationalExpr parse() {
    RationalExpr value = expression();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return value;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw error(errc::parse_error, why + " at offset " + std::to_string(pos_) + " in '" + std::string(text_) + "'");
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(std::string_view token) {
    skip_space();
    if (text_.substr(pos_, token.size()) == token) {
      pos_ += token.size();
      return true;
    }
    return false;
  }

  RationalExpr expression() {
    RationalExpr value = term();
    for (;;) {
      if (accept("+")) {
        value += term();
      } else if (accept("-")) {
        value -= term();
      } else {
        return value;
      }
    }
  }

  RationalExpr term() {
    RationalExpr value = unary();
    for (;;) {
      skip_space();
      if (text_.substr(pos_, 2) == "**") return value;
      if (accept("*")) {
        value *= unary();
      } else if (accept("/")) {
        RationalExpr divisor = unary();
        if (divisor.is_zero()) fail("division by zero");
        value /= divisor;
      } else {
        return value;
      }
    }
  }

  RationalExpr unary() {
    if (accept("-")) return -unary();
    if (accept("+")) return unary();
    return power();
  }

  RationalExpr power() {
    RationalExpr base = primary();
    if (accept("^") || accept("**")) {
      RationalExpr exponent = unary();
      auto value = exponent.constant();
      if (!value || !is_integer(*value)) fail("exponent must be an integer constant");
      Integer k = numerator_of(*value);
      if (k > 64 || k < -64) fail("exponent out of range");
      int ki = k.convert_to<int>();
      RationalExpr result = pow(base, static_cast<unsigned>(ki < 0 ? -ki : ki));
      if (ki < 0) {
        if (result.is_zero()) fail("zero to a negative power");
        result = RationalExpr(1) / result;
      }
      return result;
    }
    return base;
  }

  RationalExpr primary() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char ch = text_[pos_];
    if (ch == '(') {
      ++pos_;
      RationalExpr inner = expression();
      if (!accept(")")) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return RationalExpr(Rational(Integer(std::string(text_.substr(start, pos_ - start)))));
    }
    if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      std::string_view ident = text_.substr(start, pos_ - start);
      if (ident == "sqrt") {
        if (!accept("(") || !accept("n") || !accept(")")) fail("only sqrt(n) is supported");
        return var(Var::s);
      }
      auto v = var_from_name(ident);
      if (!v) fail("unknown indeterminate '" + std::string(ident) + "'");
      return var(*v);
    }
    fail("unexpected '" + std::string(1, ch) + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline RationalExpr parse_expr(std::string_view text) { return detail::ExprParser(text).parse(); }

}  // namespace nkt
