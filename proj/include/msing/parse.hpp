#pragma once

#include <cctype>
#include <string>
#include <string_view>

#include "msing/poly.hpp"

namespace msing {

namespace detail {

// expr   := term (('+'|'-') term)*
// term   := unary ('*' unary)*
// unary  := ('-'|'+') unary | power
// power  := atom ('^' INT)?
// atom   := INT ('/' INT)? | IDENT | '(' expr ')'
class PolyParser {
 public:
  explicit PolyParser(std::string_view text) : s_(text) {}

  Poly parse() {
    Poly p = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw InputError("polynomial parse error at column " + std::to_string(pos_ + 1) + ": " + what +
                     " in \"" + std::string(s_) + "\"");
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  std::string integer_literal() {
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    return std::string(s_.substr(start, pos_ - start));
  }

  Poly expr() {
    Poly acc = term();
    for (;;) {
      if (accept('+'))
        acc += term();
      else if (accept('-'))
        acc -= term();
      else
        return acc;
    }
  }

  Poly term() {
    Poly acc = unary();
    while (accept('*')) acc *= unary();
    return acc;
  }

  Poly unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  Poly power() {
    Poly base = atom();
    if (accept('^')) {
      std::string e = integer_literal();
      if (e.size() > 6) fail("exponent too large");
      return pow(base, static_cast<unsigned>(std::stoul(e)));
    }
    return base;
  }

  Poly atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Poly p = expr();
      if (!accept(')')) fail("expected ')'");
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Scalar q(integer_literal());
      if (accept('/')) {
        Scalar den(integer_literal());
        if (den == 0) fail("zero denominator");
        q /= den;
      }
      return Poly(q);
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
        ++pos_;
      return Poly::var(std::string(s_.substr(start, pos_ - start)));
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses the polynomial text grammar: integers, rationals p/q, identifiers,
/// + - * ^ and parentheses; no implicit multiplication.
inline Poly parse_poly(std::string_view text) { return detail::PolyParser(text).parse(); }

inline bool is_identifier(std::string_view s) {
  if (s.empty() || !std::isalpha(static_cast<unsigned char>(s[0]))) return false;
  for (char c : s)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  return true;
}

}  // namespace msing
