#pragma once

// Recursive-descent parser for rational-function expressions and field specs.
//
//   expr   := term (('+' | '-') term)*
//   term   := factor (('*' | '/') factor)*
//   factor := atom ('^' uint)?
//   atom   := integer | 'x' | generator | '(' expr ')' | '-' factor

#include <cctype>
#include <string>
#include <string_view>

#include "ritt/factor.hpp"
#include "ritt/format.hpp"
#include "ritt/ratfunc.hpp"

namespace ritt {

namespace detail {

constexpr unsigned long kMaxExponent = 4096;

class ExpressionParser {
 public:
  ExpressionParser(std::string_view src, Field k, std::string var) : src_(src), field_(std::move(k)), var_(std::move(var)) {}

  RationalFunction parse() {
    RationalFunction r = expr();
    skip();
    if (pos_ != src_.size()) error("unexpected '" + std::string(1, src_[pos_]) + "'");
    return r;
  }

 private:
  [[noreturn]] void error(const std::string& msg) const { throw SyntaxError(ErrorCode::SyntaxError, msg, pos_); }

  void skip() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < src_.size() && src_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  RationalFunction expr() {
    RationalFunction acc = term();
    for (;;) {
      if (accept('+')) acc = acc + term();
      else if (accept('-')) acc = acc - term();
      else return acc;
    }
  }

  RationalFunction term() {
    RationalFunction acc = factor();
    for (;;) {
      if (accept('*')) {
        acc = acc * factor();
      } else if (accept('/')) {
        const std::size_t at = pos_;
        RationalFunction d = factor();
        if (d.num().is_zero())
          throw SyntaxError(ErrorCode::DivisionByZeroFunction, "denominator reduces to 0", at);
        acc = acc / d;
      } else {
        return acc;
      }
    }
  }

  RationalFunction factor() {
    RationalFunction base = atom();
    if (accept('^')) {
      skip();
      const std::size_t start = pos_;
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
      if (start == pos_) error("expected a non-negative integer exponent");
      const std::string digits(src_.substr(start, pos_ - start));
      if (digits.size() > 4 || std::stoul(digits) > kMaxExponent) {
        pos_ = start;
        error("exponent too large");
      }
      const long e = std::stol(digits);
      if (e == 0) return RationalFunction::constant(field_.one());
      base = base.pow(e);
    }
    return base;
  }

  RationalFunction atom() {
    skip();
    if (pos_ >= src_.size()) error("unexpected end of input");
    const char c = src_[pos_];
    if (c == '(') {
      ++pos_;
      RationalFunction r = expr();
      if (!accept(')')) error("expected ')'");
      return r;
    }
    if (c == '-') {
      ++pos_;
      return -factor();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
      BigRational v(std::string(src_.substr(start, pos_ - start)));
      return RationalFunction::constant(field_.from(v));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < src_.size() && (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) ++pos_;
      const std::string name(src_.substr(start, pos_ - start));
      if (name == var_) return RationalFunction(Polynomial::x(field_));
      if (!field_.is_rational() && name == field_.generator_name())
        return RationalFunction::constant(field_.generator());
      throw SyntaxError(ErrorCode::UnknownSymbol, "unknown symbol '" + name + "'", start);
    }
    error("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view src_;
  Field field_;
  std::string var_;
  std::size_t pos_ = 0;
};

inline bool is_identifier(std::string_view s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  for (char c : s)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
  return true;
}

}  // namespace detail

inline RationalFunction parse_expression(std::string_view src, const Field& k = Field::rationals()) {
  return detail::ExpressionParser(src, k, "x").parse();
}

// "Q" or "Q[name]/(monic polynomial in name)".
inline Field parse_field(std::string_view src) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  };
  const std::string_view s = trim(src);
  if (s == "Q") return Field::rationals();
  const std::size_t base = static_cast<std::size_t>(s.data() - src.data());
  if (s.size() < 2 || s[0] != 'Q' || s[1] != '[') throw SyntaxError(ErrorCode::SyntaxError, "expected 'Q' or 'Q[name]/(poly)'", base);
  const std::size_t close = s.find(']');
  if (close == std::string_view::npos) throw SyntaxError(ErrorCode::SyntaxError, "expected ']'", base + s.size());
  const std::string name(trim(s.substr(2, close - 2)));
  if (!detail::is_identifier(name) || name == "x")
    throw SyntaxError(ErrorCode::SyntaxError, "invalid generator name '" + name + "'", base + 2);
  std::size_t p = close + 1;
  while (p < s.size() && std::isspace(static_cast<unsigned char>(s[p]))) ++p;
  if (p >= s.size() || s[p] != '/') throw SyntaxError(ErrorCode::SyntaxError, "expected '/'", base + p);
  ++p;
  const std::string_view body = trim(s.substr(p));
  const std::size_t body_at = base + static_cast<std::size_t>(body.data() - s.data());
  if (body.size() < 2 || body.front() != '(' || body.back() != ')')
    throw SyntaxError(ErrorCode::SyntaxError, "expected '(' polynomial ')'", body_at);
  RationalFunction m;
  try {
    m = detail::ExpressionParser(body, Field::rationals(), name).parse();
  } catch (const SyntaxError& e) {
    throw SyntaxError(e.code(), "in minimal polynomial", body_at + e.position());
  }
  if (!m.is_polynomial()) throw SyntaxError(ErrorCode::SyntaxError, "minimal polynomial must be a polynomial", body_at);
  return make_field(m.num(), name);
}

}  // namespace ritt
