#include "stripcert/poly_text.hpp"
#include "stripcert/error.hpp"

#include <cctype>
#include <string>

namespace stripcert {

namespace {

class Parser {
public:
  Parser(std::string_view text, unsigned allowed) : s_(text), allowed_(allowed) {}

  RatPoly run() {
    skip();
    if (pos_ == s_.size())
      fail("empty expression");
    RatPoly p = expr();
    skip();
    if (pos_ != s_.size())
      fail(std::string("unexpected '") + s_[pos_] + "'");
    return p;
  }

private:
  [[noreturn]] void fail(const std::string &msg) const {
    throw Error(ErrorCode::SyntaxError, msg + " at position " + std::to_string(pos_));
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  RatPoly expr() {
    RatPoly acc = term();
    for (;;) {
      if (accept('+'))
        acc += term();
      else if (accept('-'))
        acc -= term();
      else
        return acc;
    }
  }

  RatPoly term() {
    RatPoly acc = unary();
    for (;;) {
      if (accept('*')) {
        acc *= unary();
      } else if (accept('/')) {
        std::size_t at = pos_;
        RatPoly den = unary();
        if (!den.is_constant() || den.is_zero()) {
          pos_ = at;
          fail("division by a non-constant or zero");
        }
        acc *= Rational(1) / den.constant_term();
      } else {
        return acc;
      }
    }
  }

  RatPoly unary() {
    if (accept('-'))
      return -unary();
    if (accept('+'))
      return unary();
    return power();
  }

  RatPoly power() {
    RatPoly base = primary();
    if (accept('^')) {
      skip();
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
        ++pos_;
      if (start == pos_)
        fail("expected a nonnegative integer exponent");
      if (pos_ - start > 4)
        fail("exponent too large");
      base = base.pow(std::stoi(std::string(s_.substr(start, pos_ - start))));
    }
    return base;
  }

  RatPoly primary() {
    skip();
    if (pos_ >= s_.size())
      fail("unexpected end of input");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      RatPoly p = expr();
      if (!accept(')'))
        fail("expected ')'");
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.')
      return number();
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
        ++pos_;
      std::string_view name = s_.substr(start, pos_ - start);
      if (name.size() == 1) {
        for (int v = 0; v < 4; ++v)
          if (name[0] == var_name(static_cast<Var>(v)) && (allowed_ & (1u << v)))
            return RatPoly::var(static_cast<Var>(v));
      }
      throw Error(ErrorCode::UnknownVariable, "unknown variable '" + std::string(name) +
                                                  "' at position " + std::to_string(start));
    }
    fail(std::string("unexpected '") + c + "'");
  }

  // Integer or decimal literal; "p/q" is handled by the division rule.
  RatPoly number() {
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
    if (pos_ < s_.size() && s_[pos_] == '.') {
      ++pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
        ++pos_;
    }
    if (pos_ < s_.size() && (s_[pos_] == 'e' || s_[pos_] == 'E')) {
      std::size_t save = pos_++;
      if (pos_ < s_.size() && (s_[pos_] == '+' || s_[pos_] == '-'))
        ++pos_;
      if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
          ++pos_;
      } else {
        pos_ = save;
      }
    }
    std::string_view lit = s_.substr(start, pos_ - start);
    try {
      return RatPoly(parse_rational(lit));
    } catch (const Error &) {
      pos_ = start;
      fail("malformed number '" + std::string(lit) + "'");
    }
  }

  std::string_view s_;
  unsigned allowed_;
  std::size_t pos_ = 0;
};

} // namespace

RatPoly parse_poly(std::string_view text, unsigned allowed) { return Parser(text, allowed).run(); }

} // namespace stripcert
