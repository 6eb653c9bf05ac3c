#include "bmo/parse.hpp"

#include <cctype>

namespace bmo {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  MPoly run() {
    skip();
    if (pos_ == s_.size()) throw ParseError(pos_, "empty polynomial");
    MPoly p = expr();
    skip();
    if (pos_ != s_.size()) throw ParseError(pos_, std::string("unexpected '") + s_[pos_] + "'");
    return p;
  }

 private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool peek(char c) {
    skip();
    return pos_ < s_.size() && s_[pos_] == c;
  }
  bool starts_primary() {
    skip();
    if (pos_ >= s_.size()) return false;
    char c = s_[pos_];
    return std::isdigit(static_cast<unsigned char>(c)) || c == 'x' || c == 'y' || c == 'z' || c == '(';
  }

  MPoly expr() {
    MPoly acc;
    bool negate = false;
    if (peek('+')) {
      ++pos_;
    } else if (peek('-')) {
      ++pos_;
      negate = true;
    }
    MPoly t = term();
    acc = negate ? -t : t;
    while (true) {
      if (peek('+')) {
        ++pos_;
        acc += term();
      } else if (peek('-')) {
        ++pos_;
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  MPoly term() {
    MPoly acc = factor();
    while (true) {
      if (peek('*')) {
        ++pos_;
        acc *= factor();
      } else if (starts_primary()) {
        acc *= factor();
      } else {
        return acc;
      }
    }
  }

  MPoly factor() {
    MPoly base = primary();
    if (peek('^')) {
      ++pos_;
      skip();
      std::size_t start = pos_;
      Integer e = digits();
      if (!e.fits_uint_p() || e > 1000) throw ParseError(start, "exponent too large");
      return base.pow(static_cast<unsigned>(e.get_ui()));
    }
    return base;
  }

  Integer digits() {
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) throw ParseError(start, "expected digits");
    return Integer(std::string(s_.substr(start, pos_ - start)), 10);
  }

  MPoly primary() {
    skip();
    if (pos_ >= s_.size()) throw ParseError(pos_, "unexpected end of input");
    char c = s_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Integer num = digits();
      if (peek('/')) {
        ++pos_;
        skip();
        std::size_t at = pos_;
        Integer den = digits();
        if (den == 0) throw ParseError(at, "zero denominator");
        return MPoly(Rational(num, den));
      }
      return MPoly(Rational(num));
    }
    if (c == 'x' || c == 'y' || c == 'z') {
      ++pos_;
      return MPoly::variable(static_cast<Var>(c - 'x'));
    }
    if (c == '(') {
      std::size_t open = pos_++;
      MPoly inner = expr();
      if (!peek(')')) throw ParseError(pos_ < s_.size() ? pos_ : open, "expected ')'");
      ++pos_;
      return inner;
    }
    throw ParseError(pos_, std::string("unexpected '") + c + "'");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

MPoly parse_polynomial(std::string_view text) { return Parser(text).run(); }

}  // namespace bmo
