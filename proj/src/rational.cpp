#include "bmo/rational.hpp"

#include <cctype>
#include <ostream>

namespace bmo {

namespace {

bool valid_integer_text(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

Integer integer_from(std::string_view s) {
  if (!s.empty() && s[0] == '+') s.remove_prefix(1);
  return Integer(std::string(s), 10);
}

}  // namespace

Rational::Rational(const Integer& num, const Integer& den) : value_(num, den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  if (!valid_integer_text(num)) throw DomainError("malformed rational: " + std::string(text));
  if (slash == std::string_view::npos) return Rational(integer_from(num));
  std::string_view den = text.substr(slash + 1);
  if (!valid_integer_text(den) || den[0] == '-' || den[0] == '+')
    throw DomainError("malformed rational: " + std::string(text));
  return Rational(integer_from(num), integer_from(den));
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw DomainError("division by zero");
  value_ /= o.value_;
  return *this;
}

Rational Rational::pow(long e) const {
  if (e < 0) {
    if (is_zero()) throw DomainError("zero to a negative power");
    return Rational(1) / pow(-e);
  }
  Integer n, d;
  mpz_pow_ui(n.get_mpz_t(), numerator().get_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(d.get_mpz_t(), denominator().get_mpz_t(), static_cast<unsigned long>(e));
  return Rational(n, d);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

}  // namespace bmo
