#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

namespace bmo {

using Integer = mpz_class;

/// Raised when an argument lies outside an operation's mathematical domain
/// (zero where a unit is required, a composite "prime", ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A named precondition of a higher-level operation failed
/// (e.g. the form does not satisfy the axis-square conditions).
class PreconditionError : public std::runtime_error {
 public:
  PreconditionError(std::string name, const std::string& what)
      : std::runtime_error(what), name_(std::move(name)) {}
  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

/// Exact rational number in lowest terms with a positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(long n) : value_(n) {}  // NOLINT(google-explicit-constructor)
  Rational(const Integer& n) : value_(n) {}  // NOLINT
  Rational(const Integer& num, const Integer& den);
  explicit Rational(const mpq_class& q) : value_(q) { value_.canonicalize(); }

  /// Accepts "12", "-7", "3/4", "-5/8". Throws DomainError on malformed text.
  static Rational parse(std::string_view text);

  const Integer& numerator() const { return value_.get_num(); }
  const Integer& denominator() const { return value_.get_den(); }
  const mpq_class& raw() const { return value_; }

  int sign() const { return sgn(value_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return denominator() == 1; }

  Rational operator-() const { return Rational(mpq_class(-value_)); }
  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  Rational abs() const { return sign() < 0 ? -*this : *this; }
  Rational pow(long e) const;

  std::string to_string() const { return value_.get_str(); }

 private:
  mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace bmo
