#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bmo/rational.hpp"

namespace bmo {

enum class Var : int { X = 0, Y = 1, Z = 2 };
char var_name(Var v);

using Monomial = std::array<int, 3>;

/// Graded lexicographic order with x > y > z.
bool grlex_less(const Monomial& a, const Monomial& b);
int total_degree(const Monomial& m);

/// Sparse polynomial in x, y, z over Q. Terms are kept in strictly
/// decreasing grlex order with no zero coefficients.
class MPoly {
 public:
  using Term = std::pair<Monomial, Rational>;

  MPoly() = default;
  MPoly(const Rational& c);  // NOLINT(google-explicit-constructor)
  static MPoly variable(Var v);
  static MPoly monomial(const Monomial& m, const Rational& c);
  static MPoly from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  int total_degree() const;
  int degree_in(Var v) const;
  bool involves(Var v) const { return degree_in(v) > 0; }
  bool is_homogeneous() const;
  /// Leading term in grlex; the polynomial must be nonzero.
  const Term& leading() const;
  Rational coefficient(const Monomial& m) const;

  MPoly operator-() const;
  MPoly& operator+=(const MPoly& o);
  MPoly& operator-=(const MPoly& o);
  MPoly& operator*=(const MPoly& o);
  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  friend bool operator==(const MPoly&, const MPoly&) = default;

  MPoly scaled(const Rational& c) const;
  MPoly pow(unsigned e) const;
  /// Substitutes a constant for one variable.
  MPoly substitute(Var v, const Rational& value) const;
  /// Substitutes a polynomial for one variable.
  MPoly substitute(Var v, const MPoly& value) const;
  Rational evaluate(const Rational& x, const Rational& y, const Rational& z) const;
  MPoly derivative(Var v) const;

  /// Exact quotient if `divisor` divides this polynomial, else nullopt.
  std::optional<MPoly> divide_exact(const MPoly& divisor) const;

  /// Human form such as "x^2 - 2*x*y + 1/2*z^2".
  std::string to_string() const;

 private:
  void normalise();
  std::vector<Term> terms_;
};

/// Dense univariate polynomial over Q, coefficients low degree first.
class UPoly {
 public:
  UPoly() = default;
  UPoly(const Rational& c);  // NOLINT(google-explicit-constructor)
  explicit UPoly(std::vector<Rational> coeffs);
  static UPoly x();

  const std::vector<Rational>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const Rational& leading() const;
  UPoly monic() const;

  UPoly operator-() const;
  UPoly& operator+=(const UPoly& o);
  UPoly& operator-=(const UPoly& o);
  friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
  friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  friend bool operator==(const UPoly&, const UPoly&) = default;

  UPoly pow(unsigned e) const;
  UPoly derivative() const;
  /// Quotient and remainder; divisor must be nonzero.
  std::pair<UPoly, UPoly> divmod(const UPoly& d) const;
  Rational evaluate(const Rational& t) const;

  std::string to_string(char var) const;

 private:
  void trim();
  std::vector<Rational> c_;
};

/// Monic gcd (zero if both zero).
UPoly gcd(UPoly a, UPoly b);

/// Yun's algorithm: p = lc * prod_i f_i^i with f_i monic, squarefree and
/// pairwise coprime. Entry i-1 of the result is f_i (possibly 1).
std::vector<UPoly> squarefree_decomposition(const UPoly& p);

/// Rational function num/den on P^2 (or a chart). The denominator is
/// nonzero with leading coefficient 1.
class RatFunc {
 public:
  RatFunc() : num_(), den_(Rational(1)) {}
  RatFunc(const MPoly& p);  // NOLINT(google-explicit-constructor)
  RatFunc(MPoly num, MPoly den);

  const MPoly& numerator() const { return num_; }
  const MPoly& denominator() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
  RatFunc operator-() const { return RatFunc(-num_, den_); }
  RatFunc pow(long e) const;
  RatFunc substitute(Var v, const Rational& value) const;

  std::string to_string() const;

 private:
  MPoly num_;
  MPoly den_;
};

}  // namespace bmo
