#pragma once

#include <compare>
#include <string>
#include <vector>

#include "bmo/rational.hpp"

namespace bmo {

/// Deterministic primality by trial division (desk-scale inputs).
bool is_prime(unsigned long n);

/// A place of Q: the real place or a finite prime p.
class Place {
 public:
  static Place real() { return Place(); }
  /// Throws DomainError unless p is prime.
  static Place prime(unsigned long p);

  bool is_real() const { return p_ == 0; }
  bool is_finite() const { return p_ != 0; }
  /// The residue characteristic; throws DomainError on the real place.
  unsigned long prime() const;

  /// "inf" or the decimal prime.
  std::string to_string() const;
  /// Inverse of to_string; also accepts "real".
  static Place parse(const std::string& text);

  // The real place sorts before every prime.
  friend auto operator<=>(const Place&, const Place&) = default;

 private:
  Place() = default;
  unsigned long p_ = 0;
};

/// Element of Q*/(Q*)^2, represented by its signed squarefree integer.
class SquareClass {
 public:
  SquareClass() : rep_(1) {}
  /// Throws DomainError unless rep is a nonzero squarefree integer.
  explicit SquareClass(const Integer& rep);

  const Integer& representative() const { return rep_; }
  bool is_trivial() const { return rep_ == 1; }

  friend SquareClass operator*(const SquareClass& a, const SquareClass& b);
  friend bool operator==(const SquareClass& a, const SquareClass& b) { return a.rep_ == b.rep_; }
  friend std::strong_ordering operator<=>(const SquareClass& a, const SquareClass& b) {
    int c = cmp(a.rep_, b.rep_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  std::string to_string() const { return rep_.get_str(); }

 private:
  struct Unchecked {};
  SquareClass(const Integer& rep, Unchecked) : rep_(rep) {}
  friend SquareClass square_class(const Rational& r);
  Integer rep_;
};

/// v with r = p^v u, u a p-adic unit. r must be nonzero.
long padic_valuation(const Rational& r, unsigned long p);
long padic_valuation(const Integer& n, unsigned long p);

/// Squarefree d with r/d a rational square. r must be nonzero.
SquareClass square_class(const Rational& r);

/// Legendre symbol (a/p) for an odd prime p, via the binary Jacobi algorithm.
int legendre_symbol(const Integer& a, unsigned long p);
int legendre_symbol(long a, unsigned long p);

/// Jacobi symbol (a/n) for odd n > 0. No primality check.
int jacobi_symbol(unsigned long a, unsigned long n);

/// Whether r is a square in the completion Q_v.
bool is_local_square(const Rational& r, const Place& v);

/// Distinct primes dividing |n| (n nonzero), ascending. Trial division.
std::vector<unsigned long> prime_divisors(const Integer& n);

/// Valuation and unit residue of a nonzero rational at p.
///
/// `residue` is the class of num'·den' where num = p^a num', den = p^b den';
/// it is reduced mod p for odd p and mod 8 for p = 2. Since den'^2 is a unit
/// square, this residue carries the quadratic character of the unit part.
struct LocalUnit {
  long valuation = 0;
  unsigned long residue = 0;
};
LocalUnit local_unit(const Rational& r, unsigned long p);

}  // namespace bmo
