#include "bmo/arith.hpp"

#include <climits>

namespace bmo {

namespace {

using u128 = unsigned __int128;

int jacobi(unsigned long a, unsigned long n) {
  a %= n;
  int t = 1;
  while (a != 0) {
    while ((a & 1UL) == 0) {
      a >>= 1;
      unsigned long r = n & 7UL;
      if (r == 3 || r == 5) t = -t;
    }
    std::swap(a, n);
    if ((a & 3UL) == 3 && (n & 3UL) == 3) t = -t;
    a %= n;
  }
  return n == 1 ? t : 0;
}

struct IntUnit {
  long valuation;
  unsigned long residue;
};

// n nonzero. residue is n / p^v reduced mod m.
IntUnit integer_unit(const mpz_t n, unsigned long p, unsigned long m) {
  unsigned long pk = 1;
  long v = 0;
  const u128 cap = static_cast<u128>(ULONG_MAX);
  while (true) {
    u128 next = static_cast<u128>(pk) * p;
    if (next * m > cap) break;
    if (!mpz_divisible_ui_p(n, static_cast<unsigned long>(next))) {
      unsigned long r = mpz_fdiv_ui(n, static_cast<unsigned long>(static_cast<u128>(pk) * m));
      return {v, r / pk};
    }
    pk = static_cast<unsigned long>(next);
    ++v;
  }
  mpz_t rest;
  mpz_init(rest);
  mpz_t pz;
  mpz_init_set_ui(pz, p);
  long extra = static_cast<long>(mpz_remove(rest, n, pz));
  unsigned long r = mpz_fdiv_ui(rest, m);
  mpz_clear(pz);
  mpz_clear(rest);
  return {extra, r};
}

Integer squarefree_part(const Integer& n) {
  Integer rest = abs(n);
  Integer out = 1;
  for (unsigned long q : prime_divisors(n)) {
    unsigned long e = 0;
    while (mpz_divisible_ui_p(rest.get_mpz_t(), q)) {
      mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), q);
      ++e;
    }
    if (e % 2 == 1) out *= q;
  }
  return sgn(n) < 0 ? Integer(-out) : out;
}

}  // namespace

bool is_prime(unsigned long n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (unsigned long d = 3; d <= n / d; d += 2)
    if (n % d == 0) return false;
  return true;
}

Place Place::prime(unsigned long p) {
  if (!is_prime(p)) throw DomainError("not a prime: " + std::to_string(p));
  Place out;
  out.p_ = p;
  return out;
}

unsigned long Place::prime() const {
  if (is_real()) throw DomainError("the real place has no residue characteristic");
  return p_;
}

std::string Place::to_string() const { return is_real() ? "inf" : std::to_string(p_); }

Place Place::parse(const std::string& text) {
  if (text == "inf" || text == "real" || text == "oo" || text == "R") return real();
  std::size_t used = 0;
  unsigned long p = 0;
  try {
    p = std::stoul(text, &used);
  } catch (const std::exception&) {
    throw DomainError("malformed place: " + text);
  }
  if (used != text.size()) throw DomainError("malformed place: " + text);
  return prime(p);
}

SquareClass::SquareClass(const Integer& rep) : rep_(rep) {
  if (rep == 0) throw DomainError("square class of zero");
  if (squarefree_part(rep) != rep) throw DomainError("not squarefree: " + rep.get_str());
}

SquareClass operator*(const SquareClass& a, const SquareClass& b) {
  return square_class(Rational(Integer(a.rep_ * b.rep_)));
}

long padic_valuation(const Integer& n, unsigned long p) {
  if (n == 0) throw DomainError("valuation of zero");
  if (!is_prime(p)) throw DomainError("not a prime: " + std::to_string(p));
  return integer_unit(n.get_mpz_t(), p, 1).valuation;
}

long padic_valuation(const Rational& r, unsigned long p) {
  if (r.is_zero()) throw DomainError("valuation of zero");
  if (!is_prime(p)) throw DomainError("not a prime: " + std::to_string(p));
  return integer_unit(r.numerator().get_mpz_t(), p, 1).valuation -
         integer_unit(r.denominator().get_mpz_t(), p, 1).valuation;
}

LocalUnit local_unit(const Rational& r, unsigned long p) {
  if (r.is_zero()) throw DomainError("unit part of zero");
  const unsigned long m = (p == 2) ? 8 : p;
  IntUnit n = integer_unit(r.numerator().get_mpz_t(), p, m);
  IntUnit d = integer_unit(r.denominator().get_mpz_t(), p, m);
  unsigned long res = static_cast<unsigned long>(static_cast<u128>(n.residue) * d.residue % m);
  return {n.valuation - d.valuation, res};
}

SquareClass square_class(const Rational& r) {
  if (r.is_zero()) throw DomainError("square class of zero");
  return SquareClass(squarefree_part(Integer(r.numerator() * r.denominator())),
                     SquareClass::Unchecked{});
}

int legendre_symbol(const Integer& a, unsigned long p) {
  if (p == 2 || !is_prime(p)) throw DomainError("legendre symbol needs an odd prime");
  return jacobi(mpz_fdiv_ui(a.get_mpz_t(), p), p);
}

int legendre_symbol(long a, unsigned long p) { return legendre_symbol(Integer(a), p); }

int jacobi_symbol(unsigned long a, unsigned long n) {
  if (n % 2 == 0) throw DomainError("jacobi symbol needs an odd modulus");
  return jacobi(a, n);
}

bool is_local_square(const Rational& r, const Place& v) {
  if (r.is_zero()) throw DomainError("local square test of zero");
  if (v.is_real()) return r.sign() > 0;
  const unsigned long p = v.prime();
  LocalUnit u = local_unit(r, p);
  if (u.valuation % 2 != 0) return false;
  if (p == 2) return u.residue == 1;
  return jacobi(u.residue, p) == 1;
}

std::vector<unsigned long> prime_divisors(const Integer& n) {
  if (n == 0) throw DomainError("prime divisors of zero");
  std::vector<unsigned long> out;
  Integer rest = abs(n);
  if (rest.fits_ulong_p()) {
    unsigned long m = rest.get_ui();
    for (unsigned long d = 2; d <= m / d; d += (d == 2 ? 1 : 2)) {
      if (m % d == 0) {
        out.push_back(d);
        while (m % d == 0) m /= d;
      }
    }
    if (m > 1) out.push_back(m);
    return out;
  }
  for (unsigned long d = 2; Integer(d) * d <= rest; d += (d == 2 ? 1 : 2)) {
    if (mpz_divisible_ui_p(rest.get_mpz_t(), d)) {
      out.push_back(d);
      while (mpz_divisible_ui_p(rest.get_mpz_t(), d)) mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), d);
      if (rest.fits_ulong_p()) {
        auto tail = prime_divisors(rest);
        out.insert(out.end(), tail.begin(), tail.end());
        return out;
      }
    }
  }
  if (rest > 1) {
    if (!rest.fits_ulong_p()) throw DomainError("prime factor exceeds 64 bits");
    out.push_back(rest.get_ui());
  }
  return out;
}

}  // namespace bmo
