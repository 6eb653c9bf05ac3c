#include "bmo/hilbert.hpp"

#include <set>

namespace bmo {

namespace {

// (-1)^((u-1)/2) and (-1)^((u^2-1)/8) exponents for an odd residue mod 8.
int eps2(unsigned long u) { return ((u - 1) / 2) & 1; }
int omega2(unsigned long u) { return ((u * u - 1) / 8) & 1; }

// p is already a validated odd prime here.
int legendre_residue(unsigned long r, unsigned long p) { return jacobi_symbol(r, p); }

unsigned long checked_power(unsigned long p, int depth) {
  unsigned long m = 1;
  for (int i = 0; i < depth; ++i) {
    if (m > (1UL << 28) / p) throw DomainError("oracle modulus too large");
    m *= p;
  }
  return m;
}

}  // namespace

int hilbert_symbol(const Rational& a, const Rational& b, const Place& v) {
  if (a.is_zero() || b.is_zero()) throw DomainError("hilbert symbol of zero");
  if (v.is_real()) return (a.sign() < 0 && b.sign() < 0) ? -1 : 1;

  const unsigned long p = v.prime();
  const LocalUnit ua = local_unit(a, p);
  const LocalUnit ub = local_unit(b, p);
  const long alpha = ua.valuation & 1;
  const long beta = ub.valuation & 1;

  if (p == 2) {
    int e = eps2(ua.residue) * eps2(ub.residue) + alpha * omega2(ub.residue) +
            beta * omega2(ua.residue);
    return (e & 1) ? -1 : 1;
  }

  int s = 1;
  if (alpha && beta && ((p - 1) / 2) % 2 == 1) s = -s;
  if (beta) s *= legendre_residue(ua.residue, p);
  if (alpha) s *= legendre_residue(ub.residue, p);
  return s;
}

int oracle_min_depth(unsigned long p) { return p == 2 ? 5 : 3; }

namespace oracle {

Normalised normalise(const Rational& r, unsigned long p, int depth) {
  if (r.is_zero()) throw DomainError("oracle input is zero");
  // r * den^2 is an integer in the same square class.
  Integer n = r.numerator() * r.denominator();
  Integer pz = p;
  Integer rest;
  long v = static_cast<long>(mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), pz.get_mpz_t()));
  const unsigned long m = checked_power(p, depth);
  return {static_cast<int>(v & 1), mpz_fdiv_ui(rest.get_mpz_t(), m)};
}

std::vector<char> square_table(unsigned long m) {
  std::vector<char> sq(m, 0);
  for (unsigned long z = 0; z < m; ++z) sq[(z * z) % m] = 1;
  return sq;
}

bool conic_search(const ConicKey& key, unsigned long p, int depth, const std::vector<char>& squares) {
  const unsigned long m = checked_power(p, depth);
  const unsigned long A = (key.ea ? p : 1) * key.u % m;
  const unsigned long B = (key.eb ? p : 1) * key.w % m;
  // Any primitive solution has x or y a unit (otherwise z^2 = 0 mod p with z
  // a unit). Scale the unit coordinate to 1.
  for (unsigned long y = 0; y < m; ++y) {
    unsigned long y2 = y * y % m;
    if (squares[(A + B * y2) % m]) return true;
  }
  for (unsigned long x = 0; x < m; x += p) {
    unsigned long x2 = x * x % m;
    if (squares[(A * x2 + B) % m]) return true;
  }
  return false;
}

}  // namespace oracle

int hilbert_oracle(const Rational& a, const Rational& b, const Place& v, int depth) {
  if (a.is_zero() || b.is_zero()) throw DomainError("hilbert oracle of zero");
  if (v.is_real()) {
    // z^2 - a x^2 - b y^2 is definite exactly when a and b are both negative.
    return (a.sign() < 0 && b.sign() < 0) ? -1 : 1;
  }
  const unsigned long p = v.prime();
  if (depth < oracle_min_depth(p))
    throw InconclusiveError("oracle depth " + std::to_string(depth) + " below lifting margin " +
                            std::to_string(oracle_min_depth(p)) + " at p=" + std::to_string(p));
  auto na = oracle::normalise(a, p, depth);
  auto nb = oracle::normalise(b, p, depth);
  const unsigned long m = checked_power(p, depth);
  auto squares = oracle::square_table(m);
  return oracle::conic_search({na.e, na.unit, nb.e, nb.unit}, p, depth, squares) ? 1 : -1;
}

std::vector<Place> relevant_places(std::span<const Rational> values) {
  std::set<unsigned long> primes{2};
  for (const auto& r : values) {
    if (r.is_zero()) throw DomainError("relevant places of zero");
    for (auto q : prime_divisors(r.numerator())) primes.insert(q);
    for (auto q : prime_divisors(r.denominator())) primes.insert(q);
  }
  std::vector<Place> out{Place::real()};
  for (auto q : primes) out.push_back(Place::prime(q));
  return out;
}

ReciprocityReport reciprocity_product(const Rational& a, const Rational& b) {
  const Rational both[] = {a, b};
  ReciprocityReport rep;
  for (const auto& v : relevant_places(both)) {
    int s = hilbert_symbol(a, b, v);
    rep.symbols.emplace(v, s);
    rep.product *= s;
  }
  return rep;
}

}  // namespace bmo
