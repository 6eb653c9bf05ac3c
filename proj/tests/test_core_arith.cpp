#include <doctest.h>

#include <random>

#include "bmo/arith.hpp"
#include "oracles.hpp"

using namespace bmo;

namespace {

Rational q(long n, long d = 1) { return Rational(Integer(n), Integer(d)); }

std::vector<Rational> corpus(long bound) {
  std::vector<Rational> out;
  for (long n = -bound; n <= bound; ++n)
    for (long d = 1; d <= bound; ++d)
      if (n != 0 && std::gcd(n, d) == 1) out.push_back(q(n, d));
  return out;
}

}  // namespace

TEST_CASE("rational normal form") {
  Rational r(Integer(6), Integer(-4));
  CHECK(r.numerator() == -3);
  CHECK(r.denominator() == 2);
  CHECK(Rational(0).denominator() == 1);
  CHECK(q(1, 3) + q(1, 6) == q(1, 2));
  CHECK(q(2, 3) * q(3, 2) == Rational(1));
  CHECK(q(-2, 3).pow(-2) == q(9, 4));
  CHECK(Rational::parse("-5/8") == q(-5, 8));
  CHECK(Rational::parse("12") == Rational(12));
  CHECK_THROWS_AS(Rational::parse("1/0"), DomainError);
  CHECK_THROWS_AS(Rational::parse("1/-2"), DomainError);
  CHECK_THROWS_AS(Rational::parse("abc"), DomainError);
  CHECK_THROWS_AS(q(1) / Rational(0), DomainError);
  CHECK_THROWS_AS(Rational(Integer(1), Integer(0)), DomainError);
}

TEST_CASE("places") {
  CHECK(Place::real().is_real());
  CHECK(Place::prime(7).prime() == 7);
  CHECK_THROWS_AS(Place::prime(9), DomainError);
  CHECK_THROWS_AS(Place::prime(1), DomainError);
  CHECK_THROWS_AS(Place::real().prime(), DomainError);
  CHECK(Place::parse("inf") == Place::real());
  CHECK(Place::parse("real") == Place::real());
  CHECK(Place::parse("13") == Place::prime(13));
  CHECK_THROWS_AS(Place::parse("13x"), DomainError);
  CHECK(Place::real() < Place::prime(2));
  CHECK(Place::prime(2).to_string() == "2");
  CHECK(Place::real().to_string() == "inf");
}

TEST_CASE("padic_valuation") {
  CHECK(padic_valuation(Rational(12), 2) == 2);
  CHECK(padic_valuation(q(5, 8), 2) == -3);
  CHECK(padic_valuation(q(7, 3), 5) == 0);
  CHECK_THROWS_AS(padic_valuation(Rational(0), 2), DomainError);
  CHECK_THROWS_AS(padic_valuation(Rational(3), 4), DomainError);
}

TEST_CASE("padic_valuation is additive") {
  auto c = corpus(12);
  for (unsigned long p : {2ul, 3ul, 5ul, 7ul, 11ul})
    for (std::size_t i = 0; i < c.size(); i += 7)
      for (std::size_t j = 0; j < c.size(); j += 11)
        CHECK(padic_valuation(c[i] * c[j], p) == padic_valuation(c[i], p) + padic_valuation(c[j], p));
}

TEST_CASE("square_class") {
  CHECK(square_class(Rational(18)).representative() == 2);
  CHECK(square_class(q(-4, 9)).representative() == -1);
  CHECK(square_class(Rational(1)).is_trivial());
  CHECK(square_class(q(3, 12)).representative() == 1);
  CHECK(square_class(q(-50, 3)).representative() == -6);
  CHECK_THROWS_AS(square_class(Rational(0)), DomainError);
  CHECK_THROWS_AS(SquareClass(Integer(12)), DomainError);
  CHECK_THROWS_AS(SquareClass(Integer(0)), DomainError);
}

TEST_CASE("square_class is multiplicative") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> n(-500, 500), d(1, 500);
  for (int i = 0; i < 1000; ++i) {
    long a = 0, b = 0;
    while (a == 0) a = n(rng);
    while (b == 0) b = n(rng);
    Rational r = q(a, d(rng)), s = q(b, d(rng));
    CHECK(square_class(r) * square_class(s) == square_class(r * s));
  }
}

TEST_CASE("legendre_symbol") {
  CHECK(legendre_symbol(2L, 7) == 1);
  CHECK(legendre_symbol(2L, 5) == -1);
  CHECK(legendre_symbol(9L, 11) == 1);
  CHECK(legendre_symbol(22L, 11) == 0);
  CHECK(legendre_symbol(-1L, 3) == -1);
  CHECK_THROWS_AS(legendre_symbol(3L, 2), DomainError);
  CHECK_THROWS_AS(legendre_symbol(3L, 9), DomainError);
  for (unsigned long p : {3ul, 5ul, 7ul, 11ul, 13ul, 97ul})
    for (long a = -60; a <= 60; ++a) {
      unsigned long r = testoracle::mod(Integer(a), p);
      int want = r == 0 ? 0 : (testoracle::is_square_mod(r, p) ? 1 : -1);
      CHECK(legendre_symbol(a, p) == want);
      CHECK(legendre_symbol(Integer(a), p) == want);
    }
}

TEST_CASE("is_local_square") {
  CHECK(is_local_square(Rational(17), Place::prime(2)));
  CHECK(is_local_square(Rational(4), Place::prime(5)));
  CHECK_FALSE(is_local_square(Rational(-3), Place::real()));
  CHECK_FALSE(is_local_square(Rational(5), Place::prime(2)));
  CHECK_FALSE(is_local_square(Rational(2), Place::prime(2)));
  CHECK(is_local_square(q(1, 4), Place::prime(2)));
  CHECK_THROWS_AS(is_local_square(Rational(0), Place::prime(3)), DomainError);
}

TEST_CASE("is_local_square matches exhaustive search") {
  for (const auto& r : corpus(50))
    for (unsigned long p : {2ul, 3ul, 5ul, 7ul}) {
      INFO(r.to_string(), " at ", p);
      CHECK(is_local_square(r, Place::prime(p)) == testoracle::local_square(r, p));
    }
}

TEST_CASE("squares are local squares everywhere") {
  for (const auto& r : corpus(15)) {
    CHECK(is_local_square(r * r, Place::real()));
    for (unsigned long p : {2ul, 3ul, 5ul, 7ul, 11ul, 13ul}) CHECK(is_local_square(r * r, Place::prime(p)));
  }
}

TEST_CASE("prime_divisors and local_unit") {
  CHECK(prime_divisors(Integer(360)) == std::vector<unsigned long>{2, 3, 5});
  CHECK(prime_divisors(Integer(-49)) == std::vector<unsigned long>{7});
  CHECK(prime_divisors(Integer(1)).empty());
  LocalUnit u = local_unit(q(-12, 5), 2);
  CHECK(u.valuation == 2);
  CHECK(u.residue == testoracle::mod(Integer(-3 * 5), 8));
  LocalUnit w = local_unit(q(7, 9), 3);
  CHECK(w.valuation == -2);
  CHECK(w.residue == 1);
}
