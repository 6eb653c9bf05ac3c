#include <doctest.h>

#include <random>

#include "bmo/parse.hpp"
#include "bmo/poly.hpp"
#include "bmo/residues.hpp"

using namespace bmo;

namespace {

MPoly P(const char* s) { return parse_polynomial(s); }

const MPoly X = MPoly::variable(Var::X), Y = MPoly::variable(Var::Y), Z = MPoly::variable(Var::Z);

MPoly random_poly(std::mt19937_64& rng, int terms, int max_deg) {
  std::uniform_int_distribution<int> e(0, max_deg), c(-6, 6);
  MPoly p;
  for (int i = 0; i < terms; ++i) p += MPoly::monomial({e(rng), e(rng), e(rng)}, Rational(c(rng)));
  return p;
}

UPoly up(std::initializer_list<long> c) {
  std::vector<Rational> v;
  for (long x : c) v.emplace_back(x);
  return UPoly(v);
}

}  // namespace

TEST_CASE("grlex order") {
  CHECK(grlex_less({0, 0, 1}, {1, 0, 0}));
  CHECK(grlex_less({1, 0, 0}, {0, 2, 0}));
  CHECK(grlex_less({0, 1, 1}, {1, 0, 1}));
  CHECK_FALSE(grlex_less({1, 0, 0}, {1, 0, 0}));
  CHECK(P("z + y^2 + x").leading().first == Monomial{0, 2, 0});
}

TEST_CASE("parser") {
  CHECK(P("x^2+y^2+z^2-2*x*y-2*x*z-2*y*z") == X * X + Y * Y + Z * Z - (X * Y + X * Z + Y * Z).scaled(2));
  CHECK(P("2xy") == (X * Y).scaled(2));
  CHECK(P("-(x - y)^2") == -((X - Y) * (X - Y)));
  CHECK(P("1/2 x z") == (X * Z).scaled(Rational(Integer(1), Integer(2))));
  CHECK(P(" 3 ") == MPoly(Rational(3)));
  CHECK(P("x*x*x") == X.pow(3));
  for (const char* bad : {"", "x^", "x+*y", "(x+y", "2/0", "w", "x^99999"}) {
    INFO(bad);
    CHECK_THROWS_AS(P(bad), ParseError);
  }
  try {
    P("x + $");
    FAIL("no throw");
  } catch (const ParseError& e) {
    CHECK(e.position() == 4);
  }
}

TEST_CASE("MPoly arithmetic") {
  MPoly p = P("x^2 - 2*x*y");
  CHECK(p.to_string() == "x^2 - 2*x*y");
  CHECK((p - p).is_zero());
  CHECK(p.total_degree() == 2);
  CHECK(p.degree_in(Var::Y) == 1);
  CHECK(p.is_homogeneous());
  CHECK_FALSE(P("x + 1").is_homogeneous());
  CHECK(p.substitute(Var::X, Rational(1)) == P("1 - 2*y"));
  CHECK(p.substitute(Var::X, Y) == P("-y^2"));
  CHECK(p.evaluate(2, 3, 5) == Rational(-8));
  CHECK(p.derivative(Var::X) == P("2x - 2y"));
  CHECK(P("x^2 - y^2").divide_exact(P("x - y")) == P("x + y"));
  CHECK_FALSE(P("x^2 + y^2").divide_exact(P("x - y")));
  CHECK(P("0").is_zero());
}

TEST_CASE("multiplication is commutative and distributive") {
  std::mt19937_64 rng(2);
  for (int i = 0; i < 100; ++i) {
    MPoly a = random_poly(rng, 4, 3), b = random_poly(rng, 4, 3), c = random_poly(rng, 3, 2);
    CHECK(a * b == b * a);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a * b).evaluate(2, -1, 3) == a.evaluate(2, -1, 3) * b.evaluate(2, -1, 3));
  }
}

TEST_CASE("polynomial_square_root examples") {
  CHECK(polynomial_square_root(P("y^2 - 2*y*z + z^2")) == P("y - z"));
  CHECK_FALSE(polynomial_square_root(P("x^2 + y^2")));
  CHECK(polynomial_square_root(P("4*x^2*y^2")) == P("2*x*y"));
  CHECK(polynomial_square_root(P("0")) == P("0"));
  CHECK(polynomial_square_root(P("9/4")) == P("3/2"));
  CHECK_FALSE(polynomial_square_root(P("2")));
  CHECK_FALSE(polynomial_square_root(P("-x^2")));
}

TEST_CASE("polynomial_square_root recovers random squares") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 500; ++i) {
    MPoly g = random_poly(rng, 1 + i % 5, 3);
    if (g.is_zero()) continue;
    auto r = polynomial_square_root(g * g);
    REQUIRE(r);
    CHECK((*r == g || *r == -g));
    CHECK(*r * *r == g * g);
  }
}

TEST_CASE("UPoly division, gcd and Yun") {
  UPoly f = up({-1, 0, 1});  // t^2 - 1
  auto [qq, rr] = f.divmod(up({-1, 1}));
  CHECK(qq == up({1, 1}));
  CHECK(rr.is_zero());
  CHECK(gcd(up({-1, 0, 1}), up({1, 2, 1})) == up({1, 1}));
  CHECK(gcd(UPoly(), UPoly()).is_zero());

  // 3 (t - 1) (t + 2)^2 t^3
  UPoly t = UPoly::x();
  UPoly a = up({-1, 1}), b = up({2, 1});
  UPoly p = UPoly(Rational(3)) * a * b.pow(2) * t.pow(3);
  auto sf = squarefree_decomposition(p);
  REQUIRE(sf.size() == 3);
  CHECK(sf[0] == a);
  CHECK(sf[1] == b);
  CHECK(sf[2] == t);
  UPoly back(Rational(1));
  for (std::size_t i = 0; i < sf.size(); ++i) back = back * sf[i].pow(static_cast<unsigned>(i + 1));
  CHECK(back.monic() == p.monic());
}

TEST_CASE("RatFunc normalisation") {
  RatFunc f(X, Z.scaled(-2));
  CHECK(f.denominator().leading().second == Rational(1));
  CHECK(f.numerator() == X.scaled(Rational(Integer(-1), Integer(2))));
  RatFunc g = f * RatFunc(Z, X);
  CHECK(g.numerator().evaluate(2, 3, 5) / g.denominator().evaluate(2, 3, 5) == Rational(Integer(-1), Integer(2)));
  RatFunc h = f.pow(-2);
  CHECK(h.numerator().evaluate(1, 1, 1) / h.denominator().evaluate(1, 1, 1) == Rational(4));
  CHECK_THROWS_AS(RatFunc(X, MPoly()), DomainError);
  CHECK((f / f).numerator() == (f / f).denominator());
}
