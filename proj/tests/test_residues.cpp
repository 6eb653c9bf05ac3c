#include <doctest.h>

#include <random>

#include "bmo/parse.hpp"
#include "bmo/residues.hpp"

using namespace bmo;

namespace {

MPoly P(const char* s) { return parse_polynomial(s); }
TernaryForm T(const char* s) { return TernaryForm::from_polynomial(P(s)); }

const char* kRef = "x^2+y^2+z^2-2*x*y-2*x*z-2*y*z";

ResidueClass times(const ResidueClass& r, const ResidueClass& s) {
  UPoly c(Rational(Integer(r.constant.representative() * s.constant.representative())));
  return residue_class_of(c * r.odd_part() * s.odd_part(), r.variable);
}

// Degree-0 function c * x^m * (y + k z)^j / z^(m + j).
RatFunc random_entry(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> e(0, 3), k(-3, 3), c(-7, 7);
  int m = e(rng), j = e(rng) % 2;
  long cc = 0;
  while (cc == 0) cc = c(rng);
  MPoly lin = P("y") + MPoly::variable(Var::Z).scaled(Rational(k(rng)));
  MPoly num = MPoly(Rational(cc)) * MPoly::variable(Var::X).pow(static_cast<unsigned>(m)) * lin.pow(static_cast<unsigned>(j));
  return RatFunc(num, MPoly::variable(Var::Z).pow(static_cast<unsigned>(m + j)));
}

}  // namespace

TEST_CASE("TernaryForm") {
  TernaryForm h = TernaryForm::reference_form();
  CHECK(h == T(kRef));
  CHECK(h.determinant() == Rational(-4));
  CHECK(h.gram().determinant() == h.determinant());
  CHECK(h(1, 1, 1) == Rational(-3));
  CHECK(h.partial(Var::X, 1, 2, 3) == Rational(2 - 4 - 6));
  CHECK(h.polynomial() == P(kRef));
  CHECK_THROWS_AS(T("x^3"), DomainError);
  CHECK_THROWS_AS(T("x + y"), DomainError);
  CHECK(T("0") == TernaryForm());
}

TEST_CASE("restrict_to_axis") {
  CHECK(restrict_to_axis(TernaryForm::reference_form(), Var::X) == P("y^2 - 2*y*z + z^2"));
  CHECK(restrict_to_axis(T("x^2+y^2+z^2"), Var::Z) == P("x^2 + y^2"));
  CHECK(restrict_to_axis(T("2*x*y"), Var::Z) == P("2*x*y"));
}

TEST_CASE("check_f_conditions") {
  auto h = check_f_conditions(TernaryForm::reference_form());
  CHECK(h.passes);
  CHECK(h.nondegenerate);
  CHECK(h.f_not_square);
  CHECK(h.restriction_roots[0] == P("y - z"));
  CHECK(h.restriction_roots[1] == P("x - z"));
  CHECK(h.restriction_roots[2] == P("x - y"));

  auto sq = check_f_conditions(T("x^2+y^2+z^2+2*x*y+2*x*z+2*y*z"));
  CHECK_FALSE(sq.passes);
  CHECK_FALSE(sq.f_not_square);
  CHECK_FALSE(sq.nondegenerate);
  CHECK(sq.f_root == P("x + y + z"));

  auto diag = check_f_conditions(T("x^2+y^2+z^2"));
  CHECK_FALSE(diag.passes);
  CHECK(diag.nondegenerate);
  for (bool b : diag.restriction_square) CHECK_FALSE(b);
}

TEST_CASE("divisor_valuation") {
  PrimeDivisor dx = PrimeDivisor::axis(Var::X);
  CHECK(divisor_valuation(RatFunc(P("x")), dx) == 1);
  CHECK(divisor_valuation(RatFunc(P("y"), P("x^2")), dx) == -2);
  CHECK(divisor_valuation(RatFunc(P("x^2 + y^2")), dx) == 0);
  CHECK(divisor_valuation(RatFunc(P("x^3*z"), P("z^4")), dx) == 3);
  CHECK_THROWS_AS(divisor_valuation(RatFunc(), dx), DomainError);
  PrimeDivisor line(Chart::Z, P("x - y"));
  CHECK(divisor_valuation(RatFunc(P("x^2 - 2*x*y + y^2")), line) == 2);
}

TEST_CASE("PrimeDivisor validation") {
  CHECK_THROWS_AS(PrimeDivisor(Chart::Z, P("3")), DomainError);
  CHECK_THROWS_AS(PrimeDivisor(Chart::Z, P("z")), DomainError);
  CHECK(PrimeDivisor::axis(Var::Z).chart() == Chart::X);
  CHECK(PrimeDivisor::axis(Var::X).chart() == Chart::Z);
}

TEST_CASE("residue_of_symbol examples") {
  QuaternionSymbolFn s(RatFunc(P("-x")), RatFunc(P("-y")));
  ResidueClass rx = residue_of_symbol(s, PrimeDivisor::axis(Var::X));
  CHECK_FALSE(rx.trivial);
  CHECK(rx.variable == Var::Y);
  CHECK(rx.to_string() == "-y");
  ResidueClass ry = residue_of_symbol(s, PrimeDivisor::axis(Var::Y));
  CHECK_FALSE(ry.trivial);
  CHECK(ry.to_string() == "-x");

  QuaternionSymbolFn units(RatFunc(P("y + 1")), RatFunc(P("2")));
  CHECK(residue_of_symbol(units, PrimeDivisor::axis(Var::X)).trivial);

  // Valuations zero along a conic: trivial straight from the formula.
  PrimeDivisor conic(Chart::Z, P("x^2 + y^2 - 1"));
  CHECK(residue_of_symbol(units, conic).trivial);
  QuaternionSymbolFn ramified(RatFunc(P("x^2 + y^2 - 1")), RatFunc(P("2")));
  CHECK_THROWS_AS(residue_of_symbol(ramified, conic), UnsupportedDivisor);
}

TEST_CASE("alpha ramifies along every axis") {
  for (Var v : {Var::X, Var::Y, Var::Z}) {
    ResidueClass r = residue_of_symbol(QuaternionSymbolFn::alpha(), PrimeDivisor::axis(v));
    CHECK_FALSE(r.trivial);
    CHECK(r == coordinate_product_class(v));
  }
}

TEST_CASE("discriminant_residue_class") {
  TernaryForm h = TernaryForm::reference_form();
  CHECK(discriminant_residue_class(h, Var::X).to_string() == "-y");
  CHECK(discriminant_residue_class(h, Var::Y).to_string() == "-x");
  CHECK(discriminant_residue_class(h, Var::Z).to_string() == "-y");
  for (Var v : {Var::X, Var::Y, Var::Z}) CHECK(discriminant_residue_class(h, v) == coordinate_product_class(v));
  CHECK_THROWS_AS(discriminant_residue_class(T("x^2+y^2+z^2"), Var::X), PreconditionError);
}

TEST_CASE("residue is bilinear along {x = 0}") {
  std::mt19937_64 rng(9);
  PrimeDivisor d = PrimeDivisor::axis(Var::X);
  for (int i = 0; i < 200; ++i) {
    RatFunc a1 = random_entry(rng), a2 = random_entry(rng), b = random_entry(rng);
    ResidueClass lhs = residue_of_symbol(QuaternionSymbolFn(a1 * a2, b), d);
    ResidueClass rhs =
        times(residue_of_symbol(QuaternionSymbolFn(a1, b), d), residue_of_symbol(QuaternionSymbolFn(a2, b), d));
    INFO(a1.to_string(), " ", a2.to_string(), " ", b.to_string());
    CHECK(lhs == rhs);
  }
}

TEST_CASE("residue_class_of") {
  UPoly t = UPoly::x();
  // 4 t^2 (t - 1)^3 ~ (t - 1)
  UPoly p = UPoly(Rational(4)) * t.pow(2) * (t - UPoly(Rational(1))).pow(3);
  ResidueClass r = residue_class_of(p, Var::Y);
  CHECK(r.constant.is_trivial());
  REQUIRE(r.factors.size() == 1);
  CHECK(r.factors[0] == t - UPoly(Rational(1)));
  CHECK(residue_class_of(UPoly(Rational(9)), Var::Y).trivial);
  CHECK_FALSE(residue_class_of(UPoly(Rational(-9)), Var::Y).trivial);
}
