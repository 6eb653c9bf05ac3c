#include <doctest.h>

#include <random>

#include "bmo/brauer_manin.hpp"
#include "bmo/parse.hpp"
#include "oracles.hpp"

using namespace bmo;

namespace {

Fourfold X(const char* s) { return Fourfold(TernaryForm::from_polynomial(parse_polynomial(s))); }

const char* kSecond = "x^2+4*y^2+z^2-4*x*y-2*x*z-4*y*z";
const char* kThird = "x^2+y^2+z^2+2*x*y+2*x*z-2*y*z";

std::vector<BasePoint> random_generic_bases(std::uint64_t seed, int n, long bound) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> d(-bound, bound);
  std::vector<BasePoint> out;
  while (static_cast<int>(out.size()) < n) {
    long a = d(rng), b = d(rng), c = d(rng);
    if (a && b && c) out.emplace_back(a, b, c);
  }
  return out;
}

}  // namespace

TEST_CASE("Inv arithmetic") {
  CHECK(to_string(Inv::Zero) == "0");
  CHECK(to_string(Inv::Half) == "1/2");
  CHECK(inv_from_symbol(1) == Inv::Zero);
  CHECK(inv_from_symbol(-1) == Inv::Half);
  CHECK(Inv::Half + Inv::Half == Inv::Zero);
  CHECK(Inv::Half + Inv::Zero == Inv::Half);
}

TEST_CASE("beta invariant examples") {
  BasePoint one(1, 1, 1);
  CHECK(beta_invariant(one, Place::real()) == Inv::Half);
  CHECK(beta_invariant(one, Place::prime(2)) == Inv::Half);
  CHECK(beta_invariant(one, Place::prime(7)) == Inv::Zero);
  CHECK(beta_invariant(BasePoint(1, -1, 1), Place::real()) == Inv::Zero);
  CHECK_THROWS_AS(beta_invariant(BasePoint(1, 0, 1), Place::real()), BoundaryBaseError);
  CHECK_THROWS_AS(beta_symbol({1, 1, 0}, Place::prime(3)), BoundaryBaseError);
}

TEST_CASE("beta invariant agrees with the brute-force Hilbert symbol") {
  for (const auto& b : random_generic_bases(31, 150, 60)) {
    Rational a = -Rational(b.x()) * Rational(b.y()), c = -Rational(b.y()) * Rational(b.z());
    for (unsigned long p : {2UL, 3UL, 5UL, 7UL}) {
      int expect = testoracle::hilbert(a, c, p);
      CHECK(beta_invariant(b, Place::prime(p)) == inv_from_symbol(expect));
    }
  }
}

TEST_CASE("representatives agree and scaling is invisible") {
  std::mt19937_64 rng(32);
  std::uniform_int_distribution<long> lam(-30, 30);
  for (const auto& b : random_generic_bases(33, 300, 200)) {
    std::array<Rational, 3> raw{Rational(b.x()), Rational(b.y()), Rational(b.z())};
    long l = 0;
    while (!l) l = lam(rng);
    Rational s(Integer(l), Integer(1 + (l * l) % 7));
    std::array<Rational, 3> scaled{s * raw[0], s * raw[1], s * raw[2]};
    for (Place v : {Place::real(), Place::prime(2), Place::prime(3), Place::prime(5), Place::prime(11)}) {
      int r0 = beta_symbol(raw, v, Representative::XY_YZ);
      CHECK(beta_symbol(raw, v, Representative::YZ_ZX) == r0);
      CHECK(beta_symbol(raw, v, Representative::ZX_XY) == r0);
      CHECK(beta_symbol(scaled, v) == r0);
    }
  }
}

TEST_CASE("invariant profile at the basic point") {
  Fourfold x(TernaryForm::reference_form());
  auto prof = invariant_profile(x, x.point(BasePoint(1, 1, 1), {1, 1, 1, 1}));
  CHECK(prof.entries.size() == 2);
  CHECK(prof.entries.at(Place::real()) == Inv::Half);
  CHECK(prof.entries.at(Place::prime(2)) == Inv::Half);
  CHECK(prof.total == Inv::Zero);
  CHECK(invariant_places(BasePoint(6, 5, -7)) ==
        std::vector<Place>{Place::real(), Place::prime(2), Place::prime(3), Place::prime(5), Place::prime(7)});
}

TEST_CASE("a rational point with nonzero invariant at 3") {
  Fourfold x(TernaryForm::reference_form());
  // F(3,1,1) = 9 + 1 + 1 - 6 - 6 - 2 = -3 and 3 t1^2 + 3 t2^2 + t3^2 - 3 t4^2 = 0 at (1,0,0,1).
  auto p = x.point(BasePoint(3, 1, 1), {1, 0, 0, 1});
  auto prof = invariant_profile(x, p);
  CHECK(prof.entries.at(Place::real()) == Inv::Half);
  CHECK(prof.entries.at(Place::prime(2)) == Inv::Zero);
  CHECK(prof.entries.at(Place::prime(3)) == Inv::Half);
  CHECK(prof.total == Inv::Zero);
  CHECK(testoracle::hilbert(-3, -1, 3) == -1);
}

TEST_CASE("profile errors") {
  Fourfold x(TernaryForm::reference_form());
  auto hits = search_rational_points(x, 1, 1);
  bool boundary = false;
  for (const auto& h : hits)
    if (!h.generic) {
      boundary = true;
      CHECK_THROWS_AS(invariant_profile(x, h.point), BoundaryBaseError);
      break;
    }
  CHECK(boundary);
}

TEST_CASE("reciprocity and the archimedean rule on rational points") {
  for (const char* f : {"x^2+y^2+z^2-2*x*y-2*x*z-2*y*z", kSecond, kThird}) {
    Fourfold x = X(f);
    REQUIRE(x.conditions().passes);
    int generic = 0;
    for (const auto& h : search_rational_points(x, 3, 2)) {
      if (!h.generic) continue;
      ++generic;
      auto prof = invariant_profile(x, h.point);
      INFO(f, " ", h.point.to_string());
      CHECK(prof.total == Inv::Zero);
      auto rule = archimedean_rule(h.point.base(), x);
      CHECK(rule.agrees);
      CHECK(rule.value == prof.entries.at(Place::real()));
      CHECK((rule.value == Inv::Half) == (rule.component == RealComponent::SameSign));
    }
    CHECK(generic > 0);
  }
}

TEST_CASE("archimedean rule examples") {
  Fourfold x(TernaryForm::reference_form());
  auto r = archimedean_rule(BasePoint(1, 1, 1), x);
  CHECK(r.value == Inv::Half);
  CHECK(r.component == RealComponent::SameSign);
  CHECK(r.f_sign == -1);
  CHECK(r.agrees);
  auto m = archimedean_rule(BasePoint(1, -2, 3), x);
  CHECK(m.value == Inv::Zero);
  CHECK(m.component == RealComponent::Mixed);
  CHECK(archimedean_rule(BasePoint(-1, -1, -1), x).value == Inv::Half);
}

TEST_CASE("perturbed evaluation near the boundary") {
  Fourfold x(TernaryForm::reference_form());
  for (Place v : {Place::real(), Place::prime(2), Place::prime(3)}) {
    auto pi = perturbed_beta_invariant(x, BasePoint(1, 1, 0), v);
    CHECK_FALSE(pi.perturbed.on_boundary());
    CHECK(is_isotropic_local(x.fiber_form(pi.perturbed), v));
    CHECK(pi.value == beta_invariant(pi.perturbed, v));
    CHECK_FALSE(pi.distance.empty());
  }
}

TEST_CASE("finite vanishing reports") {
  Fourfold x(TernaryForm::reference_form());
  for (unsigned long p : {5UL, 13UL}) {
    auto r = verify_finite_vanishing(x, Place::prime(p), 100, 6, 1);
    CHECK(r.tested == 100);
    CHECK(r.nonzero_count == 0);
  }
  // Every reported counterexample must be genuine: soluble fiber and a
  // symbol of -1, both recomputed by brute force.
  for (unsigned long p : {2UL, 3UL, 7UL}) {
    auto r = verify_finite_vanishing(x, Place::prime(p), 100, p == 2 ? 8 : 6, 1);
    CHECK(r.all_reverified);
    CHECK(r.nonzero_count == r.counterexamples.size());
    for (const auto& e : r.counterexamples) {
      CHECK(e.symbol == -1);
      CHECK(testoracle::hilbert(e.a, e.b, p) == -1);
      auto c = x.fiber_coefficients(e.base);
      CHECK(testoracle::local_isotropic({c.begin(), c.end()}, p));
    }
  }
  auto again = verify_finite_vanishing(x, Place::prime(3), 100, 6, 1);
  auto first = verify_finite_vanishing(x, Place::prime(3), 100, 6, 1);
  CHECK(again.nonzero_count == first.nonzero_count);
  CHECK_THROWS_AS(verify_finite_vanishing(X("x^2+y^2+z^2"), Place::prime(3), 10, 6, 1), PreconditionError);
}

TEST_CASE("obstruction witness") {
  for (const char* f : {"x^2+y^2+z^2-2*x*y-2*x*z-2*y*z", kSecond}) {
    Fourfold x = X(f);
    auto w = obstruction_witness(x, 2, 2, 1);
    INFO(f, " ", w.diagnostic);
    REQUIRE(w.witness.has_value());
    CHECK(w.witness->total == Inv::Half);
    CHECK(w.witness->verified);
    CHECK(reverify_witness(x, *w.witness));
    for (const auto& c : w.witness->components) CHECK(c.fiber_soluble);
    // Flipping one component breaks the sum.
    auto bad = *w.witness;
    bad.components.front().invariant = bad.components.front().invariant + Inv::Half;
    CHECK_FALSE(reverify_witness(x, bad));
  }
  Fourfold x(TernaryForm::reference_form());
  auto w = obstruction_witness(x, 1, 1, 1);
  REQUIRE(w.witness.has_value());
  CHECK(w.witness->anchor == x.point(BasePoint(1, 1, 1), {1, 1, 1, 1}));
  CHECK_THROWS_AS(obstruction_witness(X("x^2+y^2+z^2"), 1, 1, 1), PreconditionError);
}

TEST_CASE("verdicts") {
  auto v = wa_verdict(Fourfold(TernaryForm::reference_form()));
  CHECK(v.verdict == Verdict::FailsWithWitness);
  CHECK(v.signature.positive == 2);
  CHECK(v.signature.negative == 1);
  CHECK(v.signature.zero == 0);
  REQUIRE(v.witness.has_value());
  CHECK(v.fcond.passes);

  auto sq = wa_verdict(X("(x+y+z)^2"));
  CHECK(sq.verdict == Verdict::NotApplicable);
  CHECK_FALSE(sq.fcond.passes);
  CHECK(sq.signature.zero == 2);
  auto pos = wa_verdict(X("x^2+y^2+z^2"));
  CHECK(pos.verdict == Verdict::NotApplicable);
  CHECK(pos.signature.positive == 3);
  // (x + y + z)^2 - 4yz is positive on the open octants, so the real
  // invariant never takes the value 1/2.
  auto third = wa_verdict(X(kThird), 2, 2);
  CHECK(third.fcond.passes);
  CHECK(third.verdict == Verdict::ComponentsOnly);
  CHECK_FALSE(third.witness.has_value());
  CHECK_FALSE(obstruction_witness(X(kThird), 2, 2, 1).witness.has_value());
  for (const auto& h : search_rational_points(X(kThird), 3, 2))
    if (h.generic) CHECK(real_component(h.point.base()) == RealComponent::Mixed);
  CHECK(wa_verdict(X(kSecond), 2, 2).verdict == Verdict::FailsWithWitness);
  CHECK(to_string(Verdict::FailsWithWitness) != to_string(Verdict::Holds));
}
