#include "bmo/selftest.hpp"

#include <chrono>
#include <functional>
#include <map>
#include <random>
#include <stdexcept>

#include "bmo/parse.hpp"

namespace bmo::selftest {

namespace {

using report::Json;
using Clock = std::chrono::steady_clock;

Rational random_rational(std::mt19937_64& rng, long bound) {
  std::uniform_int_distribution<long> num(-bound, bound), den(1, bound);
  long n = 0;
  while (n == 0) n = num(rng);
  return Rational(Integer(n), Integer(den(rng)));
}

BasePoint random_generic_base(std::mt19937_64& rng, long bound) {
  std::uniform_int_distribution<long> d(-bound, bound);
  while (true) {
    long x = d(rng), y = d(rng), z = d(rng);
    if (x != 0 && y != 0 && z != 0) return BasePoint(Integer(x), Integer(y), Integer(z));
  }
}

CheckResult c1(std::uint64_t) {
  CheckResult r{"1", "Hilbert formula matches the conic oracle", false, "", 0, {}};
  auto t0 = Clock::now();
  auto values = small_rationals(50);
  const std::vector<Place> places{Place::real(), Place::prime(2), Place::prime(3), Place::prime(5), Place::prime(7)};
  SweepResult s = hilbert_oracle_sweep(values, places, Exec::Parallel);
  double secs = std::chrono::duration<double>(Clock::now() - t0).count();
  r.passed = s.discrepancies == 0 && secs < kHilbertSweepSeconds;
  r.detail = std::to_string(values.size()) + " rationals, " + std::to_string(s.checked) + " checks, " +
             std::to_string(s.discrepancies) + " discrepancies, " + std::to_string(secs) + " s (limit " +
             std::to_string(kHilbertSweepSeconds) + " s)";
  r.data = report::to_json(s);
  return r;
}

CheckResult c2(std::uint64_t seed) {
  CheckResult r{"2", "Hilbert reciprocity on random pairs", false, "", 0, {}};
  std::mt19937_64 rng(seed);
  std::size_t failures = 0;
  Json bad = Json::array();
  for (int i = 0; i < 1000; ++i) {
    Rational a = random_rational(rng, 1000000), b = random_rational(rng, 1000000);
    if (reciprocity_product(a, b).product != 1) {
      ++failures;
      if (bad.size() < 10) bad.push_back({a.to_string(), b.to_string()});
    }
  }
  r.passed = failures == 0;
  r.detail = "1000 pairs, " + std::to_string(failures) + " failures, seed " + std::to_string(seed);
  r.data = {{"failures", failures}, {"examples", bad}, {"seed", seed}};
  return r;
}

CheckResult c3(std::uint64_t) {
  CheckResult r{"3", "check-f on the reference form", false, "", 0, {}};
  FConditionReport rep = check_f_conditions(TernaryForm::reference_form());
  const std::array<std::string, 3> expected{"y-z", "x-z", "x-y"};
  bool roots = true;
  for (std::size_t i = 0; i < 3; ++i)
    roots = roots && rep.restriction_roots[i] && *rep.restriction_roots[i] == parse_polynomial(expected[i]);
  r.passed = rep.passes && roots;
  r.detail = std::string("passes=") + (rep.passes ? "true" : "false") + ", roots " +
             (rep.restriction_roots[0] ? rep.restriction_roots[0]->to_string() : "-") + ", " +
             (rep.restriction_roots[1] ? rep.restriction_roots[1]->to_string() : "-") + ", " +
             (rep.restriction_roots[2] ? rep.restriction_roots[2]->to_string() : "-");
  r.data = report::to_json(rep);
  return r;
}

CheckResult c4(std::uint64_t) {
  CheckResult r{"4", "Residues of alpha and the discriminant class along the axes", false, "", 0, {}};
  const TernaryForm f = TernaryForm::reference_form();
  bool ok = true;
  Json axes = Json::object();
  for (Var v : {Var::X, Var::Y, Var::Z}) {
    ResidueClass res = residue_of_symbol(QuaternionSymbolFn::alpha(), PrimeDivisor::axis(v));
    ResidueClass disc = discriminant_residue_class(f, v);
    ResidueClass want = coordinate_product_class(v);
    ok = ok && !res.trivial && disc == want;
    axes[std::string(1, var_name(v))] = {
        {"alpha_residue", report::to_json(res)}, {"discriminant", report::to_json(disc)}, {"expected", want.to_string()}};
    r.detail += std::string(r.detail.empty() ? "" : "; ") + var_name(v) + ": residue " + res.to_string() +
                ", discriminant " + disc.to_string();
  }
  r.passed = ok;
  r.data = axes;
  return r;
}

CheckResult c5(std::uint64_t) {
  CheckResult r{"5", "Local-solubility criteria match the isotropy oracle", false, "", 0, {}};
  const std::vector<long> coeffs{-5, -3, -2, -1, 1, 2, 3, 5};
  const std::vector<std::size_t> ranks{2, 3, 4};
  auto forms = diagonal_forms(coeffs, ranks);
  SweepResult s = isotropy_oracle_sweep(forms, 30, Exec::Parallel);
  r.passed = s.discrepancies == 0;
  r.detail = std::to_string(s.checked) + " forms, " + std::to_string(s.discrepancies) + " discrepancies";
  r.data = report::to_json(s);
  return r;
}

CheckResult c6(std::uint64_t seed) {
  CheckResult r{"6", "Witness pipeline on the reference form", false, "", 0, {}};
  auto t0 = Clock::now();
  Fourfold x(TernaryForm::reference_form());
  auto hits = search_rational_points(x, 1, 1);
  const FourfoldPoint p = x.point(BasePoint(1, 1, 1), {1, 1, 1, 1});
  bool found = false;
  for (const auto& h : hits) found = found || h.point == p;
  InvariantProfile prof = invariant_profile(x, p);
  bool profile_ok = prof.total == Inv::Zero;
  for (const auto& [v, i] : prof.entries) {
    Inv want = (v.is_real() || v == Place::prime(2)) ? Inv::Half : Inv::Zero;
    profile_ok = profile_ok && i == want;
  }
  profile_ok = profile_ok && prof.entries.count(Place::real()) && prof.entries.count(Place::prime(2));
  WAVerdict verdict = wa_verdict(x, 1, 1, seed);
  bool witness_ok = verdict.verdict == Verdict::FailsWithWitness && verdict.witness &&
                    verdict.witness->total == Inv::Half && reverify_witness(x, *verdict.witness);
  double secs = std::chrono::duration<double>(Clock::now() - t0).count();
  r.passed = found && profile_ok && witness_ok && secs < kWitnessPipelineSeconds;
  r.detail = std::string("point found=") + (found ? "yes" : "no") + ", profile " + (profile_ok ? "ok" : "wrong") +
             ", verdict " + to_string(verdict.verdict) + ", " + std::to_string(secs) + " s (limit " +
             std::to_string(kWitnessPipelineSeconds) + " s)";
  r.data = {{"profile", report::to_json(prof)}, {"verdict", report::to_json(verdict)}};
  return r;
}

CheckResult c7(std::uint64_t seed) {
  CheckResult r{"7", "Finite-place vanishing of the invariant", false, "", 0, {}};
  Fourfold x(TernaryForm::reference_form());
  bool ok = true;
  Json reports = Json::object();
  for (unsigned long p : {2ul, 3ul, 5ul, 7ul, 11ul, 13ul}) {
    const int depth = p == 2 ? 8 : 6;
    VanishingReport rep = verify_finite_vanishing(x, Place::prime(p), 500, depth, seed);
    bool produced = rep.tested == 500 && rep.all_reverified;
    ok = ok && produced && (p == 2 || rep.nonzero_count == 0);
    r.detail += std::string(r.detail.empty() ? "" : "; ") + "p=" + std::to_string(p) + ": " +
                std::to_string(rep.nonzero_count) + "/" + std::to_string(rep.tested) + " nonzero";
    reports[std::to_string(p)] = report::to_json(rep);
  }
  r.passed = ok;
  r.data = reports;
  return r;
}

CheckResult c8(std::uint64_t) {
  CheckResult r{"8", "Gram determinant of forms passing check-f", false, "", 0, {}};
  GramSweepResult s = gram_determinant_sweep(5, Exec::Parallel);
  r.passed = s.exceptions == 0 && s.passing > 0;
  r.detail = std::to_string(s.enumerated) + " forms, " + std::to_string(s.passing) + " passing, " +
             std::to_string(s.exceptions) + " exceptions";
  r.data = report::to_json(s);
  return r;
}

CheckResult c9(std::uint64_t seed) {
  CheckResult r{"9", "Representative independence and scaling invariance", false, "", 0, {}};
  std::mt19937_64 rng(seed);
  std::size_t checks = 0, failures = 0;
  Json bad = Json::array();
  for (int i = 0; i < 1000; ++i) {
    BasePoint b = random_generic_base(rng, 1000);
    Rational lambda = random_rational(rng, 100);
    std::array<Rational, 3> scaled{lambda * Rational(b.x()), lambda * Rational(b.y()), lambda * Rational(b.z())};
    for (const Place& v : invariant_places(b)) {
      ++checks;
      Inv i0 = beta_invariant(b, v);
      bool same = beta_invariant(b, v, Representative::YZ_ZX) == i0 &&
                  beta_invariant(b, v, Representative::ZX_XY) == i0 && inv_from_symbol(beta_symbol(scaled, v)) == i0;
      if (!same) {
        ++failures;
        if (bad.size() < 10) bad.push_back({{"base", report::to_json(b)}, {"place", v.to_string()}});
      }
    }
  }
  r.passed = failures == 0;
  r.detail = "1000 bases, " + std::to_string(checks) + " (base, place) checks, " + std::to_string(failures) +
             " failures, seed " + std::to_string(seed);
  r.data = {{"checks", checks}, {"failures", failures}, {"examples", bad}};
  return r;
}

CheckResult p1(std::uint64_t) {
  CheckResult r{"P1", "Search results: membership, reciprocity, real rule", false, "", 0, {}};
  Fourfold x(TernaryForm::reference_form());
  auto hits = search_rational_points(x, 3, 2);
  std::size_t generic = 0, failures = 0;
  for (const auto& h : hits) {
    bool ok = x.contains(h.point.base(), h.point.t());
    if (h.generic) {
      ++generic;
      InvariantProfile prof = invariant_profile(x, h.point);
      ArchimedeanRule rule = archimedean_rule(h.point.base(), x);
      ok = ok && prof.total == Inv::Zero && rule.agrees && prof.entries.at(Place::real()) == rule.value;
      if (rule.component == RealComponent::SameSign) ok = ok && rule.f_sign <= 0;
    }
    if (!ok) ++failures;
  }
  r.passed = failures == 0 && generic > 0;
  r.detail = std::to_string(hits.size()) + " points, " + std::to_string(generic) + " with xyz != 0, " +
             std::to_string(failures) + " failures";
  r.data = {{"points", hits.size()}, {"generic", generic}, {"failures", failures}};
  return r;
}

CheckResult p2(std::uint64_t seed) {
  CheckResult r{"P2", "Same-sign bases with F > 0 have real-anisotropic fibers", false, "", 0, {}};
  Fourfold x(TernaryForm::reference_form());
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> d(1, 1000);
  std::size_t positive = 0, failures = 0;
  for (int i = 0; i < 1000; ++i) {
    long s = (rng() & 1) ? 1 : -1;
    BasePoint b(Integer(s * d(rng)), Integer(s * d(rng)), Integer(s * d(rng)));
    if (x.form()(Rational(b.x()), Rational(b.y()), Rational(b.z())).sign() <= 0) continue;
    ++positive;
    if (is_isotropic_local(x.fiber_form(b), Place::real())) ++failures;
  }
  r.passed = failures == 0;
  r.detail = "1000 bases, " + std::to_string(positive) + " with F > 0, " + std::to_string(failures) + " failures";
  r.data = {{"positive", positive}, {"failures", failures}};
  return r;
}

CheckResult p3(std::uint64_t seed) {
  CheckResult r{"P3", "Fiber discriminant is the class of F", false, "", 0, {}};
  Fourfold x(TernaryForm::reference_form());
  std::mt19937_64 rng(seed);
  std::size_t checked = 0, failures = 0;
  for (int i = 0; i < 1000; ++i) {
    BasePoint b = random_generic_base(rng, 1000);
    Rational f = x.form()(Rational(b.x()), Rational(b.y()), Rational(b.z()));
    if (f.is_zero()) continue;
    ++checked;
    if (discriminant_class(x.fiber_form(b)) != square_class(f)) ++failures;
  }
  r.passed = failures == 0;
  r.detail = std::to_string(checked) + " bases, " + std::to_string(failures) + " failures";
  r.data = {{"checked", checked}, {"failures", failures}};
  return r;
}

const std::map<std::string, std::function<CheckResult(std::uint64_t)>>& table() {
  static const std::map<std::string, std::function<CheckResult(std::uint64_t)>> t{
      {"1", c1}, {"2", c2}, {"3", c3}, {"4", c4}, {"5", c5}, {"6", c6},
      {"7", c7}, {"8", c8}, {"9", c9}, {"P1", p1}, {"P2", p2}, {"P3", p3}};
  return t;
}

}  // namespace

std::vector<std::string> criterion_ids() { return {"1", "2", "3", "4", "5", "6", "7", "8", "9"}; }
std::vector<std::string> property_ids() { return {"P1", "P2", "P3"}; }

CheckResult run_check(const std::string& id, std::uint64_t seed) {
  auto it = table().find(id);
  if (it == table().end()) throw std::out_of_range("unknown check " + id);
  auto t0 = Clock::now();
  CheckResult r;
  try {
    r = it->second(seed);
  } catch (const std::exception& e) {
    r.id = id;
    r.passed = false;
    r.detail = std::string("exception: ") + e.what();
  }
  r.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  return r;
}

std::vector<CheckResult> run_all(std::uint64_t seed) {
  std::vector<CheckResult> out;
  for (const auto& id : criterion_ids()) out.push_back(run_check(id, seed));
  for (const auto& id : property_ids()) out.push_back(run_check(id, seed));
  return out;
}

}  // namespace bmo::selftest
