// bmo: command-line front end.
#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <sstream>

#include "bmo/brauer_manin.hpp"
#include "bmo/parse.hpp"
#include "bmo/report.hpp"
#include "bmo/selftest.hpp"

using namespace bmo;
using report::Json;

namespace {

enum Exit { kOk = 0, kInternal = 1, kParse = 2, kConditionFailed = 3, kPrecondition = 4 };

/// Malformed command-line input other than polynomials.
struct ArgError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  bool json = false;
  std::uint64_t seed = 1;
};

std::uint64_t default_seed() {
  const char* s = std::getenv("BMO_SEED");
  if (!s || !*s) return 1;
  try {
    return std::stoull(s);
  } catch (const std::exception&) {
    throw ArgError(std::string("BMO_SEED is not an unsigned integer: ") + s);
  }
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, sep)) out.push_back(item);
  return out;
}

template <class F>
auto converting(const std::string& what, F&& f) {
  try {
    return f();
  } catch (const DomainError& e) {
    throw ArgError(what + ": " + e.what());
  }
}

Rational arg_rational(const std::string& s) {
  return converting("rational '" + s + "'", [&] { return Rational::parse(s); });
}

Place arg_place(const std::string& s) {
  return converting("place '" + s + "'", [&] { return Place::parse(s); });
}

std::vector<Rational> arg_rationals(const std::string& s) {
  std::vector<Rational> out;
  for (const auto& part : split(s, ',')) out.push_back(arg_rational(part));
  if (out.empty()) throw ArgError("empty list");
  return out;
}

std::vector<Integer> arg_integers(const std::string& s, std::size_t n) {
  std::vector<Integer> out;
  for (const auto& part : split(s, ',')) {
    Rational r = arg_rational(part);
    if (!r.is_integer()) throw ArgError("expected integers: " + s);
    out.push_back(r.numerator());
  }
  if (out.size() != n) throw ArgError("expected " + std::to_string(n) + " comma-separated integers: " + s);
  return out;
}

/// Parses the polynomial and reads it as a ternary quadratic form.
TernaryForm arg_form(const std::string& text) {
  MPoly p = parse_polynomial(text);
  try {
    return TernaryForm::from_polynomial(p);
  } catch (const DomainError& e) {
    throw PreconditionError("ternary-quadratic", e.what());
  }
}

std::string symbol_text(int s) { return s > 0 ? "+1" : "-1"; }

void emit(const Options& o, const Json& j, const std::string& text) {
  if (o.json)
    std::cout << j.dump(2) << "\n";
  else
    std::cout << text;
}

// ---- subcommands ----

int cmd_hilbert(const Options& o, const std::string& sa, const std::string& sb, const std::string& place, bool use_oracle,
                int depth) {
  Rational a = arg_rational(sa), b = arg_rational(sb);
  if (a.is_zero() || b.is_zero()) throw ArgError("Hilbert symbol needs nonzero entries");
  std::vector<Place> places;
  if (!place.empty()) {
    places.push_back(arg_place(place));
  } else {
    const Rational both[] = {a, b};
    places = relevant_places(both);
  }
  Json j{{"a", a.to_string()}, {"b", b.to_string()}, {"symbols", Json::object()}};
  std::ostringstream os;
  int product = 1;
  for (const Place& v : places) {
    int s = hilbert_symbol(a, b, v);
    product *= s;
    Json entry{{"formula", s}};
    os << "(" << a << "," << b << ")_" << v.to_string() << " = " << symbol_text(s);
    if (use_oracle) {
      int d = depth;
      if (d <= 0 && v.is_finite()) d = v.prime() == 2 ? kOracleDepth2 : oracle_min_depth(v.prime());
      int so = hilbert_oracle(a, b, v, d);
      entry["oracle"] = so;
      entry["oracle_depth"] = d;
      os << "  (oracle " << symbol_text(so) << ")";
    }
    os << "\n";
    j["symbols"][v.to_string()] = entry;
  }
  if (place.empty()) {
    j["product"] = product;
    os << "product over relevant places = " << symbol_text(product) << "\n";
  }
  emit(o, j, os.str());
  return kOk;
}

int cmd_isotropic(const Options& o, const std::string& coeffs, const std::string& place, long bound) {
  DiagQuadForm q(arg_rationals(coeffs));
  Json j{{"form", report::to_json(q)}};
  std::ostringstream os;
  os << "form " << q.to_string() << "\n";
  if (!place.empty()) {
    Place v = arg_place(place);
    bool iso = q.rank() == 0 ? false : is_isotropic_local(q, v);
    if (q.radical_dim() > 0) iso = true;
    j["place"] = v.to_string();
    j["isotropic"] = iso;
    os << "isotropic over Q_" << v.to_string() << ": " << (iso ? "yes" : "no") << "\n";
  } else {
    GlobalIsotropy g = is_isotropic_global(q);
    j["global"] = report::to_json(g);
    j["isotropic"] = g.isotropic;
    os << "isotropic over Q: " << (g.isotropic ? "yes" : "no");
    if (!g.failing.empty()) {
      os << " (fails at";
      for (const auto& v : g.failing) os << " " << v.to_string();
      os << ")";
    }
    os << "\n";
    if (bound > 0) {
      auto w = isotropy_oracle(q, bound);
      Json wj = nullptr;
      if (w) {
        wj = Json::array();
        for (const auto& c : *w) wj.push_back(c.get_str());
      }
      j["witness"] = wj;
      j["oracle_bound"] = bound;
      os << "witness (|entries| <= " << bound << "): ";
      if (w) {
        for (std::size_t i = 0; i < w->size(); ++i) os << (i ? "," : "") << (*w)[i];
      } else {
        os << "none";
      }
      os << "\n";
    }
  }
  emit(o, j, os.str());
  return kOk;
}

int cmd_hasse(const Options& o, const std::string& coeffs, const std::string& place) {
  DiagQuadForm q(arg_rationals(coeffs));
  if (q.rank() == 0) throw ArgError("the form has rank 0");
  Place v = arg_place(place);
  int h = hasse_invariant(q, v);
  SquareClass d = discriminant_class(q);
  bool dsq = discriminant_is_local_square(q, v);
  Json j{{"form", report::to_json(q)}, {"place", v.to_string()}, {"hasse", h},
         {"discriminant", d.to_string()}, {"discriminant_local_square", dsq}};
  std::ostringstream os;
  os << "form " << q.to_string() << "\n"
     << "hasse invariant at " << v.to_string() << ": " << symbol_text(h) << "\n"
     << "discriminant class " << d.to_string() << (dsq ? " (a square in Q_" : " (not a square in Q_")
     << v.to_string() << ")\n";
  emit(o, j, os.str());
  return kOk;
}

std::string fcond_text(const FConditionReport& r) {
  std::ostringstream os;
  os << "nondegenerate: " << (r.nondegenerate ? "yes" : "no") << " (det " << r.determinant << ")\n";
  const char axes[] = {'x', 'y', 'z'};
  for (int i = 0; i < 3; ++i) {
    const auto& root = r.restriction_roots[static_cast<std::size_t>(i)];
    os << "F|" << axes[i] << "=0 square: " << (r.restriction_square[static_cast<std::size_t>(i)] ? "yes" : "no");
    if (root) os << " (root " << root->to_string() << ")";
    os << "\n";
  }
  os << "F not a square: " << (r.f_not_square ? "yes" : "no");
  if (r.f_root) os << " (F = (" << r.f_root->to_string() << ")^2)";
  os << "\n";
  os << "conditions: " << (r.passes ? "pass" : "fail") << "\n";
  return os.str();
}

int cmd_check_f(const Options& o, const std::string& poly) {
  TernaryForm f = arg_form(poly);
  FConditionReport r = check_f_conditions(f);
  emit(o, {{"polynomial", f.polynomial().to_string()}, {"report", report::to_json(r)}},
       "F = " + f.polynomial().to_string() + "\n" + fcond_text(r));
  return r.passes ? kOk : kConditionFailed;
}

int cmd_residues(const Options& o, const std::string& poly, const std::string& divisor) {
  TernaryForm f = arg_form(poly);
  Fourfold x(f);
  x.require_conditions();
  std::vector<Var> axes{Var::X, Var::Y, Var::Z};
  if (!divisor.empty()) {
    if (divisor.size() != 1 || divisor[0] < 'x' || divisor[0] > 'z') throw ArgError("divisor must be x, y or z");
    axes = {static_cast<Var>(divisor[0] - 'x')};
  }
  Json j{{"polynomial", f.polynomial().to_string()}, {"axes", Json::object()}};
  std::ostringstream os;
  for (Var v : axes) {
    PrimeDivisor d = PrimeDivisor::axis(v);
    ResidueClass res = residue_of_symbol(QuaternionSymbolFn::alpha(), d);
    ResidueClass disc = discriminant_residue_class(f, v);
    j["axes"][std::string(1, var_name(v))] = {{"divisor", d.to_string()},
                                              {"alpha_residue", report::to_json(res)},
                                              {"discriminant_class", report::to_json(disc)}};
    os << "D = " << d.to_string() << ": residue of alpha = " << res.to_string()
       << ", discriminant class = " << disc.to_string() << "\n";
  }
  emit(o, j, os.str());
  return kOk;
}

int cmd_invariant(const Options& o, const std::string& poly, const std::string& point, bool perturb, int depth) {
  Fourfold x(arg_form(poly));
  auto c = arg_integers(point, 7);
  std::array<Integer, 4> t{c[3], c[4], c[5], c[6]};
  if (c[0] == 0 && c[1] == 0 && c[2] == 0) throw ArgError("base coordinates are all zero");
  if (t[0] == 0 && t[1] == 0 && t[2] == 0 && t[3] == 0) throw ArgError("fiber coordinates are all zero");
  BasePoint base(c[0], c[1], c[2]);
  if (!x.contains(base, t)) throw PreconditionError("on-fourfold", "the point is not on X");
  FourfoldPoint p = x.point(base, t);
  std::ostringstream os;
  if (base.on_boundary()) {
    if (!perturb) throw PreconditionError("nonzero-coordinates", "boundary base " + base.to_string() +
                                                                    "; rerun with --perturb");
    Json entries = Json::array();
    os << "boundary base " << base.to_string() << ", perturbed evaluation:\n";
    for (const Place& v : invariant_places(base)) {
      PerturbedInvariant pi = perturbed_beta_invariant(x, base, v, depth);
      entries.push_back(report::to_json(pi));
      os << "  inv_" << v.to_string() << " = " << to_string(pi.value) << " at " << pi.perturbed.to_string()
         << " (distance " << pi.distance << ")\n";
    }
    emit(o, {{"point", report::to_json(p)}, {"perturbed", entries}}, os.str());
    return kOk;
  }
  InvariantProfile prof = invariant_profile(x, p);
  ArchimedeanRule rule = archimedean_rule(base, x);
  os << "P = " << p.to_string() << "\n";
  for (const auto& [v, i] : prof.entries) os << "  inv_" << v.to_string() << " = " << to_string(i) << "\n";
  os << "  other places: 0\n";
  os << "total = " << to_string(prof.total) << "\n";
  os << "real rule: " << rule.trace << "\n";
  emit(o, {{"profile", report::to_json(prof)}, {"archimedean_rule", report::to_json(rule)}}, os.str());
  return kOk;
}

int cmd_search(const Options& o, const std::string& poly, long h, long k) {
  if (h < 1 || k < 1) throw ArgError("heights must be at least 1");
  Fourfold x(arg_form(poly));
  auto hits = search_rational_points(x, h, k);
  Json list = Json::array();
  std::ostringstream os;
  os << hits.size() << " points with base height <= " << h << ", fiber height <= " << k << "\n";
  for (const auto& hit : hits) {
    list.push_back(report::to_json(hit));
    os << "  " << hit.point.to_string() << "  "
       << (hit.generic ? to_string(real_component(hit.point.base())) : std::string("boundary"))
       << (hit.smooth ? "" : "  singular") << "\n";
  }
  emit(o, {{"base_height", h}, {"fiber_height", k}, {"points", list}}, os.str());
  return kOk;
}

int cmd_verify_p(const Options& o, const std::string& poly, unsigned long prime, std::size_t samples, int depth) {
  Fourfold x(arg_form(poly));
  Place v = converting("prime", [&] { return Place::prime(prime); });
  if (depth < 3) throw ArgError("depth must be at least 3");
  VanishingReport r = verify_finite_vanishing(x, v, samples, depth, o.seed);
  std::ostringstream os;
  os << "p = " << prime << ", depth " << depth << ", seed " << o.seed << "\n";
  os << "tested " << r.tested << " of " << r.requested << " locally soluble bases\n";
  os << "nonzero invariants: " << r.nonzero_count << "\n";
  for (const auto& e : r.counterexamples)
    os << "  " << e.base.to_string() << ": (" << e.a << "," << e.b << ")_" << prime << " = " << symbol_text(e.symbol)
       << ", inv 1/2" << (e.reverified ? "" : "  NOT REVERIFIED") << "\n";
  if (!r.warning.empty()) os << "warning: " << r.warning << "\n";
  emit(o, report::to_json(r), os.str());
  return kOk;
}

int cmd_verdict(const Options& o, const std::string& poly, const std::string& heights) {
  long h = 1, k = 1;
  if (!heights.empty()) {
    auto hk = arg_integers(heights, 2);
    if (!hk[0].fits_slong_p() || !hk[1].fits_slong_p() || hk[0] < 1 || hk[1] < 1)
      throw ArgError("heights must be positive");
    h = hk[0].get_si();
    k = hk[1].get_si();
  }
  Fourfold x(arg_form(poly));
  WAVerdict v = wa_verdict(x, h, k, o.seed);
  std::ostringstream os;
  os << "F = " << x.form().polynomial().to_string() << "\n";
  os << fcond_text(v.fcond);
  os << "real signature of F: " << v.signature.positive << " positive, " << v.signature.negative << " negative, "
     << v.signature.zero << " zero\n";
  os << "components: " << v.components << "\n";
  if (v.witness) {
    os << "witness (anchor " << v.witness->anchor.to_string() << ", seed " << o.seed << "):\n";
    for (const auto& c : v.witness->components)
      os << "  " << c.place.to_string() << ": base " << c.base.to_string() << ", inv " << to_string(c.invariant)
         << ", " << c.source << (c.depth ? ", mod " + std::to_string(c.place.prime()) + "^" + std::to_string(c.depth) : "")
         << "\n";
    os << "  elsewhere: the anchor, inv 0\n";
    os << "  total = " << to_string(v.witness->total) << (v.witness->verified ? " (re-verified)" : "") << "\n";
  }
  if (!v.diagnostic.empty()) os << "diagnostic: " << v.diagnostic << "\n";
  os << "verdict: " << to_string(v.verdict) << "\n";
  Json j = report::to_json(v);
  j["seed"] = o.seed;
  j["heights"] = {h, k};
  emit(o, j, os.str());
  return kOk;
}

int cmd_selftest(const Options& o, const std::vector<std::string>& only) {
  std::vector<selftest::CheckResult> results;
  if (only.empty()) {
    results = selftest::run_all(o.seed);
  } else {
    for (const auto& id : only) {
      try {
        results.push_back(selftest::run_check(id, o.seed));
      } catch (const std::out_of_range& e) {
        throw ArgError(e.what());
      }
    }
  }
  bool ok = true;
  Json list = Json::array();
  std::ostringstream os;
  for (const auto& r : results) {
    ok = ok && r.passed;
    list.push_back(
        {{"id", r.id}, {"name", r.name}, {"passed", r.passed}, {"detail", r.detail}, {"data", r.data}});
    char secs[32];
    std::snprintf(secs, sizeof secs, "%.2f", r.seconds);
    os << (r.passed ? "PASS " : "FAIL ") << r.id << "  " << r.name << "  [" << secs << " s]  " << r.detail << "\n";
  }
  os << (ok ? "selftest: all checks passed" : "selftest: FAILED") << " (seed " << o.seed << ")\n";
  emit(o, {{"seed", o.seed}, {"passed", ok}, {"checks", list}}, os.str());
  return ok ? kOk : kInternal;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Brauer-Manin computations on biquadratic fourfolds"};
  app.require_subcommand(1);
  Options o;
  bool json = false;
  std::uint64_t seed = 0;
  bool seed_given = false;
  app.add_flag("--json", json, "Machine-readable output");
  app.add_option_function<std::uint64_t>(
      "--seed", [&](std::uint64_t s) { seed = s, seed_given = true; }, "Random seed (default $BMO_SEED or 1)");

  std::string a, b, place, coeffs, poly, divisor, point, heights;
  bool use_oracle = false, global = false, perturb = false;
  int depth = 0;
  long bound = 30, h = 1, k = 1;
  unsigned long prime = 0;
  std::size_t samples = 500;
  std::vector<std::string> only;

  auto* hil = app.add_subcommand("hilbert", "Hilbert symbol (A,B)_v");
  hil->add_option("A", a)->required();
  hil->add_option("B", b)->required();
  hil->add_option("--place", place, "Prime or 'real' (default: all relevant places)");
  hil->add_flag("--oracle", use_oracle, "Also run the brute-force oracle");
  hil->add_option("--depth", depth, "Oracle depth");

  auto* iso = app.add_subcommand("isotropic", "Isotropy of a diagonal form");
  iso->add_option("COEFFS", coeffs, "Comma-separated coefficients")->required();
  auto* iso_place = iso->add_option("--place", place, "Local isotropy at this place");
  iso->add_flag("--global", global, "Global isotropy (default)")->excludes(iso_place);
  iso->add_option("--oracle-bound", bound, "Search bound for a witness (0 disables)");

  auto* has = app.add_subcommand("hasse", "Hasse invariant of a diagonal form");
  has->add_option("COEFFS", coeffs, "Comma-separated coefficients")->required();
  has->add_option("--place", place, "Prime or 'real'")->required();

  auto* chk = app.add_subcommand("check-f", "Axis-square conditions on F");
  chk->add_option("F", poly)->required();

  auto* res = app.add_subcommand("residues", "Residues of alpha and discriminant classes along the axes");
  res->add_option("F", poly)->required();
  res->add_option("--divisor", divisor, "x, y or z");

  auto* inv = app.add_subcommand("invariant", "Local invariants of a rational point");
  inv->add_option("F", poly)->required();
  inv->add_option("--point", point, "x,y,z,t1,t2,t3,t4")->required();
  inv->add_flag("--perturb", perturb, "Evaluate boundary bases at a nearby point");
  inv->add_option("--depth", depth, "p-adic perturbation exponent")->default_val(6);

  auto* sea = app.add_subcommand("search", "Bounded-height rational points");
  sea->add_option("F", poly)->required();
  sea->add_option("--base-height", h)->default_val(1);
  sea->add_option("--fiber-height", k)->default_val(1);

  auto* ver = app.add_subcommand("verify-p", "Sampled check that the invariant vanishes at p");
  ver->add_option("F", poly)->required();
  ver->add_option("--prime", prime)->required();
  ver->add_option("--samples", samples)->default_val(500);
  auto* ver_depth = ver->add_option("--depth", depth, "Sampling precision p^depth (default 8 at 2, 6 otherwise)");

  auto* wa = app.add_subcommand("verdict", "Weak approximation verdict");
  wa->add_option("F", poly)->required();
  wa->add_option("--heights", heights, "H,K search heights (default 1,1)");

  auto* st = app.add_subcommand("selftest", "Run every acceptance and property check");
  st->add_option("--only", only, "Run only these check ids");

  for (auto* sub : {hil, iso, has, chk, res, inv, sea, ver, wa, st}) {
    sub->add_flag("--json", json, "Machine-readable output");
    sub->add_option_function<std::uint64_t>(
        "--seed", [&](std::uint64_t s) { seed = s, seed_given = true; }, "Random seed");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kParse;
  }

  try {
    o.json = json;
    o.seed = seed_given ? seed : default_seed();
    if (*hil) return cmd_hilbert(o, a, b, place, use_oracle, depth);
    if (*iso) return cmd_isotropic(o, coeffs, place, bound);
    if (*has) return cmd_hasse(o, coeffs, place);
    if (*chk) return cmd_check_f(o, poly);
    if (*res) return cmd_residues(o, poly, divisor);
    if (*inv) return cmd_invariant(o, poly, point, perturb, depth);
    if (*sea) return cmd_search(o, poly, h, k);
    if (*ver) {
      if (!*ver_depth) depth = prime == 2 ? 8 : 6;
      return cmd_verify_p(o, poly, prime, samples, depth);
    }
    if (*wa) return cmd_verdict(o, poly, heights);
    if (*st) return cmd_selftest(o, only);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n  " << poly << "\n  " << std::string(e.position(), ' ') << "^\n";
    return kParse;
  } catch (const ArgError& e) {
    std::cerr << "invalid argument: " << e.what() << "\n";
    return kParse;
  } catch (const InconclusiveError& e) {
    std::cerr << "precondition failed [oracle-depth]: " << e.what() << "\n";
    return kPrecondition;
  } catch (const PreconditionError& e) {
    std::cerr << "precondition failed [" << e.name() << "]: " << e.what() << "\n";
    return kPrecondition;
  } catch (const BoundaryBaseError& e) {
    std::cerr << "precondition failed [nonzero-coordinates]: " << e.what() << "\n";
    return kPrecondition;
  } catch (const DomainError& e) {
    std::cerr << "precondition failed [domain]: " << e.what() << "\n";
    return kPrecondition;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternal;
  }
  return kInternal;
}
