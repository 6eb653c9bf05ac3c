#include "bmo/brauer_manin.hpp"

#include <algorithm>
#include <set>

namespace bmo {

namespace {

std::array<Rational, 3> coords(const BasePoint& b) { return {Rational(b.x()), Rational(b.y()), Rational(b.z())}; }

std::pair<Rational, Rational> symbol_entries(const std::array<Rational, 3>& c, Representative rep) {
  const Rational &x = c[0], &y = c[1], &z = c[2];
  switch (rep) {
    case Representative::XY_YZ: return {-(x * y), -(y * z)};
    case Representative::YZ_ZX: return {-(y * z), -(z * x)};
    case Representative::ZX_XY: return {-(z * x), -(x * y)};
  }
  throw DomainError("unknown representative");
}

int sampling_depth(unsigned long p) {
  if (p == 2) return kOracleDepth2;
  int d = 3;
  Integer q = Integer(p) * p * p * p;
  while (d < 6 && q < (Integer(1) << 40)) {
    ++d;
    q *= p;
  }
  return d;
}

int recheck_depth(unsigned long p) { return p == 2 ? kOracleDepth2 : oracle_min_depth(p); }

}  // namespace

std::string to_string(Inv i) { return i == Inv::Zero ? "0" : "1/2"; }

Inv inv_from_symbol(int symbol) { return symbol == 1 ? Inv::Zero : Inv::Half; }

Inv operator+(Inv a, Inv b) { return a == b ? Inv::Zero : Inv::Half; }

std::string to_string(Representative r) {
  switch (r) {
    case Representative::XY_YZ: return "(-xy,-yz)";
    case Representative::YZ_ZX: return "(-yz,-zx)";
    case Representative::ZX_XY: return "(-zx,-xy)";
  }
  return "?";
}

int beta_symbol(const std::array<Rational, 3>& base, const Place& v, Representative rep) {
  for (const auto& c : base)
    if (c.is_zero())
      throw BoundaryBaseError("(" + base[0].to_string() + ":" + base[1].to_string() + ":" + base[2].to_string() + ")");
  auto [a, b] = symbol_entries(base, rep);
  return hilbert_symbol(a, b, v);
}

Inv beta_invariant(const BasePoint& base, const Place& v) {
  return beta_invariant(base, v, Representative::XY_YZ);
}

Inv beta_invariant(const BasePoint& base, const Place& v, Representative rep) {
  return inv_from_symbol(beta_symbol(coords(base), v, rep));
}

PerturbedInvariant perturbed_beta_invariant(const Fourfold& x, const BasePoint& base, const Place& v, int depth) {
  if (!base.on_boundary())
    return {base, base, v, "0", beta_invariant(base, v)};
  auto soluble = [&](const BasePoint& b) { return !b.on_boundary() && is_isotropic_local(x.fiber_form(b), v); };
  if (v.is_real()) {
    for (int k = 1; k <= 6; ++k) {
      Integer n;
      mpz_ui_pow_ui(n.get_mpz_t(), 10, static_cast<unsigned long>(k));
      for (int sign : {1, -1}) {
        std::array<Integer, 3> c;
        for (int i = 0; i < 3; ++i) c[i] = base.coords()[i] == 0 ? Integer(sign) : Integer(base.coords()[i] * n);
        BasePoint b(c[0], c[1], c[2]);
        if (soluble(b)) return {base, b, v, "1/" + n.get_str(), beta_invariant(b, v)};
      }
    }
  } else {
    const unsigned long p = v.prime();
    for (int k = std::max(depth, 1); k <= std::max(depth, 1) + 4; ++k) {
      Integer pk;
      mpz_ui_pow_ui(pk.get_mpz_t(), p, static_cast<unsigned long>(k));
      for (long s = 1; s <= 16; ++s) {
        if (s % static_cast<long>(p) == 0) continue;
        for (long sign : {1L, -1L}) {
          std::array<Integer, 3> c;
          for (int i = 0; i < 3; ++i) c[i] = base.coords()[i] == 0 ? Integer(sign * s * pk) : base.coords()[i];
          BasePoint b(c[0], c[1], c[2]);
          if (soluble(b)) return {base, b, v, std::to_string(p) + "^-" + std::to_string(k), beta_invariant(b, v)};
        }
      }
    }
  }
  throw DomainError("no soluble perturbation of " + base.to_string() + " found at " + v.to_string());
}

std::vector<Place> invariant_places(const BasePoint& base) {
  std::set<Place> s{Place::real(), Place::prime(2)};
  for (const auto& c : base.coords())
    if (c != 0)
      for (unsigned long p : prime_divisors(c)) s.insert(Place::prime(p));
  return {s.begin(), s.end()};
}

InvariantProfile invariant_profile(const Fourfold& x, const FourfoldPoint& p) {
  if (!x.contains(p.base(), p.t())) throw DomainError("point " + p.to_string() + " is not on X");
  if (p.base().on_boundary()) throw BoundaryBaseError(p.base().to_string());
  InvariantProfile out{p, {}, invariant_places(p.base()), Inv::Zero};
  for (const Place& v : out.relevant_places) {
    Inv i = beta_invariant(p.base(), v);
    out.entries.emplace(v, i);
    out.total = out.total + i;
  }
  return out;
}

ArchimedeanRule archimedean_rule(const BasePoint& base, const Fourfold& x) {
  if (base.on_boundary()) throw BoundaryBaseError(base.to_string());
  ArchimedeanRule r;
  r.component = real_component(base);
  r.value = r.component == RealComponent::SameSign ? Inv::Half : Inv::Zero;
  auto c = coords(base);
  r.f_sign = x.form()(c[0], c[1], c[2]).sign();
  r.symbol_value = beta_invariant(base, Place::real());
  r.agrees = r.value == r.symbol_value;
  auto sgn = [](const Integer& n) { return n > 0 ? '+' : '-'; };
  r.trace = std::string("signs (") + sgn(base.x()) + "," + sgn(base.y()) + "," + sgn(base.z()) + ") -> " +
            to_string(r.component) + " -> " + to_string(r.value) + "; F " +
            (r.f_sign > 0 ? "> 0" : (r.f_sign < 0 ? "< 0" : "= 0")) + "; symbol (-xy,-yz)_inf -> " +
            to_string(r.symbol_value);
  return r;
}

VanishingReport verify_finite_vanishing(const Fourfold& x, const Place& v, std::size_t n, int depth,
                                        std::uint64_t seed) {
  x.require_conditions();
  LocalSample sample = sample_local_bases(x, v, n, depth, seed);
  VanishingReport rep;
  rep.place = v;
  rep.requested = n;
  rep.tested = sample.bases.size();
  rep.depth = depth;
  rep.seed = seed;
  rep.exhausted = sample.exhausted;
  rep.warning = sample.warning;

  const long m = static_cast<long>(sample.bases.size());
  std::vector<std::optional<VanishingEntry>> found(sample.bases.size());
#pragma omp parallel for schedule(dynamic, 8)
  for (long i = 0; i < m; ++i) {
    const BasePoint& b = sample.bases[static_cast<std::size_t>(i)];
    auto c = coords(b);
    int s = beta_symbol(c, v);
    if (s == 1) continue;
    auto [a, bb] = symbol_entries(c, Representative::XY_YZ);
    VanishingEntry e{b, a, bb, s, true, false};
    bool oracle_agrees = hilbert_oracle(a, bb, v, recheck_depth(v.prime())) == s;
    e.fiber_soluble = is_isotropic_local(x.fiber_form(b), v);
    e.reverified = oracle_agrees && e.fiber_soluble;
    found[static_cast<std::size_t>(i)] = std::move(e);
  }
  for (auto& f : found) {
    if (!f) continue;
    rep.all_reverified = rep.all_reverified && f->reverified;
    rep.counterexamples.push_back(std::move(*f));
  }
  rep.nonzero_count = rep.counterexamples.size();
  return rep;
}

bool reverify_witness(const Fourfold& x, const ObstructionWitness& w) {
  if (!x.contains(w.anchor.base(), w.anchor.t()) || w.anchor.base().on_boundary()) return false;
  std::set<Place> expected(w.relevant_places.begin(), w.relevant_places.end());
  for (const Place& v : invariant_places(w.anchor.base()))
    if (!expected.count(v)) return false;
  std::set<Place> seen;
  Inv total = Inv::Zero;
  for (const auto& c : w.components) {
    if (c.base.on_boundary() || !seen.insert(c.place).second) return false;
    if (!is_isotropic_local(x.fiber_form(c.base), c.place)) return false;
    Inv i = beta_invariant(c.base, c.place);
    if (i != c.invariant) return false;
    total = total + i;
  }
  return seen == expected && total == Inv::Half && total == w.total;
}

WitnessResult obstruction_witness(const Fourfold& x, long base_height, long fiber_height, std::uint64_t seed) {
  x.require_conditions();
  WitnessResult out;
  auto hits = search_rational_points(x, base_height, fiber_height);
  // Preference: same-sign base, then nonnegative t, then search order.
  const SearchHit* anchor = nullptr;
  int best = -1;
  for (const auto& h : hits) {
    if (!h.generic || !h.smooth) continue;
    int score = (real_component(h.point.base()) == RealComponent::SameSign ? 2 : 0) +
                (std::all_of(h.point.t().begin(), h.point.t().end(), [](const Integer& c) { return c >= 0; }) ? 1 : 0);
    if (score > best) {
      best = score;
      anchor = &h;
    }
  }
  if (!anchor) {
    out.diagnostic = "no smooth rational point with xyz != 0 at heights (" + std::to_string(base_height) + "," +
                     std::to_string(fiber_height) + ")";
    return out;
  }
  InvariantProfile prof = invariant_profile(x, anchor->point);

  ObstructionWitness w{anchor->point, {}, prof.relevant_places, Inv::Zero, false};
  const Place real = Place::real();

  // Real place: a same-sign base with F < 0; its fiber is indefinite.
  std::optional<LocalComponent> real_comp;
  auto real_ok = [&](const BasePoint& b) {
    if (b.on_boundary() || real_component(b) != RealComponent::SameSign) return false;
    auto c = coords(b);
    return x.form()(c[0], c[1], c[2]).sign() < 0 && is_isotropic_local(x.fiber_form(b), real);
  };
  if (real_ok(anchor->point.base())) {
    real_comp = LocalComponent{real, anchor->point.base(), beta_invariant(anchor->point.base(), real), true, 0,
                               "rational point"};
  } else {
    for (const auto& b : enumerate_bases(std::max<long>(base_height, 5))) {
      if (!real_ok(b)) continue;
      real_comp = LocalComponent{real, b, beta_invariant(b, real), true, 0, "search"};
      break;
    }
  }
  if (!real_comp) {
    out.diagnostic = "no same-sign base with F < 0 and real-soluble fiber found";
    return out;
  }
  w.components.push_back(*real_comp);

  for (const Place& v : prof.relevant_places) {
    if (v.is_real()) continue;
    if (prof.entries.at(v) == Inv::Zero) {
      w.components.push_back({v, anchor->point.base(), Inv::Zero, true, 0, "rational point"});
      continue;
    }
    const int depth = sampling_depth(v.prime());
    const std::uint64_t s = seed + v.prime();
    LocalSample sample = sample_local_bases(x, v, 64, depth, s);
    std::optional<LocalComponent> comp;
    for (const auto& b : sample.bases) {
      if (beta_invariant(b, v) != Inv::Zero) continue;
      comp = LocalComponent{v, b, Inv::Zero, true, depth, "sampled seed=" + std::to_string(s)};
      break;
    }
    if (!comp) {
      out.diagnostic = "no local base with invariant 0 found at " + v.to_string() + " (" +
                       std::to_string(sample.bases.size()) + " soluble samples)";
      return out;
    }
    w.components.push_back(*comp);
  }
  for (const auto& c : w.components) w.total = w.total + c.invariant;
  w.verified = reverify_witness(x, w);
  if (!w.verified) {
    out.diagnostic = "assembled point failed re-verification (total " + to_string(w.total) + ")";
    return out;
  }
  out.witness = std::move(w);
  return out;
}

Signature real_signature(const TernaryForm& f) {
  Diagonalization d = diagonalize(GramForm(f.gram()));
  Signature s;
  for (const auto& c : d.form.coefficients()) (c.sign() > 0 ? s.positive : s.negative)++;
  s.zero = static_cast<int>(d.form.radical_dim());
  return s;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Holds: return "Holds";
    case Verdict::FailsWithWitness: return "FailsWithWitness";
    case Verdict::ComponentsOnly: return "ComponentsOnly";
    case Verdict::NotApplicable: return "NotApplicable";
  }
  return "?";
}

WAVerdict wa_verdict(const Fourfold& x, long base_height, long fiber_height, std::uint64_t seed) {
  WAVerdict out;
  out.fcond = x.conditions();
  out.signature = real_signature(x.form());
  if (!out.fcond.passes) {
    out.verdict = Verdict::NotApplicable;
    out.components = "not computed";
    out.diagnostic = "F fails the axis-square conditions";
    return out;
  }
  if (out.signature.positive == 3) {
    out.verdict = Verdict::Holds;
    out.components = "F positive definite: every real base lies in a fiber where the invariant is constant";
    return out;
  }
  out.verdict = Verdict::ComponentsOnly;
  // With A, B, C squares, F = X^2 + Y^2 + Z^2 + 2(e1 XY + e2 XZ + e3 YZ) after
  // rescaling, e1 e2 e3 = -1. Unless all e_i are -1, F > 0 on the open
  // positive octant, so no same-sign base has a real-soluble fiber.
  const TernaryForm& f = x.form();
  if (!(f.D().sign() < 0 && f.E().sign() < 0 && f.G().sign() < 0)) {
    out.components = "Mixed component only (F > 0 wherever x, y, z share a sign; real invariant 0)";
    out.diagnostic = "no real point with xyz != 0 has real invariant 1/2";
    return out;
  }
  out.components = "SameSign component (real invariant 1/2) and Mixed component (real invariant 0)";
  WitnessResult w = obstruction_witness(x, base_height, fiber_height, seed);
  out.diagnostic = w.diagnostic;
  if (w.witness) {
    out.witness = std::move(w.witness);
    out.verdict = Verdict::FailsWithWitness;
  }
  return out;
}

}  // namespace bmo
