#include "bmo/report.hpp"

namespace bmo::report {

namespace {

template <class T>
Json list(const T& xs) {
  Json a = Json::array();
  for (const auto& x : xs) a.push_back(to_json(x));
  return a;
}

Json integers(std::span<const Integer> xs) {
  Json a = Json::array();
  for (const auto& x : xs) a.push_back(x.get_str());
  return a;
}

}  // namespace

Json to_json(const Rational& r) { return r.to_string(); }
Json to_json(const Place& v) { return v.to_string(); }
Json to_json(const Inv& i) { return to_string(i); }
Json to_json(const MPoly& p) { return p.to_string(); }

Json to_json(const DiagQuadForm& q) {
  return {{"coefficients", list(q.coefficients())}, {"radical_dim", q.radical_dim()}, {"text", q.to_string()}};
}

Json to_json(const GlobalIsotropy& g) {
  return {{"isotropic", g.isotropic}, {"checked", list(g.checked)}, {"failing", list(g.failing)}};
}

Json to_json(const FConditionReport& r) {
  static const char* names[] = {"x", "y", "z"};
  Json axes = Json::object();
  for (int i = 0; i < 3; ++i) {
    const auto& root = r.restriction_roots[static_cast<std::size_t>(i)];
    axes[names[i]] = {{"square", r.restriction_square[static_cast<std::size_t>(i)]},
                      {"root", root ? Json(root->to_string()) : Json(nullptr)}};
  }
  return {{"nondegenerate", r.nondegenerate},
          {"determinant", to_json(r.determinant)},
          {"axis_restrictions", axes},
          {"f_not_square", r.f_not_square},
          {"f_root", r.f_root ? Json(r.f_root->to_string()) : Json(nullptr)},
          {"passes", r.passes}};
}

Json to_json(const ResidueClass& c) {
  Json factors = Json::array();
  for (const auto& f : c.factors) factors.push_back(f.to_string(var_name(c.variable)));
  return {{"variable", std::string(1, var_name(c.variable))},
          {"constant", c.constant.to_string()},
          {"factors", factors},
          {"trivial", c.trivial},
          {"text", c.to_string()}};
}

Json to_json(const BasePoint& b) { return integers(b.coords()); }

Json to_json(const FourfoldPoint& p) {
  return {{"base", to_json(p.base())}, {"t", integers(p.t())}, {"text", p.to_string()}};
}

Json to_json(const SearchHit& h) {
  Json j{{"point", to_json(h.point)}, {"generic", h.generic}, {"smooth", h.smooth}};
  j["component"] = h.generic ? Json(to_string(real_component(h.point.base()))) : Json("boundary");
  return j;
}

Json to_json(const LocalSample& s) {
  return {{"place", to_json(s.place)}, {"depth", s.depth},       {"seed", s.seed},
          {"bases", list(s.bases)},   {"attempts", s.attempts}, {"exhausted", s.exhausted},
          {"warning", s.warning}};
}

Json to_json(const InvariantProfile& p) {
  Json entries = Json::object();
  for (const auto& [v, i] : p.entries) entries[v.to_string()] = to_string(i);
  return {{"point", to_json(p.point)},
          {"entries", entries},
          {"relevant_places", list(p.relevant_places)},
          {"total", to_string(p.total)}};
}

Json to_json(const PerturbedInvariant& p) {
  return {{"original", to_json(p.original)},
          {"perturbed", to_json(p.perturbed)},
          {"place", to_json(p.place)},
          {"distance", p.distance},
          {"value", to_string(p.value)}};
}

Json to_json(const ArchimedeanRule& r) {
  return {{"value", to_string(r.value)},       {"component", to_string(r.component)},
          {"f_sign", r.f_sign},                {"symbol_value", to_string(r.symbol_value)},
          {"agrees", r.agrees},                {"trace", r.trace}};
}

Json to_json(const VanishingReport& r) {
  Json cs = Json::array();
  for (const auto& e : r.counterexamples)
    cs.push_back({{"base", to_json(e.base)},
                  {"a", to_json(e.a)},
                  {"b", to_json(e.b)},
                  {"symbol", e.symbol},
                  {"invariant", "1/2"},
                  {"fiber_soluble", e.fiber_soluble},
                  {"reverified", e.reverified}});
  return {{"place", to_json(r.place)},     {"requested", r.requested},
          {"tested", r.tested},            {"nonzero_count", r.nonzero_count},
          {"depth", r.depth},              {"seed", r.seed},
          {"counterexamples", cs},         {"all_reverified", r.all_reverified},
          {"exhausted", r.exhausted},      {"warning", r.warning}};
}

Json to_json(const LocalComponent& c) {
  Json j{{"place", to_json(c.place)},
         {"base", to_json(c.base)},
         {"invariant", to_string(c.invariant)},
         {"fiber_soluble", c.fiber_soluble},
         {"depth", c.depth},
         {"source", c.source}};
  if (c.place.is_finite() && c.depth > 0) {
    Integer m;
    mpz_ui_pow_ui(m.get_mpz_t(), c.place.prime(), static_cast<unsigned long>(c.depth));
    j["modulus"] = m.get_str();
  }
  return j;
}

Json to_json(const ObstructionWitness& w) {
  return {{"anchor", to_json(w.anchor)},
          {"components", list(w.components)},
          {"relevant_places", list(w.relevant_places)},
          {"total", to_string(w.total)},
          {"verified", w.verified}};
}

Json to_json(const Signature& s) { return {{"positive", s.positive}, {"negative", s.negative}, {"zero", s.zero}}; }

Json to_json(const WAVerdict& v) {
  return {{"fcond", to_json(v.fcond)},
          {"real_signature", to_json(v.signature)},
          {"components", v.components},
          {"witness", v.witness ? to_json(*v.witness) : Json(nullptr)},
          {"diagnostic", v.diagnostic},
          {"verdict", to_string(v.verdict)}};
}

Json to_json(const SweepResult& r) {
  return {{"checked", r.checked}, {"discrepancies", r.discrepancies}, {"examples", r.examples}};
}

Json to_json(const GramSweepResult& r) {
  return {{"enumerated", r.enumerated},
          {"passing", r.passing},
          {"exceptions", r.exceptions},
          {"examples", r.examples}};
}

}  // namespace bmo::report
