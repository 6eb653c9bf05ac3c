#pragma once

#include <json.hpp>

#include "bmo/brauer_manin.hpp"
#include "bmo/sweeps.hpp"

namespace bmo::report {

using Json = nlohmann::json;

Json to_json(const Rational& r);
Json to_json(const Place& v);
Json to_json(const Inv& i);
Json to_json(const MPoly& p);
Json to_json(const DiagQuadForm& q);
Json to_json(const GlobalIsotropy& g);
Json to_json(const FConditionReport& r);
Json to_json(const ResidueClass& c);
Json to_json(const BasePoint& b);
Json to_json(const FourfoldPoint& p);
Json to_json(const SearchHit& h);
Json to_json(const LocalSample& s);
Json to_json(const InvariantProfile& p);
Json to_json(const PerturbedInvariant& p);
Json to_json(const ArchimedeanRule& r);
Json to_json(const VanishingReport& r);
Json to_json(const LocalComponent& c);
Json to_json(const ObstructionWitness& w);
Json to_json(const Signature& s);
Json to_json(const WAVerdict& v);
Json to_json(const SweepResult& r);
Json to_json(const GramSweepResult& r);

}  // namespace bmo::report
