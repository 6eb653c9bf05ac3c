#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bmo/fourfold.hpp"
#include "bmo/hilbert.hpp"

namespace bmo {

/// A local invariant in (1/2)Z/Z.
enum class Inv { Zero, Half };
/// "0" or "1/2".
std::string to_string(Inv i);
/// Symbol +1 is invariant 0, symbol -1 is invariant 1/2.
Inv inv_from_symbol(int symbol);
Inv operator+(Inv a, Inv b);

/// A base with a vanishing coordinate was passed where xyz != 0 is needed.
class BoundaryBaseError : public DomainError {
 public:
  explicit BoundaryBaseError(const std::string& base)
      : DomainError("boundary base " + base + ": a coordinate vanishes; use perturbed evaluation") {}
};

/// The three equivalent symbol representatives of the class on P^2.
enum class Representative { XY_YZ, YZ_ZX, ZX_XY };
std::string to_string(Representative r);

/// The symbol (a,b)_v for the chosen representative at raw (unnormalised)
/// coordinates. Throws BoundaryBaseError if a coordinate is zero.
int beta_symbol(const std::array<Rational, 3>& base, const Place& v,
                Representative rep = Representative::XY_YZ);

/// 1/2 iff (-xy, -yz)_v = -1.
Inv beta_invariant(const BasePoint& base, const Place& v);
Inv beta_invariant(const BasePoint& base, const Place& v, Representative rep);

/// Evaluation at a nearby base with xyz != 0 and locally soluble fiber.
struct PerturbedInvariant {
  BasePoint original;
  BasePoint perturbed;
  Place place;
  /// |perturbation| in the v-adic (or real) absolute value, as text.
  std::string distance;
  Inv value = Inv::Zero;
};

/// Replaces the vanishing coordinates by small v-adic (or real) values.
/// For finite v the new entries are +-s p^k with k >= depth; for the real
/// place the other coordinates are scaled up instead. Throws DomainError if
/// no soluble perturbation is found within the search budget.
PerturbedInvariant perturbed_beta_invariant(const Fourfold& x, const BasePoint& base, const Place& v,
                                            int depth = 6);

/// {real, 2} and the odd primes dividing x, y or z.
std::vector<Place> invariant_places(const BasePoint& base);

struct InvariantProfile {
  FourfoldPoint point;
  std::map<Place, Inv> entries;
  std::vector<Place> relevant_places;
  Inv total = Inv::Zero;
};

/// Throws DomainError if P is not on X, BoundaryBaseError if xyz = 0.
InvariantProfile invariant_profile(const Fourfold& x, const FourfoldPoint& p);

struct ArchimedeanRule {
  Inv value = Inv::Zero;
  RealComponent component = RealComponent::Mixed;
  int f_sign = 0;
  Inv symbol_value = Inv::Zero;
  bool agrees = false;
  std::string trace;
};

/// Sign-pattern rule at the real place, checked against the symbol.
ArchimedeanRule archimedean_rule(const BasePoint& base, const Fourfold& x);

struct VanishingEntry {
  BasePoint base;
  Rational a;  // -xy
  Rational b;  // -yz
  int symbol = 1;
  bool fiber_soluble = false;
  /// Symbol recomputed by the oracle and fiber solubility recomputed.
  bool reverified = false;
};

struct VanishingReport {
  Place place = Place::real();
  std::size_t requested = 0;
  std::size_t tested = 0;
  std::size_t nonzero_count = 0;
  int depth = 0;
  std::uint64_t seed = 0;
  std::vector<VanishingEntry> counterexamples;
  bool all_reverified = true;
  bool exhausted = false;
  std::string warning;
};

/// Samples n local bases with soluble fiber and reports every base
/// where the invariant is nonzero. Requires the axis-square conditions on F.
VanishingReport verify_finite_vanishing(const Fourfold& x, const Place& v, std::size_t n, int depth,
                                        std::uint64_t seed);

struct LocalComponent {
  Place place = Place::real();
  BasePoint base;
  Inv invariant = Inv::Zero;
  bool fiber_soluble = false;
  /// Precision of the lift (p^depth); 0 at the real place or for the
  /// global point itself.
  int depth = 0;
  std::string source;  // "rational point", "search", "sampled seed=..."
};

struct ObstructionWitness {
  FourfoldPoint anchor;
  std::vector<LocalComponent> components;
  /// Outside these places the component is the anchor, whose invariant
  /// there is 0.
  std::vector<Place> relevant_places;
  Inv total = Inv::Zero;
  bool verified = false;
};

struct WitnessResult {
  std::optional<ObstructionWitness> witness;
  std::string diagnostic;
};

/// Recomputes every component from scratch.
bool reverify_witness(const Fourfold& x, const ObstructionWitness& w);

/// Adelic point with invariant sum 1/2 built from a rational point found at
/// the given heights. Throws PreconditionError("f-conditions") if X fails them.
WitnessResult obstruction_witness(const Fourfold& x, long base_height, long fiber_height,
                                  std::uint64_t seed = 1);

struct Signature {
  int positive = 0;
  int negative = 0;
  int zero = 0;
};

/// Exact inertia of F over R.
Signature real_signature(const TernaryForm& f);

enum class Verdict { Holds, FailsWithWitness, ComponentsOnly, NotApplicable };
std::string to_string(Verdict v);

struct WAVerdict {
  FConditionReport fcond;
  Signature signature;
  std::string components;
  std::optional<ObstructionWitness> witness;
  std::string diagnostic;
  Verdict verdict = Verdict::NotApplicable;
};

WAVerdict wa_verdict(const Fourfold& x, long base_height = 1, long fiber_height = 1, std::uint64_t seed = 1);

}  // namespace bmo
