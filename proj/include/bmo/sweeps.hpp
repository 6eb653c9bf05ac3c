#pragma once

#include <span>
#include <string>
#include <vector>

#include "bmo/hilbert.hpp"
#include "bmo/quadform.hpp"
#include "bmo/residues.hpp"

namespace bmo {

/// Serial reference loops or OpenMP-parallel kernels. Both produce
/// identical results.
enum class Exec { Serial, Parallel };

struct SweepResult {
  std::size_t checked = 0;
  std::size_t discrepancies = 0;
  /// The first few discrepancies, human readable.
  std::vector<std::string> examples;
};

/// Nonzero reduced n/d with |n| <= bound and 1 <= d <= bound, ascending.
std::vector<Rational> small_rationals(long bound);

/// Oracle depth used in sweeps: 8 at p = 2, oracle_min_depth(p) otherwise.
int sweep_oracle_depth(unsigned long p);

/// hilbert_symbol against the conic oracle on every ordered pair and place.
/// The oracle is memoised on its normalised input.
SweepResult hilbert_oracle_sweep(std::span<const Rational> values, std::span<const Place> places, Exec exec);

/// All ordered diagonal forms with entries from `coefficients`, for each rank.
std::vector<DiagQuadForm> diagonal_forms(std::span<const long> coefficients, std::span<const std::size_t> ranks);

/// Hasse-Minkowski verdict against isotropy_oracle(q, bound). A returned
/// oracle vector must also evaluate to zero.
SweepResult isotropy_oracle_sweep(std::span<const DiagQuadForm> forms, long bound, Exec exec);

struct GramSweepResult {
  std::size_t enumerated = 0;
  std::size_t passing = 0;
  std::size_t exceptions = 0;
  std::vector<std::string> examples;
};

/// Every form with A, B, C in [-bound, bound] \ {0} and D, E, G in
/// [-bound, bound]: those passing check_f_conditions must have
/// det(Gram) = -4 (abc)^2 < 0 where A, B, C = a^2, b^2, c^2.
///
/// The vanishing of the three binary restriction discriminants
/// (D^2 = AB, E^2 = AC, G^2 = BC) is necessary for the conditions, so only
/// those forms go through the full checker.
GramSweepResult gram_determinant_sweep(long bound, Exec exec);

}  // namespace bmo
