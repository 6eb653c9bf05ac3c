#pragma once

#include <map>
#include <span>
#include <stdexcept>
#include <vector>

#include "bmo/arith.hpp"

namespace bmo {

/// (a,b)_v in {+1,-1}: +1 iff z^2 = a x^2 + b y^2 has a nontrivial solution
/// over Q_v. Closed form on valuations and unit parts.
int hilbert_symbol(const Rational& a, const Rational& b, const Place& v);

/// The brute-force oracle could not decide at the requested depth.
class InconclusiveError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Smallest search depth at which a primitive solution modulo p^depth of a
/// conic with valuations normalised into {0,1} is guaranteed to lift.
int oracle_min_depth(unsigned long p);

/// Default depth used by hilbert_oracle at p = 2.
inline constexpr int kOracleDepth2 = 8;

/// Independent answer by exhaustive search for primitive solutions of
/// z^2 = a x^2 + b y^2 modulo p^depth. Real place by sign analysis.
/// Throws InconclusiveError when depth < oracle_min_depth(p).
int hilbert_oracle(const Rational& a, const Rational& b, const Place& v, int depth);

namespace oracle {

/// What the conic search actually sees: a = p^ea u, b = p^eb w after
/// clearing denominators and removing even powers of p, with u, w reduced
/// modulo p^depth.
struct ConicKey {
  int ea = 0;
  unsigned long u = 0;
  int eb = 0;
  unsigned long w = 0;
  friend auto operator<=>(const ConicKey&, const ConicKey&) = default;
};

struct Normalised {
  int e = 0;
  unsigned long unit = 0;
};

/// Normalises one nonzero rational for the search modulo p^depth.
Normalised normalise(const Rational& r, unsigned long p, int depth);

/// Squares modulo m (any residue, zero included).
std::vector<char> square_table(unsigned long m);

/// Exhaustive primitive-solution search modulo p^depth.
/// `squares` must be square_table(p^depth).
bool conic_search(const ConicKey& key, unsigned long p, int depth, const std::vector<char>& squares);

}  // namespace oracle

struct ReciprocityReport {
  std::map<Place, int> symbols;  // every place where the symbol may be -1
  int product = 1;
};

/// Places at which (a,b)_v can be -1: the real place, 2, and the primes
/// dividing a numerator or denominator.
std::vector<Place> relevant_places(std::span<const Rational> values);

ReciprocityReport reciprocity_product(const Rational& a, const Rational& b);

}  // namespace bmo
