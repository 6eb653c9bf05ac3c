#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bmo/quadform.hpp"
#include "bmo/residues.hpp"

namespace bmo {

/// Point of P^2 as a primitive integer triple whose first nonzero entry is positive.
class BasePoint {
 public:
  /// Throws DomainError if all entries vanish.
  BasePoint(const Integer& x, const Integer& y, const Integer& z);
  static BasePoint from_rationals(const Rational& x, const Rational& y, const Rational& z);

  const Integer& x() const { return c_[0]; }
  const Integer& y() const { return c_[1]; }
  const Integer& z() const { return c_[2]; }
  const std::array<Integer, 3>& coords() const { return c_; }
  bool on_boundary() const { return c_[0] == 0 || c_[1] == 0 || c_[2] == 0; }

  std::string to_string() const;
  friend bool operator==(const BasePoint&, const BasePoint&) = default;
  friend bool operator<(const BasePoint& a, const BasePoint& b) { return a.c_ < b.c_; }

 private:
  std::array<Integer, 3> c_;
};

/// Primitive integer 4-vector with first nonzero entry positive.
using FiberVector = std::array<Integer, 4>;
/// Throws DomainError if all entries vanish.
FiberVector canonical_fiber_vector(const std::array<Integer, 4>& t);

class Fourfold;

/// A point (x:y:z; t1:t2:t3:t4) known to lie on its fourfold.
class FourfoldPoint {
 public:
  const BasePoint& base() const { return base_; }
  const FiberVector& t() const { return t_; }
  std::string to_string() const;
  friend bool operator==(const FourfoldPoint&, const FourfoldPoint&) = default;
  friend bool operator<(const FourfoldPoint& a, const FourfoldPoint& b) {
    return a.base_ < b.base_ || (a.base_ == b.base_ && a.t_ < b.t_);
  }

 private:
  friend class Fourfold;
  FourfoldPoint(BasePoint b, FiberVector t) : base_(std::move(b)), t_(std::move(t)) {}
  BasePoint base_;
  FiberVector t_;
};

/// xy t1^2 + xz t2^2 + yz t3^2 + F(x,y,z) t4^2 = 0 in P^2 x P^3.
class Fourfold {
 public:
  explicit Fourfold(TernaryForm f);

  const TernaryForm& form() const { return f_; }
  const FConditionReport& conditions() const { return report_; }
  /// Throws PreconditionError("f-conditions") unless the conditions hold.
  void require_conditions() const;

  /// Exact evaluation of the defining equation. t must be nonzero.
  bool contains(const BasePoint& base, const std::array<Integer, 4>& t) const;
  /// Throws DomainError if the point is not on X.
  FourfoldPoint point(const BasePoint& base, const std::array<Integer, 4>& t) const;

  /// <xy, xz, yz, F(x,y,z)> with zero entries moved to the radical.
  DiagQuadForm fiber_form(const BasePoint& base) const;
  /// Fiber coefficients in order, zeros included.
  std::array<Rational, 4> fiber_coefficients(const BasePoint& base) const;

  /// The seven partial derivatives of the defining equation at P
  /// (x, y, z, t1, t2, t3, t4).
  std::array<Rational, 7> gradient(const FourfoldPoint& p) const;
  /// Jacobian criterion: P is smooth iff the gradient is nonzero.
  bool is_smooth_point(const FourfoldPoint& p) const;

 private:
  TernaryForm f_;
  FConditionReport report_;
};

struct SearchHit {
  FourfoldPoint point;
  bool generic = false;  // xyz != 0
  bool smooth = false;
  friend bool operator==(const SearchHit&, const SearchHit&) = default;
};

/// All canonical primitive bases with |coordinates| <= height, in
/// lexicographic order.
std::vector<BasePoint> enumerate_bases(long height);

/// Exhaustive search of bases with |coordinates| <= base_height and fiber
/// vectors with |t_i| <= fiber_height; bases whose fiber fails local
/// solubility are skipped. OpenMP-parallel over bases; output order is
/// independent of the schedule.
std::vector<SearchHit> search_rational_points(const Fourfold& x, long base_height, long fiber_height);
/// Plain nested-loop reference for the parallel search.
std::vector<SearchHit> search_rational_points_serial(const Fourfold& x, long base_height, long fiber_height);

enum class RealComponent { SameSign, Mixed };
std::string to_string(RealComponent c);

/// Sign pattern of a real base given by rationals with exact signs.
/// Throws DomainError("on boundary") if a coordinate vanishes.
RealComponent real_component(const std::array<Rational, 3>& base);
RealComponent real_component(const BasePoint& base);

struct LocalSample {
  Place place = Place::real();
  int depth = 0;
  std::uint64_t seed = 0;
  std::vector<BasePoint> bases;
  std::size_t attempts = 0;
  bool exhausted = false;
  std::string warning;
};

/// Seeded pseudorandom primitive triples with entries in [1, p^depth] (the
/// residue 0 lifted to p^depth), kept when the fiber is isotropic over Q_p.
LocalSample sample_local_bases(const Fourfold& x, const Place& v, std::size_t count, int depth,
                               std::uint64_t seed);

}  // namespace bmo
