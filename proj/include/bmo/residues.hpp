#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "bmo/arith.hpp"
#include "bmo/poly.hpp"
#include "bmo/quadform.hpp"

namespace bmo {

/// F = A x^2 + B y^2 + C z^2 + 2D xy + 2E xz + 2G yz.
class TernaryForm {
 public:
  TernaryForm() = default;
  TernaryForm(Rational a, Rational b, Rational c, Rational d, Rational e, Rational g)
      : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)), e_(std::move(e)), g_(std::move(g)) {}
  /// Homogeneous quadratic in x, y, z; anything else is a DomainError.
  static TernaryForm from_polynomial(const MPoly& p);
  /// x^2 + y^2 + z^2 - 2(xy + xz + yz).
  static TernaryForm reference_form();

  const Rational& A() const { return a_; }
  const Rational& B() const { return b_; }
  const Rational& C() const { return c_; }
  const Rational& D() const { return d_; }
  const Rational& E() const { return e_; }
  const Rational& G() const { return g_; }

  Matrix gram() const;
  Rational determinant() const;
  MPoly polynomial() const;
  Rational operator()(const Rational& x, const Rational& y, const Rational& z) const;
  /// Partial derivative at a point, in x, y or z.
  Rational partial(Var v, const Rational& x, const Rational& y, const Rational& z) const;

  friend bool operator==(const TernaryForm&, const TernaryForm&) = default;

 private:
  Rational a_, b_, c_, d_, e_, g_;
};

/// F with the given coordinate set to zero.
MPoly restrict_to_axis(const TernaryForm& f, Var axis);

/// g with g^2 = p (leading coefficient positive), or nullopt.
std::optional<MPoly> polynomial_square_root(const MPoly& p);

struct FConditionReport {
  bool nondegenerate = false;
  Rational determinant;
  /// Indexed by Var: square root of F restricted to that axis.
  std::array<std::optional<MPoly>, 3> restriction_roots;
  std::array<bool, 3> restriction_square{false, false, false};
  bool f_not_square = false;
  std::optional<MPoly> f_root;
  bool passes = false;
};

/// Nondegeneracy plus the axis-square conditions on F.
FConditionReport check_f_conditions(const TernaryForm& f);

/// Affine chart of P^2 in which the named coordinate is set to 1.
enum class Chart { X, Y, Z };
Var chart_variable(Chart c);
/// The two affine coordinates of a chart, in x < y < z order.
std::array<Var, 2> chart_coordinates(Chart c);

/// A codimension-one point of P^2: an irreducible generator in a chart.
class PrimeDivisor {
 public:
  /// Throws DomainError if the generator is constant or uses the chart variable.
  PrimeDivisor(Chart chart, MPoly generator);
  /// {v = 0}: charts z = 1 for x and y, x = 1 for z.
  static PrimeDivisor axis(Var v);

  Chart chart() const { return chart_; }
  const MPoly& generator() const { return gen_; }
  bool is_linear() const { return gen_.total_degree() == 1; }
  std::string to_string() const;

 private:
  Chart chart_;
  MPoly gen_;
};

/// The quaternion class (a, b) over k(P^2), entries homogeneous of degree 0.
struct QuaternionSymbolFn {
  RatFunc a;
  RatFunc b;
  QuaternionSymbolFn(RatFunc a_, RatFunc b_);
  /// (-x/z, -y/z).
  static QuaternionSymbolFn alpha();
};

/// Element of Q(t)^* / squares: constant square class times the odd part.
struct ResidueClass {
  Var variable = Var::Y;
  SquareClass constant;
  /// Monic squarefree factors occurring with odd multiplicity.
  std::vector<UPoly> factors;
  bool trivial = true;

  UPoly odd_part() const;
  std::string to_string() const;
  friend bool operator==(const ResidueClass& a, const ResidueClass& b);
};

/// Class of a nonzero univariate polynomial modulo squares.
ResidueClass residue_class_of(const UPoly& p, Var variable);

class UnsupportedDivisor : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Order of vanishing of f along D (f dehomogenised into D's chart).
long divisor_valuation(const RatFunc& f, const PrimeDivisor& d);

/// (-1)^{mn} a^n / b^m restricted to D, modulo squares in the residue field.
ResidueClass residue_of_symbol(const QuaternionSymbolFn& s, const PrimeDivisor& d);

/// Class of -(product of the other two coordinates) * F|_axis in the
/// residue field of the axis. Requires check_f_conditions(F).passes.
ResidueClass discriminant_residue_class(const TernaryForm& f, Var axis);

/// Class of -(product of the other two coordinates) along the axis.
ResidueClass coordinate_product_class(Var axis);

}  // namespace bmo
