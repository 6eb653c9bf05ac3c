#include "bmo/residues.hpp"

#include <sstream>

namespace bmo {

namespace {

const Monomial kXX{2, 0, 0}, kYY{0, 2, 0}, kZZ{0, 0, 2}, kXY{1, 1, 0}, kXZ{1, 0, 1}, kYZ{0, 1, 1};

std::optional<Rational> rational_sqrt(const Rational& c) {
  if (c.sign() < 0) return std::nullopt;
  if (!mpz_perfect_square_p(c.numerator().get_mpz_t()) || !mpz_perfect_square_p(c.denominator().get_mpz_t()))
    return std::nullopt;
  return Rational(Integer(sqrt(c.numerator())), Integer(sqrt(c.denominator())));
}

UPoly to_upoly(const MPoly& p, Var v) {
  std::vector<Rational> c;
  const int i = static_cast<int>(v);
  for (const auto& [m, coef] : p.terms()) {
    for (int k = 0; k < 3; ++k)
      if (k != i && m[k] != 0) throw DomainError("polynomial is not univariate in " + std::string(1, var_name(v)));
    std::size_t e = static_cast<std::size_t>(m[i]);
    if (c.size() <= e) c.resize(e + 1);
    c[e] += coef;
  }
  return UPoly(std::move(c));
}

long multiplicity(MPoly p, const MPoly& gen) {
  long k = 0;
  while (true) {
    auto q = p.divide_exact(gen);
    if (!q) return k;
    p = std::move(*q);
    ++k;
  }
}

MPoly strip(MPoly p, const MPoly& gen) {
  while (auto q = p.divide_exact(gen)) p = std::move(*q);
  return p;
}

MPoly dehomogenise(const MPoly& p, Chart c) { return p.substitute(chart_variable(c), Rational(1)); }

struct LineRestriction {
  Var solved;
  MPoly value;
  Var residue_variable;
};

// Solve the linear generator for one chart coordinate.
LineRestriction solve_line(const PrimeDivisor& d) {
  auto [u, w] = chart_coordinates(d.chart());
  const MPoly& g = d.generator();
  Monomial mu{0, 0, 0}, mw{0, 0, 0};
  mu[static_cast<int>(u)] = 1;
  mw[static_cast<int>(w)] = 1;
  Rational cu = g.coefficient(mu), cw = g.coefficient(mw), c0 = g.coefficient({0, 0, 0});
  if (!cu.is_zero()) {
    MPoly value = (MPoly::variable(w).scaled(cw) + MPoly(c0)).scaled(-(Rational(1) / cu));
    return {u, value, w};
  }
  return {w, MPoly(-(c0 / cw)), u};
}

}  // namespace

TernaryForm TernaryForm::from_polynomial(const MPoly& p) {
  if (!p.is_zero() && (p.total_degree() != 2 || !p.is_homogeneous()))
    throw DomainError("not a ternary quadratic form: " + p.to_string());
  Rational half(Integer(1), Integer(2));
  return TernaryForm(p.coefficient(kXX), p.coefficient(kYY), p.coefficient(kZZ), p.coefficient(kXY) * half,
                     p.coefficient(kXZ) * half, p.coefficient(kYZ) * half);
}

TernaryForm TernaryForm::reference_form() { return TernaryForm(1, 1, 1, -1, -1, -1); }

Matrix TernaryForm::gram() const {
  Matrix m(3);
  m(0, 0) = a_;
  m(1, 1) = b_;
  m(2, 2) = c_;
  m(0, 1) = m(1, 0) = d_;
  m(0, 2) = m(2, 0) = e_;
  m(1, 2) = m(2, 1) = g_;
  return m;
}

Rational TernaryForm::determinant() const {
  return a_ * b_ * c_ + Rational(2) * d_ * e_ * g_ - a_ * g_ * g_ - b_ * e_ * e_ - c_ * d_ * d_;
}

MPoly TernaryForm::polynomial() const {
  return MPoly::from_terms({{kXX, a_},
                            {kYY, b_},
                            {kZZ, c_},
                            {kXY, Rational(2) * d_},
                            {kXZ, Rational(2) * e_},
                            {kYZ, Rational(2) * g_}});
}

Rational TernaryForm::operator()(const Rational& x, const Rational& y, const Rational& z) const {
  return a_ * x * x + b_ * y * y + c_ * z * z + Rational(2) * (d_ * x * y + e_ * x * z + g_ * y * z);
}

Rational TernaryForm::partial(Var v, const Rational& x, const Rational& y, const Rational& z) const {
  switch (v) {
    case Var::X: return Rational(2) * (a_ * x + d_ * y + e_ * z);
    case Var::Y: return Rational(2) * (d_ * x + b_ * y + g_ * z);
    case Var::Z: return Rational(2) * (e_ * x + g_ * y + c_ * z);
  }
  return 0;
}

MPoly restrict_to_axis(const TernaryForm& f, Var axis) { return f.polynomial().substitute(axis, Rational(0)); }

std::optional<MPoly> polynomial_square_root(const MPoly& p) {
  if (p.is_zero()) return MPoly();
  const auto& [lm, lc] = p.leading();
  for (int e : lm)
    if (e % 2 != 0) return std::nullopt;
  auto c = rational_sqrt(lc);
  if (!c) return std::nullopt;
  const Monomial gm{lm[0] / 2, lm[1] / 2, lm[2] / 2};
  const Rational two_gc = Rational(2) * *c;
  MPoly g = MPoly::monomial(gm, *c);
  Monomial last = gm;
  MPoly rest = p - g * g;
  while (!rest.is_zero()) {
    // The next root term t satisfies lt(rest) = 2 lt(g) t.
    const auto& [rm, rc] = rest.leading();
    Monomial tm{rm[0] - gm[0], rm[1] - gm[1], rm[2] - gm[2]};
    if (tm[0] < 0 || tm[1] < 0 || tm[2] < 0) return std::nullopt;
    if (!grlex_less(tm, last)) return std::nullopt;
    MPoly t = MPoly::monomial(tm, rc / two_gc);
    rest -= (g.scaled(Rational(2)) + t) * t;
    g += t;
    last = tm;
  }
  return g;
}

FConditionReport check_f_conditions(const TernaryForm& f) {
  FConditionReport r;
  r.determinant = f.determinant();
  r.nondegenerate = !r.determinant.is_zero();
  for (Var v : {Var::X, Var::Y, Var::Z}) {
    auto root = polynomial_square_root(restrict_to_axis(f, v));
    r.restriction_square[static_cast<int>(v)] = root.has_value();
    r.restriction_roots[static_cast<int>(v)] = std::move(root);
  }
  r.f_root = polynomial_square_root(f.polynomial());
  r.f_not_square = !r.f_root.has_value();
  r.passes = r.nondegenerate && r.f_not_square && r.restriction_square[0] && r.restriction_square[1] &&
             r.restriction_square[2];
  return r;
}

Var chart_variable(Chart c) {
  switch (c) {
    case Chart::X: return Var::X;
    case Chart::Y: return Var::Y;
    case Chart::Z: return Var::Z;
  }
  return Var::Z;
}

std::array<Var, 2> chart_coordinates(Chart c) {
  switch (c) {
    case Chart::X: return {Var::Y, Var::Z};
    case Chart::Y: return {Var::X, Var::Z};
    case Chart::Z: return {Var::X, Var::Y};
  }
  return {Var::X, Var::Y};
}

PrimeDivisor::PrimeDivisor(Chart chart, MPoly generator) : chart_(chart), gen_(std::move(generator)) {
  if (gen_.is_constant()) throw DomainError("divisor generator is constant");
  if (gen_.involves(chart_variable(chart_))) throw DomainError("divisor generator uses the chart variable");
}

PrimeDivisor PrimeDivisor::axis(Var v) {
  return PrimeDivisor(v == Var::Z ? Chart::X : Chart::Z, MPoly::variable(v));
}

std::string PrimeDivisor::to_string() const {
  return "{" + gen_.to_string() + " = 0} in chart " + std::string(1, var_name(chart_variable(chart_))) + "=1";
}

QuaternionSymbolFn::QuaternionSymbolFn(RatFunc a_, RatFunc b_) : a(std::move(a_)), b(std::move(b_)) {
  if (a.is_zero() || b.is_zero()) throw DomainError("quaternion symbol entry is zero");
}

QuaternionSymbolFn QuaternionSymbolFn::alpha() {
  MPoly z = MPoly::variable(Var::Z);
  return {RatFunc(-MPoly::variable(Var::X), z), RatFunc(-MPoly::variable(Var::Y), z)};
}

UPoly ResidueClass::odd_part() const {
  UPoly p(Rational(1));
  for (const auto& f : factors) p = p * f;
  return p;
}

bool operator==(const ResidueClass& a, const ResidueClass& b) {
  return a.variable == b.variable && a.constant == b.constant && a.odd_part() == b.odd_part();
}

std::string ResidueClass::to_string() const {
  const char t = var_name(variable);
  std::ostringstream os;
  const Integer& c = constant.representative();
  if (factors.empty()) return c.get_str();
  if (c == -1)
    os << '-';
  else if (c != 1)
    os << c.get_str() << '*';
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i) os << '*';
    const auto& f = factors[i];
    bool bare = f.degree() == 1 && f.coeffs()[0].is_zero();
    if (bare)
      os << t;
    else
      os << '(' << f.to_string(t) << ')';
  }
  return os.str();
}

ResidueClass residue_class_of(const UPoly& p, Var variable) {
  if (p.is_zero()) throw DomainError("residue class of zero");
  ResidueClass r;
  r.variable = variable;
  r.constant = square_class(p.leading());
  auto parts = squarefree_decomposition(p);
  for (std::size_t i = 0; i < parts.size(); ++i)
    if (i % 2 == 0 && parts[i].degree() > 0) r.factors.push_back(parts[i]);
  r.trivial = r.factors.empty() && r.constant.is_trivial();
  return r;
}

long divisor_valuation(const RatFunc& f, const PrimeDivisor& d) {
  if (f.is_zero()) throw DomainError("valuation of the zero function");
  MPoly num = dehomogenise(f.numerator(), d.chart());
  MPoly den = dehomogenise(f.denominator(), d.chart());
  if (num.is_zero() || den.is_zero()) throw DomainError("function vanishes identically in the divisor's chart");
  return multiplicity(num, d.generator()) - multiplicity(den, d.generator());
}

ResidueClass residue_of_symbol(const QuaternionSymbolFn& s, const PrimeDivisor& d) {
  const long m = divisor_valuation(s.a, d);
  const long n = divisor_valuation(s.b, d);
  if (!d.is_linear()) {
    if (m == 0 && n == 0) {
      ResidueClass r;
      r.variable = chart_coordinates(d.chart())[0];
      return r;
    }
    throw UnsupportedDivisor("residue along a nonlinear divisor: " + d.to_string());
  }
  RatFunc a(dehomogenise(s.a.numerator(), d.chart()), dehomogenise(s.a.denominator(), d.chart()));
  RatFunc b(dehomogenise(s.b.numerator(), d.chart()), dehomogenise(s.b.denominator(), d.chart()));
  RatFunc c = a.pow(n) / b.pow(m);
  if ((m * n) % 2 != 0) c = -c;

  // Valuation of c is n*m - m*n = 0; remove the generator from both sides.
  MPoly num = strip(c.numerator(), d.generator());
  MPoly den = strip(c.denominator(), d.generator());
  LineRestriction line = solve_line(d);
  UPoly rn = to_upoly(num.substitute(line.solved, line.value), line.residue_variable);
  UPoly rd = to_upoly(den.substitute(line.solved, line.value), line.residue_variable);
  // num/den and num*den agree modulo squares.
  return residue_class_of(rn * rd, line.residue_variable);
}

namespace {

MPoly other_coordinates_product(Var axis) {
  MPoly p(Rational(1));
  for (Var v : {Var::X, Var::Y, Var::Z})
    if (v != axis) p *= MPoly::variable(v);
  return p;
}

ResidueClass axis_class(const MPoly& homogeneous, Var axis) {
  PrimeDivisor d = PrimeDivisor::axis(axis);
  LineRestriction line = solve_line(d);
  MPoly affine = dehomogenise(homogeneous, d.chart()).substitute(line.solved, line.value);
  return residue_class_of(to_upoly(affine, line.residue_variable), line.residue_variable);
}

}  // namespace

ResidueClass discriminant_residue_class(const TernaryForm& f, Var axis) {
  if (!check_f_conditions(f).passes)
    throw PreconditionError("f-conditions", "F does not satisfy the axis-square conditions");
  return axis_class(-(other_coordinates_product(axis) * restrict_to_axis(f, axis)), axis);
}

ResidueClass coordinate_product_class(Var axis) { return axis_class(-other_coordinates_product(axis), axis); }

}  // namespace bmo
