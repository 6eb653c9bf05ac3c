#include "bmo/poly.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace bmo {

char var_name(Var v) { return "xyz"[static_cast<int>(v)]; }

int total_degree(const Monomial& m) { return m[0] + m[1] + m[2]; }

bool grlex_less(const Monomial& a, const Monomial& b) {
  int da = total_degree(a), db = total_degree(b);
  if (da != db) return da < db;
  return a < b;
}

namespace {

bool grlex_greater(const MPoly::Term& a, const MPoly::Term& b) { return grlex_less(b.first, a.first); }

Monomial mul(const Monomial& a, const Monomial& b) { return {a[0] + b[0], a[1] + b[1], a[2] + b[2]}; }

void append_monomial(std::ostringstream& os, const Monomial& m) {
  bool first = true;
  for (int i = 0; i < 3; ++i) {
    if (m[i] == 0) continue;
    if (!first) os << '*';
    os << "xyz"[i];
    if (m[i] > 1) os << '^' << m[i];
    first = false;
  }
}

}  // namespace

MPoly::MPoly(const Rational& c) {
  if (!c.is_zero()) terms_.push_back({Monomial{0, 0, 0}, c});
}

MPoly MPoly::variable(Var v) {
  Monomial m{0, 0, 0};
  m[static_cast<int>(v)] = 1;
  return monomial(m, 1);
}

MPoly MPoly::monomial(const Monomial& m, const Rational& c) {
  MPoly p;
  if (c.is_zero()) return p;
  for (int e : m)
    if (e < 0) throw DomainError("negative exponent");
  p.terms_.push_back({m, c});
  return p;
}

MPoly MPoly::from_terms(std::vector<Term> terms) {
  MPoly p;
  p.terms_ = std::move(terms);
  p.normalise();
  return p;
}

void MPoly::normalise() {
  std::sort(terms_.begin(), terms_.end(), grlex_greater);
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!out.empty() && out.back().first == t.first)
      out.back().second += t.second;
    else
      out.push_back(std::move(t));
    if (out.back().second.is_zero()) out.pop_back();
  }
  terms_ = std::move(out);
}

bool MPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && total_degree() == 0);
}

int MPoly::total_degree() const {
  return terms_.empty() ? -1 : bmo::total_degree(terms_.front().first);
}

int MPoly::degree_in(Var v) const {
  int d = terms_.empty() ? -1 : 0;
  for (const auto& t : terms_) d = std::max(d, t.first[static_cast<int>(v)]);
  return d;
}

bool MPoly::is_homogeneous() const {
  for (const auto& t : terms_)
    if (bmo::total_degree(t.first) != total_degree()) return false;
  return true;
}

const MPoly::Term& MPoly::leading() const {
  if (terms_.empty()) throw DomainError("leading term of zero polynomial");
  return terms_.front();
}

Rational MPoly::coefficient(const Monomial& m) const {
  for (const auto& t : terms_)
    if (t.first == m) return t.second;
  return 0;
}

MPoly MPoly::operator-() const {
  MPoly p = *this;
  for (auto& t : p.terms_) t.second = -t.second;
  return p;
}

MPoly& MPoly::operator+=(const MPoly& o) {
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  auto a = terms_.begin(), ae = terms_.end();
  auto b = o.terms_.begin(), be = o.terms_.end();
  while (a != ae || b != be) {
    if (b == be || (a != ae && grlex_less(b->first, a->first))) {
      out.push_back(std::move(*a++));
    } else if (a == ae || grlex_less(a->first, b->first)) {
      out.push_back(*b++);
    } else {
      Rational c = a->second + b->second;
      if (!c.is_zero()) out.push_back({a->first, std::move(c)});
      ++a;
      ++b;
    }
  }
  terms_ = std::move(out);
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) { return *this += -o; }

MPoly operator*(const MPoly& a, const MPoly& b) {
  MPoly p;
  p.terms_.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& s : a.terms_)
    for (const auto& t : b.terms_) p.terms_.push_back({mul(s.first, t.first), s.second * t.second});
  p.normalise();
  return p;
}

MPoly& MPoly::operator*=(const MPoly& o) { return *this = *this * o; }

MPoly MPoly::scaled(const Rational& c) const {
  if (c.is_zero()) return {};
  MPoly p = *this;
  for (auto& t : p.terms_) t.second *= c;
  return p;
}

MPoly MPoly::pow(unsigned e) const {
  MPoly result(Rational(1)), base = *this;
  while (e) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

MPoly MPoly::substitute(Var v, const Rational& value) const {
  const int i = static_cast<int>(v);
  std::vector<Term> out;
  for (const auto& t : terms_) {
    Monomial m = t.first;
    Rational c = t.second * value.pow(m[i]);
    m[i] = 0;
    out.push_back({m, c});
  }
  return from_terms(std::move(out));
}

MPoly MPoly::substitute(Var v, const MPoly& value) const {
  const int i = static_cast<int>(v);
  MPoly out;
  for (const auto& t : terms_) {
    Monomial m = t.first;
    int e = m[i];
    m[i] = 0;
    out += monomial(m, t.second) * value.pow(static_cast<unsigned>(e));
  }
  return out;
}

Rational MPoly::evaluate(const Rational& x, const Rational& y, const Rational& z) const {
  Rational s = 0;
  for (const auto& t : terms_) s += t.second * x.pow(t.first[0]) * y.pow(t.first[1]) * z.pow(t.first[2]);
  return s;
}

MPoly MPoly::derivative(Var v) const {
  const int i = static_cast<int>(v);
  std::vector<Term> out;
  for (const auto& t : terms_) {
    if (t.first[i] == 0) continue;
    Monomial m = t.first;
    Rational c = t.second * Rational(m[i]);
    --m[i];
    out.push_back({m, c});
  }
  return from_terms(std::move(out));
}

std::optional<MPoly> MPoly::divide_exact(const MPoly& divisor) const {
  if (divisor.is_zero()) throw DomainError("division by zero polynomial");
  MPoly rest = *this, quot;
  const auto& [dm, dc] = divisor.leading();
  while (!rest.is_zero()) {
    const auto& [rm, rc] = rest.leading();
    Monomial q{rm[0] - dm[0], rm[1] - dm[1], rm[2] - dm[2]};
    if (q[0] < 0 || q[1] < 0 || q[2] < 0) return std::nullopt;
    MPoly t = monomial(q, rc / dc);
    quot += t;
    rest -= t * divisor;
  }
  return quot;
}

std::string MPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Rational a = c.abs();
    if (first)
      os << (c.sign() < 0 ? "-" : "");
    else
      os << (c.sign() < 0 ? " - " : " + ");
    bool unit_monomial = bmo::total_degree(m) == 0;
    if (a != 1 || unit_monomial) {
      os << a;
      if (!unit_monomial) os << '*';
    }
    append_monomial(os, m);
    first = false;
  }
  return os.str();
}

// ---------------------------------------------------------------- UPoly

UPoly::UPoly(const Rational& c) {
  if (!c.is_zero()) c_.push_back(c);
}

UPoly::UPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

UPoly UPoly::x() { return UPoly(std::vector<Rational>{0, 1}); }

void UPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

const Rational& UPoly::leading() const {
  if (c_.empty()) throw DomainError("leading coefficient of zero polynomial");
  return c_.back();
}

UPoly UPoly::monic() const {
  if (c_.empty()) return {};
  UPoly p = *this;
  Rational lc = leading();
  for (auto& c : p.c_) c /= lc;
  return p;
}

UPoly UPoly::operator-() const {
  UPoly p = *this;
  for (auto& c : p.c_) c = -c;
  return p;
}

UPoly& UPoly::operator+=(const UPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

UPoly& UPoly::operator-=(const UPoly& o) { return *this += -o; }

UPoly operator*(const UPoly& a, const UPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> c(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  return UPoly(std::move(c));
}

UPoly UPoly::pow(unsigned e) const {
  UPoly r(Rational(1));
  for (unsigned i = 0; i < e; ++i) r = r * *this;
  return r;
}

UPoly UPoly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<Rational> d(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * Rational(static_cast<long>(i));
  return UPoly(std::move(d));
}

std::pair<UPoly, UPoly> UPoly::divmod(const UPoly& d) const {
  if (d.is_zero()) throw DomainError("division by zero polynomial");
  UPoly r = *this;
  if (r.degree() < d.degree()) return {UPoly(), r};
  std::vector<Rational> q(r.c_.size() - d.c_.size() + 1);
  while (!r.is_zero() && r.degree() >= d.degree()) {
    std::size_t shift = static_cast<std::size_t>(r.degree() - d.degree());
    Rational f = r.leading() / d.leading();
    q[shift] = f;
    for (std::size_t i = 0; i < d.c_.size(); ++i) r.c_[i + shift] -= f * d.c_[i];
    r.trim();
  }
  return {UPoly(std::move(q)), r};
}

Rational UPoly::evaluate(const Rational& t) const {
  Rational s = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) s = s * t + *it;
  return s;
}

std::string UPoly::to_string(char var) const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Rational& c = c_[static_cast<std::size_t>(i)];
    if (c.is_zero()) continue;
    Rational a = c.abs();
    if (first)
      os << (c.sign() < 0 ? "-" : "");
    else
      os << (c.sign() < 0 ? " - " : " + ");
    if (a != 1 || i == 0) {
      os << a;
      if (i > 0) os << '*';
    }
    if (i > 0) os << var;
    if (i > 1) os << '^' << i;
    first = false;
  }
  return os.str();
}

UPoly gcd(UPoly a, UPoly b) {
  while (!b.is_zero()) {
    auto r = a.divmod(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

std::vector<UPoly> squarefree_decomposition(const UPoly& p) {
  if (p.is_zero()) throw DomainError("squarefree decomposition of zero");
  std::vector<UPoly> out;
  if (p.degree() == 0) return out;
  UPoly f = p.monic();
  UPoly fp = f.derivative();
  UPoly a = gcd(f, fp);
  UPoly b = f.divmod(a).first;
  UPoly c = fp.divmod(a).first;
  UPoly d = c - b.derivative();
  while (b.degree() > 0) {
    UPoly ai = gcd(b, d);
    b = b.divmod(ai).first;
    c = d.divmod(ai).first;
    d = c - b.derivative();
    out.push_back(ai.monic());
  }
  return out;
}

// ---------------------------------------------------------------- RatFunc

RatFunc::RatFunc(const MPoly& p) : num_(p), den_(Rational(1)) {}

RatFunc::RatFunc(MPoly num, MPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw DomainError("rational function with zero denominator");
  Rational lc = den_.leading().second;
  if (lc != 1) {
    Rational inv = Rational(1) / lc;
    num_ = num_.scaled(inv);
    den_ = den_.scaled(inv);
  }
}

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
  return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
  if (b.is_zero()) throw DomainError("division by zero rational function");
  return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
}

RatFunc RatFunc::pow(long e) const {
  if (e >= 0) return RatFunc(num_.pow(static_cast<unsigned>(e)), den_.pow(static_cast<unsigned>(e)));
  if (is_zero()) throw DomainError("zero rational function to a negative power");
  return RatFunc(den_.pow(static_cast<unsigned>(-e)), num_.pow(static_cast<unsigned>(-e)));
}

RatFunc RatFunc::substitute(Var v, const Rational& value) const {
  return RatFunc(num_.substitute(v, value), den_.substitute(v, value));
}

std::string RatFunc::to_string() const {
  if (den_ == MPoly(Rational(1))) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

}  // namespace bmo
