#include "bmo/quadform.hpp"

#include <bit>
#include <sstream>

#include "bmo/hilbert.hpp"

namespace bmo {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::transpose() const {
  Matrix t(n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.n_ != b.n_) throw DomainError("matrix size mismatch");
  Matrix c(a.n_);
  for (std::size_t i = 0; i < a.n_; ++i)
    for (std::size_t k = 0; k < a.n_; ++k) {
      if (a(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < a.n_; ++j) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

Rational Matrix::determinant() const {
  Matrix m = *this;
  Rational det = 1;
  for (std::size_t k = 0; k < n_; ++k) {
    std::size_t piv = k;
    while (piv < n_ && m(piv, k).is_zero()) ++piv;
    if (piv == n_) return 0;
    if (piv != k) {
      for (std::size_t j = 0; j < n_; ++j) std::swap(m(k, j), m(piv, j));
      det = -det;
    }
    det *= m(k, k);
    for (std::size_t i = k + 1; i < n_; ++i) {
      if (m(i, k).is_zero()) continue;
      Rational f = m(i, k) / m(k, k);
      for (std::size_t j = k; j < n_; ++j) m(i, j) -= f * m(k, j);
    }
  }
  return det;
}

GramForm::GramForm(Matrix gram) : gram_(std::move(gram)) {
  for (std::size_t i = 0; i < gram_.size(); ++i)
    for (std::size_t j = i + 1; j < gram_.size(); ++j)
      if (gram_(i, j) != gram_(j, i)) throw DomainError("Gram matrix is not symmetric");
}

DiagQuadForm::DiagQuadForm(const std::vector<Rational>& entries) {
  for (const auto& e : entries) {
    if (e.is_zero())
      ++radical_;
    else
      coeffs_.push_back(e);
  }
}

DiagQuadForm::DiagQuadForm(std::vector<Rational> nonzero, std::size_t radical_dim)
    : coeffs_(std::move(nonzero)), radical_(radical_dim) {
  for (const auto& c : coeffs_)
    if (c.is_zero()) throw DomainError("diagonal coefficient is zero");
}

std::string DiagQuadForm::to_string() const {
  std::ostringstream os;
  os << "<";
  for (std::size_t i = 0; i < coeffs_.size(); ++i) os << (i ? "," : "") << coeffs_[i];
  os << ">";
  if (radical_) os << "+rad" << radical_;
  return os.str();
}

namespace {

// Simultaneous row and column operation v_dst += f * v_src on A, column on T.
void add_multiple(Matrix& a, Matrix& t, std::size_t dst, std::size_t src, const Rational& f) {
  const std::size_t n = a.size();
  for (std::size_t i = 0; i < n; ++i) a(i, dst) += f * a(i, src);
  for (std::size_t j = 0; j < n; ++j) a(dst, j) += f * a(src, j);
  for (std::size_t i = 0; i < n; ++i) t(i, dst) += f * t(i, src);
}

void swap_index(Matrix& a, Matrix& t, std::size_t i, std::size_t j) {
  if (i == j) return;
  const std::size_t n = a.size();
  for (std::size_t k = 0; k < n; ++k) std::swap(a(k, i), a(k, j));
  for (std::size_t k = 0; k < n; ++k) std::swap(a(i, k), a(j, k));
  for (std::size_t k = 0; k < n; ++k) std::swap(t(k, i), t(k, j));
}

}  // namespace

Diagonalization diagonalize(const GramForm& q) {
  const std::size_t n = q.dimension();
  Matrix a = q.gram();
  Matrix t = Matrix::identity(n);
  std::vector<Rational> coeffs;
  std::size_t k = 0;
  for (; k < n; ++k) {
    std::size_t best = n;
    for (std::size_t i = k; i < n; ++i) {
      if (a(i, i).is_zero()) continue;
      if (best == n || a(i, i).abs() > a(best, best).abs()) best = i;
    }
    if (best == n) {
      // All remaining diagonal entries vanish: manufacture one from a
      // nonzero off-diagonal entry, e_i <- e_i + e_j gives 2 a_ij.
      for (std::size_t i = k; i < n && best == n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
          if (!a(i, j).is_zero()) {
            add_multiple(a, t, i, j, 1);
            best = i;
            break;
          }
      if (best == n) break;  // remaining block is zero
    }
    swap_index(a, t, k, best);
    for (std::size_t j = k + 1; j < n; ++j) {
      if (a(j, k).is_zero()) continue;
      add_multiple(a, t, j, k, -(a(j, k) / a(k, k)));
    }
    coeffs.push_back(a(k, k));
  }
  return {DiagQuadForm(std::move(coeffs), n - k), std::move(t)};
}

SquareClass discriminant_class(const DiagQuadForm& q) {
  if (q.rank() == 0) throw DomainError("discriminant of a rank-0 form");
  Rational d = 1;
  for (const auto& c : q.coefficients()) d *= c;
  return square_class(d);
}

bool discriminant_is_local_square(const DiagQuadForm& q, const Place& v) {
  return is_local_square(Rational(discriminant_class(q).representative()), v);
}

int hasse_invariant(const DiagQuadForm& q, const Place& v) {
  const auto& a = q.coefficients();
  int e = 1;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j) e *= hilbert_symbol(a[i], a[j], v);
  return e;
}

bool is_isotropic_local(const DiagQuadForm& q, const Place& v) {
  if (q.radical_dim() > 0) return true;
  const std::size_t r = q.rank();
  if (r <= 1) return false;
  if (r >= 5) {
    if (v.is_finite()) return true;
    bool pos = false, neg = false;
    for (const auto& c : q.coefficients()) (c.sign() > 0 ? pos : neg) = true;
    return pos && neg;
  }
  const Rational d(discriminant_class(q).representative());
  if (r == 2) return is_local_square(-d, v);
  const int eps = hasse_invariant(q, v);
  if (r == 3) return hilbert_symbol(Rational(-1), -d, v) == eps;
  // r == 4
  if (!is_local_square(d, v)) return true;
  return eps == hilbert_symbol(Rational(-1), Rational(-1), v);
}

std::vector<Place> isotropy_places(const DiagQuadForm& q) {
  if (q.rank() == 0) return {Place::real(), Place::prime(2)};
  return relevant_places(q.coefficients());
}

GlobalIsotropy is_isotropic_global(const DiagQuadForm& q) {
  GlobalIsotropy out;
  out.checked = isotropy_places(q);
  for (const auto& v : out.checked)
    if (!is_isotropic_local(q, v)) out.failing.push_back(v);
  out.isotropic = out.failing.empty();
  return out;
}

unsigned long long isqrt(unsigned long long n) {
  if (n < 2) return n;
  unsigned long long x = 1ULL << ((std::bit_width(n) + 1) / 2);
  while (true) {
    unsigned long long y = (x + n / x) / 2;
    if (y >= x) break;
    x = y;
  }
  while (x > n / x) --x;
  while (x + 1 <= n / (x + 1)) ++x;
  return x;
}

namespace {

// Searches sum c_i x_i^2 = 0 with x_1..x_{n-1} in [0, bound], solving the last.
template <class T, class SqrtFn>
std::optional<std::vector<long>> oracle_search(const std::vector<T>& c, long bound, SqrtFn exact_sqrt) {
  const std::size_t n = c.size();
  std::vector<long> x(n, 0);
  const T& last = c[n - 1];
  while (true) {
    // advance odometer over the first n-1 coordinates
    std::size_t i = n - 1;
    while (i > 0) {
      --i;
      if (x[i] < bound) {
        ++x[i];
        break;
      }
      x[i] = 0;
      if (i == 0) return std::nullopt;
    }
    T s = 0;
    for (std::size_t k = 0; k + 1 < n; ++k) s += c[k] * T(x[k]) * T(x[k]);
    // last * x_n^2 = -s
    T neg = -s;
    if (neg == 0) return x;  // x_n = 0; an earlier entry is nonzero
    if ((neg < 0) != (last < 0)) continue;
    if (neg % last != 0) continue;
    T target = neg / last;
    auto root = exact_sqrt(target);
    if (root && *root <= bound) {
      x[n - 1] = *root;
      return x;
    }
  }
}

}  // namespace

std::optional<std::vector<Integer>> isotropy_oracle(const DiagQuadForm& q, long bound) {
  if (bound < 1) throw DomainError("oracle bound must be positive");
  const std::size_t r = q.rank();
  std::vector<Integer> out(q.dimension(), 0);
  if (q.radical_dim() > 0) {
    out.back() = 1;
    return out;
  }
  if (r < 2) return std::nullopt;

  Integer lcm = 1;
  for (const auto& c : q.coefficients()) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.denominator().get_mpz_t());
  std::vector<Integer> ci;
  Integer maxabs = 0;
  for (const auto& c : q.coefficients()) {
    ci.push_back(c.numerator() * (lcm / c.denominator()));
    if (abs(ci.back()) > maxabs) maxabs = abs(ci.back());
  }

  std::optional<std::vector<long>> hit;
  Integer budget = maxabs * bound * bound * static_cast<long>(r);
  if (budget < Integer("1000000000000000000")) {
    std::vector<long long> small;
    for (const auto& v : ci) small.push_back(v.get_si());
    hit = oracle_search(small, bound, [](long long t) -> std::optional<long> {
      auto s = isqrt(static_cast<unsigned long long>(t));
      if (static_cast<long long>(s * s) != t) return std::nullopt;
      return static_cast<long>(s);
    });
  } else {
    hit = oracle_search(ci, bound, [](const Integer& t) -> std::optional<long> {
      if (!mpz_perfect_square_p(t.get_mpz_t())) return std::nullopt;
      Integer s = sqrt(t);
      if (!s.fits_slong_p()) return std::nullopt;
      return s.get_si();
    });
  }
  if (!hit) return std::nullopt;
  for (std::size_t i = 0; i < r; ++i) out[i] = (*hit)[i];
  return out;
}

}  // namespace bmo
