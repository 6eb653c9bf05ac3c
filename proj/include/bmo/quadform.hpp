#pragma once

#include <optional>
#include <vector>

#include "bmo/arith.hpp"

namespace bmo {

/// Dense square matrix of rationals, row-major.
class Matrix {
 public:
  Matrix() = default;
  explicit Matrix(std::size_t n) : n_(n), a_(n * n) {}
  static Matrix identity(std::size_t n);

  std::size_t size() const { return n_; }
  Rational& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

  Matrix transpose() const;
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix&, const Matrix&) = default;

  Rational determinant() const;

 private:
  std::size_t n_ = 0;
  std::vector<Rational> a_;
};

/// Symmetric Gram matrix of a quadratic form q(v) = v^T G v.
class GramForm {
 public:
  /// Throws DomainError if the matrix is not exactly symmetric.
  explicit GramForm(Matrix gram);
  std::size_t dimension() const { return gram_.size(); }
  const Matrix& gram() const { return gram_; }

 private:
  Matrix gram_;
};

/// <a_1, ..., a_r> plus a radical of the given dimension.
class DiagQuadForm {
 public:
  DiagQuadForm() = default;
  /// Zero entries are moved into the radical.
  explicit DiagQuadForm(const std::vector<Rational>& entries);
  DiagQuadForm(std::vector<Rational> nonzero, std::size_t radical_dim);

  const std::vector<Rational>& coefficients() const { return coeffs_; }
  std::size_t rank() const { return coeffs_.size(); }
  std::size_t radical_dim() const { return radical_; }
  std::size_t dimension() const { return coeffs_.size() + radical_; }

  std::string to_string() const;

 private:
  std::vector<Rational> coeffs_;
  std::size_t radical_ = 0;
};

struct Diagonalization {
  DiagQuadForm form;
  /// T with T^T G T = diag(coefficients, 0, ..., 0).
  Matrix transform;
};

/// Congruence diagonalisation by symmetric Gaussian elimination.
Diagonalization diagonalize(const GramForm& q);

/// Product of the coefficients modulo squares. Rank 0 is a DomainError.
SquareClass discriminant_class(const DiagQuadForm& q);
/// Whether the discriminant is a square in Q_v.
bool discriminant_is_local_square(const DiagQuadForm& q, const Place& v);

/// prod_{i<j} (a_i, a_j)_v.
int hasse_invariant(const DiagQuadForm& q, const Place& v);

/// Local isotropy by the rank-by-rank invariant criteria.
bool is_isotropic_local(const DiagQuadForm& q, const Place& v);

struct GlobalIsotropy {
  bool isotropic = false;
  std::vector<Place> checked;
  std::vector<Place> failing;
};

/// Hasse-Minkowski: isotropic at every place where it can fail.
GlobalIsotropy is_isotropic_global(const DiagQuadForm& q);

/// Places at which isotropy of q can fail: real, 2, and the odd primes of
/// the coefficients.
std::vector<Place> isotropy_places(const DiagQuadForm& q);

/// Nonzero integer vector with entries in [-bound, bound] on which q vanishes,
/// radical coordinates last. nullopt means "not found", not "anisotropic".
std::optional<std::vector<Integer>> isotropy_oracle(const DiagQuadForm& q, long bound);

/// Integer square root floor(sqrt(n)) for n >= 0.
unsigned long long isqrt(unsigned long long n);

}  // namespace bmo
