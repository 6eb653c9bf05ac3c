#include <doctest.h>

#include <random>

#include "bmo/quadform.hpp"
#include "bmo/sweeps.hpp"
#include "oracles.hpp"

using namespace bmo;

namespace {

DiagQuadForm diag(std::initializer_list<long> c) {
  std::vector<Rational> v;
  for (long x : c) v.emplace_back(x);
  return DiagQuadForm(v);
}

Matrix sym(std::size_t n, std::initializer_list<long> entries) {
  Matrix m(n);
  auto it = entries.begin();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = Rational(*it++);
  return m;
}

void check_round_trip(const Matrix& g) {
  Diagonalization d = diagonalize(GramForm(g));
  Matrix t = d.transform;
  Matrix conj = t.transpose() * g * t;
  const std::size_t n = g.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Rational want = (i == j && i < d.form.rank()) ? d.form.coefficients()[i] : Rational(0);
      CHECK(conj(i, j) == want);
    }
  CHECK_FALSE(t.determinant().is_zero());
  CHECK(d.form.dimension() == n);
}

}  // namespace

TEST_CASE("GramForm rejects asymmetric matrices") {
  Matrix m(2);
  m(0, 1) = Rational(1);
  CHECK_THROWS_AS(GramForm{m}, DomainError);
}

TEST_CASE("diagonalize examples") {
  auto id = diagonalize(GramForm(Matrix::identity(3)));
  CHECK(id.form.coefficients() == std::vector<Rational>{1, 1, 1});
  CHECK(id.form.radical_dim() == 0);

  Matrix hyp = sym(2, {0, 1, 1, 0});
  auto h = diagonalize(GramForm(hyp));
  REQUIRE(h.form.rank() == 2);
  CHECK(h.form.radical_dim() == 0);
  // Hyperbolic plane: discriminant class -1.
  CHECK(discriminant_class(h.form).representative() == -1);
  check_round_trip(hyp);

  auto z = diagonalize(GramForm(Matrix(2)));
  CHECK(z.form.rank() == 0);
  CHECK(z.form.radical_dim() == 2);
}

TEST_CASE("diagonalize round-trip on random symmetric matrices") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<long> e(-4, 4);
  for (int trial = 0; trial < 300; ++trial) {
    std::size_t n = 1 + trial % 5;
    Matrix g(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) {
        // Sparse diagonals exercise the rank-2 completion.
        long v = (i == j && trial % 3 == 0) ? 0 : e(rng);
        g(i, j) = g(j, i) = Rational(v);
      }
    check_round_trip(g);
  }
}

TEST_CASE("DiagQuadForm bookkeeping") {
  DiagQuadForm q = diag({1, 0, -3, 0});
  CHECK(q.rank() == 2);
  CHECK(q.radical_dim() == 2);
  CHECK(q.dimension() == 4);
  CHECK_THROWS_AS(DiagQuadForm({Rational(1), Rational(0)}, 1), DomainError);
}

TEST_CASE("discriminant_class examples") {
  CHECK(discriminant_class(diag({1, 1, 1, -3})).representative() == -3);
  CHECK(discriminant_class(diag({2, 8})).is_trivial());
  CHECK_FALSE(discriminant_is_local_square(diag({1, 1, 1, -3}), Place::prime(2)));
  CHECK_THROWS_AS(discriminant_class(DiagQuadForm({}, 2)), DomainError);
}

TEST_CASE("hasse_invariant examples") {
  for (const Place& v : {Place::real(), Place::prime(2), Place::prime(3), Place::prime(5)})
    CHECK(hasse_invariant(diag({1, 1, 1, 1}), v) == 1);
  CHECK(hasse_invariant(diag({-1, -1}), Place::real()) == -1);
  CHECK(hasse_invariant(diag({1, 1, 1, -3}), Place::prime(3)) == 1);
}

TEST_CASE("is_isotropic_local examples") {
  CHECK_FALSE(is_isotropic_local(diag({1, 1, 1, 1}), Place::real()));
  CHECK(is_isotropic_local(diag({1, 1, 1, -3}), Place::real()));
  CHECK(is_isotropic_local(diag({1, 1, 1, -3}), Place::prime(2)));
  CHECK(is_isotropic_local(diag({1, 0}), Place::prime(3)));
  CHECK_FALSE(is_isotropic_local(diag({5}), Place::prime(3)));
  CHECK_FALSE(is_isotropic_local(diag({1, 1, 1, 1}), Place::prime(2)));
  CHECK(is_isotropic_local(diag({1, 1, 1, 1, 1}), Place::prime(2)));
}

TEST_CASE("local criteria match the exhaustive p-adic oracle") {
  const std::vector<long> coeffs{-10, -7, -6, -3, -2, -1, 1, 2, 3, 5, 6, 7, 10, 14};
  for (unsigned long p : {2ul, 3ul, 5ul, 7ul}) {
    for (std::size_t rank = 1; rank <= 4; ++rank) {
      if (p == 7 && rank == 4) continue;
      // Rank 4 at 5 costs 125^3 per pivot on anisotropic forms: thin it out.
      const std::size_t stride = p == 5 ? 40 : 9;
      std::vector<std::size_t> idx(rank, 0);
      std::size_t count = 0;
      while (true) {
        std::vector<Rational> c;
        for (auto i : idx) c.emplace_back(coeffs[i]);
        if (rank < 4 || count++ % stride == 0) {
          INFO(DiagQuadForm(c).to_string(), " at ", p);
          CHECK(is_isotropic_local(DiagQuadForm(c), Place::prime(p)) == testoracle::local_isotropic(c, p));
        }
        // Nondecreasing index tuples: isotropy ignores order.
        std::size_t pos = rank;
        while (pos > 0 && idx[pos - 1] == coeffs.size() - 1) --pos;
        if (pos == 0) break;
        ++idx[pos - 1];
        for (std::size_t k = pos; k < rank; ++k) idx[k] = idx[pos - 1];
      }
    }
  }
}

TEST_CASE("rank 5 is isotropic at every finite place") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<long> e(-30, 30);
  for (int i = 0; i < 100; ++i) {
    std::vector<Rational> c;
    while (c.size() < 5) {
      long x = e(rng);
      if (x) c.emplace_back(x);
    }
    for (unsigned long p : {2ul, 3ul, 5ul}) CHECK(is_isotropic_local(DiagQuadForm(c), Place::prime(p)));
    CHECK(is_isotropic_local(DiagQuadForm(c), Place::real()) == testoracle::real_isotropic(c));
  }
}

TEST_CASE("rank-4 consistency") {
  const std::vector<long> coeffs{-5, -3, -2, -1, 1, 2, 3, 5};
  const std::vector<std::size_t> ranks{4};
  std::size_t instances = 0;
  for (const auto& q : diagonal_forms(coeffs, ranks))
    for (unsigned long p : {2ul, 3ul, 5ul}) {
      Place v = Place::prime(p);
      if (discriminant_is_local_square(q, v) && is_isotropic_local(q, v)) {
        ++instances;
        CHECK(hasse_invariant(q, v) == hilbert_symbol(-1, -1, v));
      }
    }
  CHECK(instances > 0);
}

TEST_CASE("isotropy is invariant under square scaling") {
  std::mt19937_64 rng(4);
  std::uniform_int_distribution<long> e(-12, 12), s(1, 6);
  for (int i = 0; i < 200; ++i) {
    std::vector<Rational> c;
    while (c.size() < 3 + static_cast<std::size_t>(i % 2)) {
      long x = e(rng);
      if (x) c.emplace_back(x);
    }
    std::vector<Rational> scaled = c;
    long k = s(rng);
    scaled[static_cast<std::size_t>(i) % c.size()] *= Rational(k * k);
    for (const Place& v : {Place::real(), Place::prime(2), Place::prime(3), Place::prime(5)})
      CHECK(is_isotropic_local(DiagQuadForm(c), v) == is_isotropic_local(DiagQuadForm(scaled), v));
  }
}

TEST_CASE("is_isotropic_global examples") {
  auto a = is_isotropic_global(diag({1, 1, 1, -3}));
  CHECK(a.isotropic);
  CHECK(a.failing.empty());
  auto b = is_isotropic_global(diag({1, 1}));
  CHECK_FALSE(b.isotropic);
  CHECK(b.failing == (std::vector<Place>{Place::real(), Place::prime(2)}));
  auto c = is_isotropic_global(diag({1, -2}));
  CHECK_FALSE(c.isotropic);
  CHECK(std::find(c.failing.begin(), c.failing.end(), Place::prime(2)) != c.failing.end());
}

TEST_CASE("isotropy_oracle examples") {
  auto a = isotropy_oracle(diag({1, 1, 1, -3}), 1);
  REQUIRE(a);
  CHECK(*a == std::vector<Integer>{1, 1, 1, 1});
  auto b = isotropy_oracle(diag({1, -1}), 1);
  REQUIRE(b);
  CHECK(*b == std::vector<Integer>{1, 1});
  CHECK_FALSE(isotropy_oracle(diag({1, 1}), 10));
  auto r = isotropy_oracle(diag({1, 0, 2}), 3);
  REQUIRE(r);
  CHECK(*r == std::vector<Integer>{0, 0, 1});
}

TEST_CASE("isqrt") {
  for (unsigned long long n = 0; n < 5000; ++n) {
    unsigned long long r = isqrt(n);
    CHECK(r * r <= n);
    CHECK((r + 1) * (r + 1) > n);
  }
  CHECK(isqrt(18446744073709551615ull) == 4294967295ull);
}
