#include "bmo/sweeps.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace bmo {

namespace {

constexpr std::size_t kMaxExamples = 10;

void note(SweepResult& r, std::string s) {
  ++r.discrepancies;
  if (r.examples.size() < kMaxExamples) r.examples.push_back(std::move(s));
}

void merge(SweepResult& into, SweepResult&& from) {
  into.checked += from.checked;
  into.discrepancies += from.discrepancies;
  for (auto& e : from.examples)
    if (into.examples.size() < kMaxExamples) into.examples.push_back(std::move(e));
}

unsigned long power(unsigned long p, int d) {
  unsigned long m = 1;
  for (int i = 0; i < d; ++i) m *= p;
  return m;
}

SweepResult hilbert_place_sweep(std::span<const Rational> values, const Place& v, Exec exec) {
  const std::size_t n = values.size();
  SweepResult res;
  if (v.is_real()) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        ++res.checked;
        int f = hilbert_symbol(values[i], values[j], v);
        int o = hilbert_oracle(values[i], values[j], v, 0);
        if (f != o)
          note(res, "(" + values[i].to_string() + "," + values[j].to_string() + ")_inf formula " +
                        std::to_string(f) + " oracle " + std::to_string(o));
      }
    return res;
  }
  const unsigned long p = v.prime();
  const int depth = sweep_oracle_depth(p);

  // Each value maps to the class the oracle sees; the oracle result then
  // depends only on the pair of classes.
  std::map<std::pair<int, unsigned long>, int> ids;
  std::vector<oracle::Normalised> classes;
  std::vector<int> id(n);
  for (std::size_t i = 0; i < n; ++i) {
    auto nr = oracle::normalise(values[i], p, depth);
    auto [it, fresh] = ids.emplace(std::make_pair(nr.e, nr.unit), static_cast<int>(classes.size()));
    if (fresh) classes.push_back(nr);
    id[i] = it->second;
  }
  const std::size_t k = classes.size();
  const auto squares = oracle::square_table(power(p, depth));
  std::vector<signed char> table(k * k);
  const long kk = static_cast<long>(k * k);
  auto fill = [&](long idx) {
    const auto& a = classes[static_cast<std::size_t>(idx) / k];
    const auto& b = classes[static_cast<std::size_t>(idx) % k];
    table[static_cast<std::size_t>(idx)] =
        oracle::conic_search({a.e, a.unit, b.e, b.unit}, p, depth, squares) ? 1 : -1;
  };
  if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(dynamic, 64)
    for (long idx = 0; idx < kk; ++idx) fill(idx);
  } else {
    for (long idx = 0; idx < kk; ++idx) fill(idx);
  }

  auto row = [&](std::size_t i, SweepResult& r) {
    for (std::size_t j = 0; j < n; ++j) {
      ++r.checked;
      int f = hilbert_symbol(values[i], values[j], v);
      int o = table[static_cast<std::size_t>(id[i]) * k + static_cast<std::size_t>(id[j])];
      if (f != o)
        note(r, "(" + values[i].to_string() + "," + values[j].to_string() + ")_" + v.to_string() + " formula " +
                    std::to_string(f) + " oracle " + std::to_string(o));
    }
  };
  if (exec == Exec::Parallel) {
    std::vector<SweepResult> rows(n);
    const long nn = static_cast<long>(n);
#pragma omp parallel for schedule(dynamic, 16)
    for (long i = 0; i < nn; ++i) row(static_cast<std::size_t>(i), rows[static_cast<std::size_t>(i)]);
    for (auto& r : rows) merge(res, std::move(r));
  } else {
    for (std::size_t i = 0; i < n; ++i) row(i, res);
  }
  return res;
}

std::string form_string(const DiagQuadForm& q) { return q.to_string(); }

bool vanishes(const DiagQuadForm& q, const std::vector<Integer>& x) {
  Rational s = 0;
  for (std::size_t i = 0; i < q.rank(); ++i) s += q.coefficients()[i] * Rational(Integer(x[i] * x[i]));
  bool nonzero = std::any_of(x.begin(), x.end(), [](const Integer& c) { return c != 0; });
  return nonzero && s.is_zero();
}

void check_form(const DiagQuadForm& q, long bound, SweepResult& r) {
  ++r.checked;
  bool criterion = is_isotropic_global(q).isotropic;
  auto w = isotropy_oracle(q, bound);
  if (w && !vanishes(q, *w)) {
    note(r, form_string(q) + ": oracle vector does not vanish");
    return;
  }
  if (criterion != w.has_value())
    note(r, form_string(q) + ": criterion " + (criterion ? "isotropic" : "anisotropic") + ", oracle " +
                (w ? "found a zero" : "none within bound"));
}

}  // namespace

std::vector<Rational> small_rationals(long bound) {
  std::vector<Rational> out;
  for (long n = -bound; n <= bound; ++n) {
    if (n == 0) continue;
    for (long d = 1; d <= bound; ++d)
      if (std::gcd(n, d) == 1) out.emplace_back(Integer(n), Integer(d));
  }
  std::sort(out.begin(), out.end());
  return out;
}

int sweep_oracle_depth(unsigned long p) { return p == 2 ? kOracleDepth2 : oracle_min_depth(p); }

SweepResult hilbert_oracle_sweep(std::span<const Rational> values, std::span<const Place> places, Exec exec) {
  SweepResult res;
  for (const Place& v : places) merge(res, hilbert_place_sweep(values, v, exec));
  return res;
}

std::vector<DiagQuadForm> diagonal_forms(std::span<const long> coefficients, std::span<const std::size_t> ranks) {
  std::vector<DiagQuadForm> out;
  for (std::size_t r : ranks) {
    std::vector<std::size_t> idx(r, 0);
    while (true) {
      std::vector<Rational> c;
      for (auto i : idx) c.emplace_back(coefficients[i]);
      out.emplace_back(std::move(c), 0);
      std::size_t pos = 0;
      while (pos < r && ++idx[pos] == coefficients.size()) idx[pos++] = 0;
      if (pos == r) break;
    }
  }
  return out;
}

SweepResult isotropy_oracle_sweep(std::span<const DiagQuadForm> forms, long bound, Exec exec) {
  SweepResult res;
  if (exec == Exec::Parallel) {
    std::vector<SweepResult> parts(forms.size());
    const long n = static_cast<long>(forms.size());
#pragma omp parallel for schedule(dynamic, 8)
    for (long i = 0; i < n; ++i)
      check_form(forms[static_cast<std::size_t>(i)], bound, parts[static_cast<std::size_t>(i)]);
    for (auto& p : parts) merge(res, std::move(p));
  } else {
    for (const auto& q : forms) check_form(q, bound, res);
  }
  return res;
}

GramSweepResult gram_determinant_sweep(long bound, Exec exec) {
  std::vector<long> diag, off;
  for (long c = -bound; c <= bound; ++c) {
    off.push_back(c);
    if (c != 0) diag.push_back(c);
  }
  const long nd = static_cast<long>(diag.size());
  std::vector<GramSweepResult> parts(static_cast<std::size_t>(nd));
  auto slab = [&](long ia) {
    GramSweepResult& r = parts[static_cast<std::size_t>(ia)];
    const long a = diag[static_cast<std::size_t>(ia)];
    for (long b : diag)
      for (long c : diag)
        for (long d : off)
          for (long e : off)
            for (long g : off) {
              ++r.enumerated;
              if (d * d != a * b || e * e != a * c || g * g != b * c) continue;
              TernaryForm f{Rational(a), Rational(b), Rational(c), Rational(d), Rational(e), Rational(g)};
              if (!check_f_conditions(f).passes) continue;
              ++r.passing;
              Rational det = f.determinant();
              Rational expected = Rational(-4) * Rational(a) * Rational(b) * Rational(c);
              if (det != expected || det.sign() >= 0) {
                ++r.exceptions;
                if (r.examples.size() < kMaxExamples)
                  r.examples.push_back(f.polynomial().to_string() + ": det " + det.to_string());
              }
            }
  };
  if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(dynamic, 1)
    for (long ia = 0; ia < nd; ++ia) slab(ia);
  } else {
    for (long ia = 0; ia < nd; ++ia) slab(ia);
  }
  GramSweepResult out;
  for (auto& p : parts) {
    out.enumerated += p.enumerated;
    out.passing += p.passing;
    out.exceptions += p.exceptions;
    for (auto& e : p.examples)
      if (out.examples.size() < kMaxExamples) out.examples.push_back(std::move(e));
  }
  return out;
}

}  // namespace bmo
