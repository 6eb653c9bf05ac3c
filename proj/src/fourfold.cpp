#include "bmo/fourfold.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>

namespace bmo {

namespace {

template <std::size_t N>
void make_primitive(std::array<Integer, N>& c) {
  Integer g = 0;
  for (const auto& v : c) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
  if (g == 0) throw DomainError("all coordinates are zero");
  for (auto& v : c) v /= g;
  for (const auto& v : c) {
    if (v == 0) continue;
    if (v < 0)
      for (auto& w : c) w = -w;
    break;
  }
}

template <std::size_t N>
bool is_canonical(const std::array<long, N>& c) {
  long g = 0;
  for (long v : c) g = std::gcd(g, v);
  if (g != 1) return false;
  for (long v : c)
    if (v != 0) return v > 0;
  return false;
}

std::vector<FiberVector> enumerate_fiber_vectors(long height) {
  std::vector<FiberVector> out;
  std::array<long, 4> t{};
  for (t[0] = -height; t[0] <= height; ++t[0])
    for (t[1] = -height; t[1] <= height; ++t[1])
      for (t[2] = -height; t[2] <= height; ++t[2])
        for (t[3] = -height; t[3] <= height; ++t[3])
          if (is_canonical(t)) out.push_back({Integer(t[0]), Integer(t[1]), Integer(t[2]), Integer(t[3])});
  return out;
}

void search_fiber(const Fourfold& x, const BasePoint& base, const std::vector<FiberVector>& ts,
                  std::vector<SearchHit>& out) {
  if (!is_isotropic_global(x.fiber_form(base)).isotropic) return;
  for (const auto& t : ts) {
    if (!x.contains(base, t)) continue;
    FourfoldPoint p = x.point(base, t);
    bool smooth = x.is_smooth_point(p);
    out.push_back({std::move(p), !base.on_boundary(), smooth});
  }
}

void sort_hits(std::vector<SearchHit>& hits) {
  std::sort(hits.begin(), hits.end(), [](const SearchHit& a, const SearchHit& b) { return a.point < b.point; });
  hits.erase(std::unique(hits.begin(), hits.end()), hits.end());
}

}  // namespace

BasePoint::BasePoint(const Integer& x, const Integer& y, const Integer& z) : c_{x, y, z} { make_primitive(c_); }

BasePoint BasePoint::from_rationals(const Rational& x, const Rational& y, const Rational& z) {
  Integer l = 1;
  for (const Rational* r : {&x, &y, &z}) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), r->denominator().get_mpz_t());
  auto scale = [&](const Rational& r) { return Integer(r.numerator() * (l / r.denominator())); };
  return BasePoint(scale(x), scale(y), scale(z));
}

std::string BasePoint::to_string() const {
  return "(" + c_[0].get_str() + ":" + c_[1].get_str() + ":" + c_[2].get_str() + ")";
}

FiberVector canonical_fiber_vector(const std::array<Integer, 4>& t) {
  FiberVector v = t;
  make_primitive(v);
  return v;
}

std::string FourfoldPoint::to_string() const {
  std::ostringstream os;
  os << "(" << base_.x() << ":" << base_.y() << ":" << base_.z() << "; " << t_[0] << ":" << t_[1] << ":" << t_[2]
     << ":" << t_[3] << ")";
  return os.str();
}

Fourfold::Fourfold(TernaryForm f) : f_(std::move(f)), report_(check_f_conditions(f_)) {}

void Fourfold::require_conditions() const {
  if (!report_.passes) throw PreconditionError("f-conditions", "F does not satisfy the axis-square conditions");
}

std::array<Rational, 4> Fourfold::fiber_coefficients(const BasePoint& b) const {
  Rational x(b.x()), y(b.y()), z(b.z());
  return {x * y, x * z, y * z, f_(x, y, z)};
}

bool Fourfold::contains(const BasePoint& base, const std::array<Integer, 4>& t) const {
  if (t[0] == 0 && t[1] == 0 && t[2] == 0 && t[3] == 0) throw DomainError("fiber vector is zero");
  auto a = fiber_coefficients(base);
  Rational s = 0;
  for (int i = 0; i < 4; ++i) s += a[i] * Rational(Integer(t[i] * t[i]));
  return s.is_zero();
}

FourfoldPoint Fourfold::point(const BasePoint& base, const std::array<Integer, 4>& t) const {
  if (!contains(base, t)) throw DomainError("point is not on the fourfold");
  return FourfoldPoint(base, canonical_fiber_vector(t));
}

DiagQuadForm Fourfold::fiber_form(const BasePoint& base) const {
  auto a = fiber_coefficients(base);
  return DiagQuadForm(std::vector<Rational>(a.begin(), a.end()));
}

std::array<Rational, 7> Fourfold::gradient(const FourfoldPoint& p) const {
  Rational x(p.base().x()), y(p.base().y()), z(p.base().z());
  std::array<Rational, 4> t;
  std::array<Rational, 4> t2;
  for (int i = 0; i < 4; ++i) {
    t[i] = Rational(p.t()[i]);
    t2[i] = t[i] * t[i];
  }
  const Rational two(2);
  return {y * t2[0] + z * t2[1] + f_.partial(Var::X, x, y, z) * t2[3],
          x * t2[0] + z * t2[2] + f_.partial(Var::Y, x, y, z) * t2[3],
          x * t2[1] + y * t2[2] + f_.partial(Var::Z, x, y, z) * t2[3],
          two * x * y * t[0],
          two * x * z * t[1],
          two * y * z * t[2],
          two * f_(x, y, z) * t[3]};
}

bool Fourfold::is_smooth_point(const FourfoldPoint& p) const {
  // Euler's relations make the equation itself redundant in the Jacobian;
  // the hypersurface is singular exactly where every partial vanishes.
  for (const auto& g : gradient(p))
    if (!g.is_zero()) return true;
  return false;
}

std::vector<BasePoint> enumerate_bases(long height) {
  std::vector<BasePoint> out;
  std::array<long, 3> c{};
  for (c[0] = -height; c[0] <= height; ++c[0])
    for (c[1] = -height; c[1] <= height; ++c[1])
      for (c[2] = -height; c[2] <= height; ++c[2])
        if (is_canonical(c)) out.emplace_back(Integer(c[0]), Integer(c[1]), Integer(c[2]));
  return out;
}

std::vector<SearchHit> search_rational_points(const Fourfold& x, long base_height, long fiber_height) {
  if (base_height < 1 || fiber_height < 1) throw DomainError("search heights must be at least 1");
  const auto bases = enumerate_bases(base_height);
  const auto ts = enumerate_fiber_vectors(fiber_height);
  std::vector<std::vector<SearchHit>> per_base(bases.size());
  const long n = static_cast<long>(bases.size());
#pragma omp parallel for schedule(dynamic, 4)
  for (long i = 0; i < n; ++i) search_fiber(x, bases[static_cast<std::size_t>(i)], ts, per_base[static_cast<std::size_t>(i)]);
  std::vector<SearchHit> hits;
  for (auto& v : per_base)
    for (auto& h : v) hits.push_back(std::move(h));
  sort_hits(hits);
  return hits;
}

std::vector<SearchHit> search_rational_points_serial(const Fourfold& x, long base_height, long fiber_height) {
  if (base_height < 1 || fiber_height < 1) throw DomainError("search heights must be at least 1");
  std::vector<SearchHit> hits;
  const long h = base_height, k = fiber_height;
  for (long a = -h; a <= h; ++a)
    for (long b = -h; b <= h; ++b)
      for (long c = -h; c <= h; ++c) {
        if (!is_canonical(std::array<long, 3>{a, b, c})) continue;
        BasePoint base{Integer(a), Integer(b), Integer(c)};
        if (!is_isotropic_global(x.fiber_form(base)).isotropic) continue;
        for (long t1 = -k; t1 <= k; ++t1)
          for (long t2 = -k; t2 <= k; ++t2)
            for (long t3 = -k; t3 <= k; ++t3)
              for (long t4 = -k; t4 <= k; ++t4) {
                if (!is_canonical(std::array<long, 4>{t1, t2, t3, t4})) continue;
                std::array<Integer, 4> t{Integer(t1), Integer(t2), Integer(t3), Integer(t4)};
                if (!x.contains(base, t)) continue;
                FourfoldPoint p = x.point(base, t);
                bool smooth = x.is_smooth_point(p);
                hits.push_back({std::move(p), !base.on_boundary(), smooth});
              }
      }
  sort_hits(hits);
  return hits;
}

std::string to_string(RealComponent c) { return c == RealComponent::SameSign ? "SameSign" : "Mixed"; }

RealComponent real_component(const std::array<Rational, 3>& b) {
  for (const auto& c : b)
    if (c.is_zero()) throw DomainError("on boundary: a coordinate vanishes");
  return (b[0].sign() == b[1].sign() && b[1].sign() == b[2].sign()) ? RealComponent::SameSign
                                                                    : RealComponent::Mixed;
}

RealComponent real_component(const BasePoint& b) {
  return real_component(std::array<Rational, 3>{Rational(b.x()), Rational(b.y()), Rational(b.z())});
}

LocalSample sample_local_bases(const Fourfold& x, const Place& v, std::size_t count, int depth,
                               std::uint64_t seed) {
  if (!v.is_finite()) throw DomainError("local sampling needs a finite place");
  if (depth < 3) throw DomainError("sampling depth must be at least 3");
  const unsigned long p = v.prime();
  Integer modulus;
  mpz_ui_pow_ui(modulus.get_mpz_t(), p, static_cast<unsigned long>(depth));
  if (!modulus.fits_ulong_p()) throw DomainError("p^depth exceeds 64 bits");
  const unsigned long m = modulus.get_ui();

  LocalSample out;
  out.place = v;
  out.depth = depth;
  out.seed = seed;
  if (count == 0) return out;

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<unsigned long> dist(1, m);
  const std::size_t max_attempts = 200 * count + 1000;
  while (out.bases.size() < count && out.attempts < max_attempts) {
    const std::size_t batch = std::min<std::size_t>(std::max<std::size_t>(64, 2 * (count - out.bases.size())),
                                                    max_attempts - out.attempts);
    std::vector<std::array<unsigned long, 3>> cand(batch);
    for (auto& c : cand) c = {dist(rng), dist(rng), dist(rng)};
    std::vector<char> keep(batch, 0);
    const long nb = static_cast<long>(batch);
#pragma omp parallel for schedule(static)
    for (long i = 0; i < nb; ++i) {
      const auto& c = cand[static_cast<std::size_t>(i)];
      if (c[0] % p == 0 && c[1] % p == 0 && c[2] % p == 0) continue;
      BasePoint b{Integer(c[0]), Integer(c[1]), Integer(c[2])};
      keep[static_cast<std::size_t>(i)] = is_isotropic_local(x.fiber_form(b), v) ? 1 : 0;
    }
    for (std::size_t i = 0; i < batch && out.bases.size() < count; ++i) {
      ++out.attempts;
      if (keep[i]) out.bases.emplace_back(Integer(cand[i][0]), Integer(cand[i][1]), Integer(cand[i][2]));
    }
  }
  if (out.bases.size() < count) {
    out.exhausted = true;
    out.warning = "sampling exhausted after " + std::to_string(out.attempts) + " attempts: " +
                  std::to_string(out.bases.size()) + " of " + std::to_string(count) + " bases";
  }
  return out;
}

}  // namespace bmo
