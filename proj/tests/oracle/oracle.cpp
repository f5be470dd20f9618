#include "oracle.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace srd::oracle {

namespace {

// Polynomials low to high over GF(p), trailing zeros trimmed.
using Poly = std::vector<unsigned>;

Poly trim(Poly a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

Poly poly_mul(const Poly& a, const Poly& b, unsigned p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  return trim(r);
}

// Remainder modulo a monic polynomial.
Poly poly_mod(Poly a, const Poly& m, unsigned p) {
  a = trim(a);
  const std::size_t dm = m.size() - 1;
  while (a.size() > dm) {
    const unsigned lead = a.back();
    const std::size_t shift = a.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i) a[shift + i] = (a[shift + i] + p * p - lead * m[i] % p) % p;
    a = trim(a);
  }
  return a;
}

}  // namespace

Field::Field(unsigned p, unsigned h, std::vector<unsigned> modulus) : p_(p), h_(h), q_(1), mod_(std::move(modulus)) {
  for (unsigned i = 0; i < h; ++i) q_ *= p;
  add_.resize(q_ * q_);
  mul_.resize(q_ * q_);
  for (Elem a = 0; a < q_; ++a)
    for (Elem b = 0; b < q_; ++b) {
      add_[a * q_ + b] = add_slow(a, b);
      mul_[a * q_ + b] = mul_slow(a, b);
    }
  for (Elem a = 0; a < q_; ++a) squares_.insert(mul(a, a));
}

std::vector<unsigned> Field::digits(Elem a) const {
  std::vector<unsigned> d(h_, 0);
  for (unsigned i = 0; i < h_; ++i) {
    d[i] = a % p_;
    a /= p_;
  }
  return d;
}

Elem Field::pack(const std::vector<unsigned>& d) const {
  Elem a = 0;
  for (std::size_t i = d.size(); i-- > 0;) a = a * p_ + d[i];
  return a;
}

Elem Field::add_slow(Elem a, Elem b) const {
  auto x = digits(a), y = digits(b);
  for (unsigned i = 0; i < h_; ++i) x[i] = (x[i] + y[i]) % p_;
  return pack(x);
}

Elem Field::neg(Elem a) const {
  auto x = digits(a);
  for (auto& c : x) c = (p_ - c) % p_;
  return pack(x);
}

Elem Field::mul_slow(Elem a, Elem b) const {
  Poly r = poly_mod(poly_mul(trim(digits(a)), trim(digits(b)), p_), mod_, p_);
  r.resize(h_, 0);
  return pack(r);
}

Elem Field::pow(Elem a, unsigned e) const {
  Elem r = 1;
  for (unsigned i = 0; i < e; ++i) r = mul(r, a);
  return r;
}

Elem Field::inv(Elem a) const {
  for (Elem b = 1; b < q_; ++b)
    if (mul(a, b) == 1) return b;
  throw std::domain_error("oracle: no inverse");
}

Elem Field::trace2(Elem a) const {
  Elem t = 0, x = a;
  for (unsigned i = 0; i < h_; ++i) {
    t = add(t, x);
    x = mul(x, x);
  }
  return t;
}

std::vector<std::vector<unsigned>> irreducibles(unsigned p, unsigned h) {
  auto monic = [p](unsigned deg) {
    std::vector<Poly> out;
    unsigned n = 1;
    for (unsigned i = 0; i < deg; ++i) n *= p;
    for (unsigned code = 0; code < n; ++code) {
      Poly a(deg + 1, 0);
      unsigned c = code;
      for (unsigned i = 0; i < deg; ++i) {
        a[i] = c % p;
        c /= p;
      }
      a[deg] = 1;
      out.push_back(a);
    }
    return out;
  };
  std::set<Poly> reducible;
  for (unsigned d = 1; d < h; ++d)
    for (const Poly& a : monic(d))
      for (const Poly& b : monic(h - d)) reducible.insert(poly_mul(a, b, p));
  std::vector<Poly> out;
  for (const Poly& a : monic(h))
    if (!reducible.count(a)) out.push_back(a);
  return out;
}

V6 normalize(const Field& f, V6 v, int coords) {
  for (int i = 0; i < coords; ++i)
    if (v[i] != 0) {
      const Elem s = f.inv(v[i]);
      for (int j = 0; j < coords; ++j) v[j] = f.mul(v[j], s);
      return v;
    }
  return v;
}

std::uint32_t pack(const Field& f, const V6& v, int coords) {
  std::uint32_t c = 0;
  for (int i = 0; i < coords; ++i) c = c * f.q() + v[i];
  return c;
}

std::vector<V6> points(const Field& f, int coords) {
  std::vector<V6> out;
  std::uint64_t total = 1;
  for (int i = 0; i < coords; ++i) total *= f.q();
  for (std::uint64_t code = 1; code < total; ++code) {
    V6 v{};
    std::uint64_t c = code;
    for (int i = coords - 1; i >= 0; --i) {
      v[i] = static_cast<Elem>(c % f.q());
      c /= f.q();
    }
    int lead = 0;
    while (v[lead] == 0) ++lead;
    if (v[lead] == 1) out.push_back(v);
  }
  return out;
}

M3 to_m3(const V6& y) { return {{{y[0], y[1], y[2]}, {y[1], y[3], y[4]}, {y[2], y[4], y[5]}}}; }

int rank(const Field& f, const M3& m) {
  std::uint64_t kernel = 0;
  for (Elem a = 0; a < f.q(); ++a)
    for (Elem b = 0; b < f.q(); ++b)
      for (Elem c = 0; c < f.q(); ++c) {
        bool zero = true;
        for (int i = 0; i < 3 && zero; ++i)
          zero = f.add(f.add(f.mul(m[i][0], a), f.mul(m[i][1], b)), f.mul(m[i][2], c)) == 0;
        kernel += zero;
      }
  int dim = 0;
  for (std::uint64_t k = kernel; k > 1; k /= f.q()) ++dim;
  return 3 - dim;
}

namespace {

// Calls fn on every linear combination of the rows (zero included).
void for_combinations(const Field& f, const std::vector<V6>& rows, int coords, const std::function<void(const V6&)>& fn) {
  const std::size_t k = rows.size();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < k; ++i) total *= f.q();
  for (std::uint64_t code = 0; code < total; ++code) {
    V6 v{};
    std::uint64_t c = code;
    for (std::size_t i = 0; i < k; ++i) {
      const Elem s = static_cast<Elem>(c % f.q());
      c /= f.q();
      if (s == 0) continue;
      for (int j = 0; j < coords; ++j) v[j] = f.add(v[j], f.mul(s, rows[i][j]));
    }
    fn(v);
  }
}

bool nonzero(const V6& v) {
  return std::any_of(v.begin(), v.end(), [](Elem e) { return e != 0; });
}

}  // namespace

std::vector<std::uint32_t> span_points(const Field& f, const std::vector<V6>& rows, int coords) {
  std::set<std::uint32_t> s;
  for_combinations(f, rows, coords, [&](const V6& v) {
    if (nonzero(v)) s.insert(pack(f, normalize(f, v, coords), coords));
  });
  return {s.begin(), s.end()};
}

int rank_rows(const Field& f, const std::vector<V6>& rows, int coords) {
  const std::uint64_t n = span_points(f, rows, coords).size() * (f.q() - 1) + 1;
  int r = 0;
  for (std::uint64_t k = n; k > 1; k /= f.q()) ++r;
  return r;
}

std::uint64_t count_subspaces(const Field& f, int coords, int k) {
  const auto pts = points(f, coords);
  std::set<std::vector<std::uint32_t>> seen;
  std::vector<V6> rows(static_cast<std::size_t>(k));
  std::uint64_t want = 1, qk = 1;
  for (int i = 0; i < k; ++i) qk *= f.q();
  want = (qk - 1) / (f.q() - 1);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t depth, std::size_t from) {
    if (depth == rows.size()) {
      auto s = span_points(f, rows, coords);
      if (s.size() == want) seen.insert(std::move(s));
      return;
    }
    for (std::size_t i = from; i < pts.size(); ++i) {
      rows[depth] = pts[i];
      rec(depth + 1, i + 1);
    }
  };
  rec(0, 0);
  return seen.size();
}

std::array<std::uint64_t, 3> rank_distribution(const Field& f, const std::vector<V6>& rows) {
  std::array<std::uint64_t, 3> d{};
  std::set<std::uint32_t> seen;
  for_combinations(f, rows, 6, [&](const V6& v) {
    if (!nonzero(v)) return;
    const V6 n = normalize(f, v, 6);
    if (!seen.insert(pack(f, n, 6)).second) return;
    ++d[static_cast<std::size_t>(rank(f, to_m3(n)) - 1)];
  });
  return d;
}

std::array<std::uint64_t, 4> codeword_ranks(const Field& f, const std::vector<V6>& rows) {
  std::array<std::uint64_t, 4> d{};
  for_combinations(f, rows, 6, [&](const V6& v) { ++d[static_cast<std::size_t>(rank(f, to_m3(v)))]; });
  return d;
}

namespace {

V6 nu(const Field& f, const V3& u) {
  return {f.mul(u[0], u[0]), f.mul(u[0], u[1]), f.mul(u[0], u[2]),
          f.mul(u[1], u[1]), f.mul(u[1], u[2]), f.mul(u[2], u[2])};
}

std::vector<V3> plane_points(const Field& f) {
  std::vector<V3> out;
  for (const V6& v : points(f, 3)) out.push_back({v[0], v[1], v[2]});
  return out;
}

}  // namespace

int secant_count(const Field& f, const V6& y) {
  int n = 0;
  const auto pts = plane_points(f);
  const std::uint32_t target = pack(f, normalize(f, y, 6), 6);
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      const V6 a = nu(f, pts[i]), b = nu(f, pts[j]);
      for (Elem t = 1; t < f.q(); ++t) {
        V6 s{};
        for (int k = 0; k < 6; ++k) s[k] = f.add(a[k], f.mul(t, b[k]));
        if (nonzero(s) && pack(f, normalize(f, s, 6), 6) == target) ++n;
      }
    }
  return n;
}

int point_slot(const Field& f, const V6& y) {
  const int r = rank(f, to_m3(y));
  if (r == 1) return 0;
  if (r == 3) return 3;
  const int s = secant_count(f, y);
  // OD0 slots: q even [P1, P2n, P2s, P3]; q odd [P1, P2e, P2i, P3].
  if (f.even()) return s == 0 ? 1 : 2;
  if (2 * s == static_cast<int>(f.q()) - 1) return 1;
  if (2 * s == static_cast<int>(f.q()) + 1) return 2;
  throw std::logic_error("oracle: unexpected secant count");
}

HyperplaneOracle::HyperplaneOracle(const Field& f) : f_(f) {
  const auto pts = plane_points(f);
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i; j < pts.size(); ++j) {
      const V3 &l = pts[i], &m = pts[j];
      // (l.x)(m.x) in the y0..y5 monomial order x0^2, x0x1, x0x2, x1^2, x1x2, x2^2.
      V6 c{f.mul(l[0], m[0]),
           f.add(f.mul(l[0], m[1]), f.mul(l[1], m[0])),
           f.add(f.mul(l[0], m[2]), f.mul(l[2], m[0])),
           f.mul(l[1], m[1]),
           f.add(f.mul(l[1], m[2]), f.mul(l[2], m[1])),
           f.mul(l[2], m[2])};
      products_[pack(f, normalize(f, c, 6), 6)] = i == j ? 0 : 1;
    }
}

int HyperplaneOracle::slot(const V6& h) const {
  const auto it = products_.find(pack(f_, normalize(f_, h, 6), 6));
  if (it != products_.end()) return it->second;
  int zeros = 0;
  for (const V3& u : plane_points(f_)) {
    const V6 y = nu(f_, u);
    Elem s = 0;
    for (int k = 0; k < 6; ++k) s = f_.add(s, f_.mul(h[k], y[k]));
    zeros += s == 0;
  }
  return zeros == 1 ? 2 : 3;
}

std::array<std::int64_t, 4> od0(const Field& f, const std::vector<V6>& rows) {
  std::array<std::int64_t, 4> d{};
  std::set<std::uint32_t> seen;
  for_combinations(f, rows, 6, [&](const V6& v) {
    if (!nonzero(v)) return;
    const V6 n = normalize(f, v, 6);
    if (seen.insert(pack(f, n, 6)).second) ++d[static_cast<std::size_t>(point_slot(f, n))];
  });
  return d;
}

std::array<std::int64_t, 4> od4(const Field& f, const HyperplaneOracle& h, const std::vector<V6>& rows) {
  std::array<std::int64_t, 4> d{};
  for (const V6& dual : points(f, 6)) {
    bool incident = true;
    for (const V6& r : rows) {
      Elem s = 0;
      for (int k = 0; k < 6; ++k) s = f.add(s, f.mul(dual[k], r[k]));
      incident = incident && s == 0;
    }
    if (incident) ++d[static_cast<std::size_t>(h.slot(dual))];
  }
  return d;
}

bool complete(const Field& f, const std::vector<V6>& rows, int d) {
  const auto inside = span_points(f, rows, 6);
  for (const V6& p : points(f, 6)) {
    if (std::binary_search(inside.begin(), inside.end(), pack(f, p, 6))) continue;
    auto ext = rows;
    ext.push_back(p);
    const auto dist = rank_distribution(f, ext);
    int lowest = 3;
    for (int r = 2; r >= 0; --r)
      if (dist[static_cast<std::size_t>(r)]) lowest = r + 1;
    if (lowest >= d) return false;
  }
  return true;
}

std::vector<std::uint32_t> polar_points(const Field& f, const std::vector<V6>& rows) {
  std::vector<std::uint32_t> out;
  for (const V6& b : points(f, 6)) {
    bool orth = true;
    for (const V6& a : rows) {
      const M3 ma = to_m3(a), mb = to_m3(b);
      Elem t = 0;
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) t = f.add(t, f.mul(ma[i][j], mb[j][i]));
      orth = orth && t == 0;
    }
    if (orth) out.push_back(pack(f, b, 6));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<M3> invertible(const Field& f) {
  std::vector<M3> out;
  const std::uint64_t q = f.q();
  std::uint64_t total = 1;
  for (int i = 0; i < 9; ++i) total *= q;
  for (std::uint64_t code = 0; code < total; ++code) {
    M3 a{};
    std::uint64_t c = code;
    for (int i = 0; i < 9; ++i) {
      a[static_cast<std::size_t>(i / 3)][static_cast<std::size_t>(i % 3)] = static_cast<Elem>(c % q);
      c /= q;
    }
    if (rank(f, a) == 3) out.push_back(a);
  }
  return out;
}

V6 act(const Field& f, const M3& a, const V6& y) {
  const M3 m = to_m3(y);
  M3 am{}, r{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) am[i][j] = f.add(am[i][j], f.mul(a[i][k], m[k][j]));
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) r[i][j] = f.add(r[i][j], f.mul(am[i][k], a[j][k]));
  return {r[0][0], r[0][1], r[0][2], r[1][1], r[1][2], r[2][2]};
}

std::set<std::vector<std::uint32_t>> orbit(const Field& f, const std::vector<V6>& rows) {
  std::set<std::vector<std::uint32_t>> out;
  for (const M3& a : invertible(f)) {
    std::vector<V6> img;
    for (const V6& r : rows) img.push_back(act(f, a, r));
    out.insert(span_points(f, img, 6));
  }
  return out;
}

}  // namespace srd::oracle
