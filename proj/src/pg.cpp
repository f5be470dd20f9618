#include "srd/pg.hpp"

#include <algorithm>
#include <string>

namespace srd::pg {

BudgetExceeded::BudgetExceeded(std::uint64_t needed, std::uint64_t budget)
    : std::runtime_error("enumeration needs " + std::to_string(needed) + " items, budget is " +
                         std::to_string(budget)),
      needed_(needed) {}

Matrix::Matrix(int rows, int cols, std::vector<elem_t> data) : rows_(rows), cols_(cols), data_(std::move(data)) {
  if (data_.size() != static_cast<std::size_t>(rows) * cols) throw std::invalid_argument("matrix data size mismatch");
}

std::vector<int> rref(const Field& f, Matrix& m) {
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
    int sel = -1;
    for (int i = r; i < m.rows(); ++i)
      if (m(i, c) != 0) {
        sel = i;
        break;
      }
    if (sel < 0) continue;
    if (sel != r)
      for (int j = 0; j < m.cols(); ++j) std::swap(m(sel, j), m(r, j));
    const elem_t inv = f.inv(m(r, c));
    for (int j = 0; j < m.cols(); ++j) m(r, j) = f.mul(m(r, j), inv);
    for (int i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c) == 0) continue;
      const elem_t factor = f.neg(m(i, c));
      for (int j = 0; j < m.cols(); ++j) m(i, j) = f.add(m(i, j), f.mul(factor, m(r, j)));
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

int matrix_rank(const Field& f, Matrix m) { return static_cast<int>(rref(f, m).size()); }

elem_t dot(const Field& f, const Vec& a, const Vec& b, int coords) {
  elem_t s = 0;
  for (int i = 0; i < coords; ++i) s = f.add(s, f.mul(a[static_cast<std::size_t>(i)], b[static_cast<std::size_t>(i)]));
  return s;
}

bool is_zero(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](elem_t x) { return x == 0; });
}

Vec normalized(const Field& f, const Vec& v) {
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    if (v[i] == 1) return v;
    const elem_t inv = f.inv(v[i]);
    Vec r{};
    for (std::size_t j = 0; j < v.size(); ++j) r[j] = f.mul(v[j], inv);
    return r;
  }
  throw std::invalid_argument("zero vector has no projective point");
}

ProjPoint make_point(const Field& f, int n, const Vec& v) {
  for (int i = n + 1; i < kMaxCoords; ++i)
    if (v[static_cast<std::size_t>(i)] != 0) throw std::invalid_argument("coordinate beyond ambient dimension");
  return ProjPoint{n, normalized(f, v)};
}

namespace {

// In-place RREF of `count` vectors over the first `coords` coordinates.
int rref_rows(const Field& f, Vec* rows, int count, int coords) {
  int r = 0;
  for (int c = 0; c < coords && r < count; ++c) {
    int sel = -1;
    for (int i = r; i < count; ++i)
      if (rows[i][static_cast<std::size_t>(c)] != 0) {
        sel = i;
        break;
      }
    if (sel < 0) continue;
    std::swap(rows[sel], rows[r]);
    Vec& pr = rows[r];
    const elem_t lead = pr[static_cast<std::size_t>(c)];
    if (lead != 1) {
      const elem_t inv = f.inv(lead);
      for (int j = c; j < coords; ++j) pr[static_cast<std::size_t>(j)] = f.mul(pr[static_cast<std::size_t>(j)], inv);
    }
    for (int i = 0; i < count; ++i) {
      if (i == r) continue;
      const elem_t x = rows[i][static_cast<std::size_t>(c)];
      if (x == 0) continue;
      const elem_t factor = f.neg(x);
      for (int j = c; j < coords; ++j)
        rows[i][static_cast<std::size_t>(j)] =
            f.add(rows[i][static_cast<std::size_t>(j)], f.mul(factor, pr[static_cast<std::size_t>(j)]));
    }
    ++r;
  }
  return r;
}

}  // namespace

int Subspace::pivot(int i) const {
  const Vec& r = rows_[static_cast<std::size_t>(i)];
  for (int c = 0; c <= n_; ++c)
    if (r[static_cast<std::size_t>(c)] != 0) return c;
  return -1;
}

std::size_t Subspace::hash() const {
  std::uint64_t h = 1469598103934665603ull ^ static_cast<std::uint64_t>(n_ * 16 + k_);
  for (int i = 0; i < k_; ++i)
    for (int c = 0; c <= n_; ++c) {
      h ^= rows_[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)];
      h *= 1099511628211ull;
    }
  return static_cast<std::size_t>(h ^ (h >> 29));
}

Subspace Subspace::from_rref_rows(int n, std::span<const Vec> rows) {
  Subspace s;
  s.n_ = n;
  s.k_ = static_cast<int>(rows.size());
  std::copy(rows.begin(), rows.end(), s.rows_.begin());
  return s;
}

std::optional<Subspace> try_canonicalize(const Field& f, int n, std::span<const Vec> generators) {
  if (n < 0 || n + 1 > kMaxCoords) throw std::invalid_argument("ambient dimension out of range");
  std::array<Vec, 16> local{};
  std::vector<Vec> heap;
  Vec* buf = local.data();
  if (generators.size() > local.size()) {
    heap.assign(generators.begin(), generators.end());
    buf = heap.data();
  } else {
    std::copy(generators.begin(), generators.end(), local.begin());
  }
  const int r = rref_rows(f, buf, static_cast<int>(generators.size()), n + 1);
  if (r == 0) return std::nullopt;
  return Subspace::from_rref_rows(n, std::span<const Vec>(buf, static_cast<std::size_t>(r)));
}

Subspace canonicalize(const Field& f, int n, std::span<const Vec> generators) {
  auto s = try_canonicalize(f, n, generators);
  if (!s) throw std::invalid_argument("all generators are zero");
  return *s;
}

Subspace join(const Field& f, const Subspace& w, const Vec& v) {
  std::array<Vec, kMaxCoords + 1> g{};
  std::copy(w.rows().begin(), w.rows().end(), g.begin());
  g[static_cast<std::size_t>(w.rank())] = v;
  return canonicalize(f, w.ambient_dim(), std::span<const Vec>(g.data(), static_cast<std::size_t>(w.rank() + 1)));
}

Subspace join(const Field& f, const Subspace& w, const Subspace& u) {
  std::array<Vec, 2 * kMaxCoords> g{};
  std::copy(w.rows().begin(), w.rows().end(), g.begin());
  std::copy(u.rows().begin(), u.rows().end(), g.begin() + w.rank());
  return canonicalize(f, w.ambient_dim(),
                      std::span<const Vec>(g.data(), static_cast<std::size_t>(w.rank() + u.rank())));
}

bool contains(const Field& f, const Subspace& w, const Vec& v) {
  if (is_zero(v)) return true;
  return join(f, w, v).rank() == w.rank();
}

bool contains(const Field& f, const Subspace& w, const Subspace& u) { return join(f, w, u).rank() == w.rank(); }

int intersection_rank(const Field& f, const Subspace& w, const Subspace& u) {
  return w.rank() + u.rank() - join(f, w, u).rank();
}

std::vector<Vec> null_space(const Field& f, const Subspace& w) {
  const int coords = w.coords();
  std::vector<int> pivots(static_cast<std::size_t>(w.rank()));
  std::vector<bool> is_pivot(static_cast<std::size_t>(coords), false);
  for (int i = 0; i < w.rank(); ++i) {
    pivots[static_cast<std::size_t>(i)] = w.pivot(i);
    is_pivot[static_cast<std::size_t>(w.pivot(i))] = true;
  }
  std::vector<Vec> out;
  for (int c = 0; c < coords; ++c) {
    if (is_pivot[static_cast<std::size_t>(c)]) continue;
    Vec x{};
    x[static_cast<std::size_t>(c)] = 1;
    for (int i = 0; i < w.rank(); ++i)
      x[static_cast<std::size_t>(pivots[static_cast<std::size_t>(i)])] =
          f.neg(w.row(i)[static_cast<std::size_t>(c)]);
    out.push_back(x);
  }
  return out;
}

std::optional<Subspace> annihilator(const Field& f, const Subspace& w) {
  const auto basis = null_space(f, w);
  if (basis.empty()) return std::nullopt;
  return canonicalize(f, w.ambient_dim(), basis);
}

namespace {

// Enumerates normalized coefficient vectors in lexicographic order and hands
// the combined vector to fn.
template <class Fn>
void enumerate_combinations(const Field& f, const Subspace& w, Fn&& fn) {
  const int k = w.rank();
  const unsigned q = f.q();
  // scaled[j][lambda] = lambda * row j
  std::vector<Vec> scaled(static_cast<std::size_t>(k) * q);
  for (int j = 0; j < k; ++j)
    for (unsigned l = 0; l < q; ++l) {
      Vec v{};
      for (int c = 0; c < w.coords(); ++c)
        v[static_cast<std::size_t>(c)] = f.mul(static_cast<elem_t>(l), w.row(j)[static_cast<std::size_t>(c)]);
      scaled[static_cast<std::size_t>(j) * q + l] = v;
    }
  const int coords = w.coords();
  std::array<unsigned, kMaxCoords> lam{};
  for (int lead = k - 1; lead >= 0; --lead) {
    const int m = k - 1 - lead;  // trailing free coefficients
    lam.fill(0);
    while (true) {
      Vec acc = w.row(lead);
      for (int t = 0; t < m; ++t) {
        const unsigned l = lam[static_cast<std::size_t>(t)];
        if (l == 0) continue;
        const Vec& s = scaled[static_cast<std::size_t>(lead + 1 + t) * q + l];
        for (int c = 0; c < coords; ++c)
          acc[static_cast<std::size_t>(c)] = f.add(acc[static_cast<std::size_t>(c)], s[static_cast<std::size_t>(c)]);
      }
      fn(acc);
      int t = m - 1;
      while (t >= 0) {
        if (++lam[static_cast<std::size_t>(t)] < q) break;
        lam[static_cast<std::size_t>(t)] = 0;
        --t;
      }
      if (t < 0) break;
    }
  }
}

}  // namespace

void for_each_point(const Field& f, const Subspace& w, const std::function<void(const Vec&)>& fn) {
  enumerate_combinations(f, w, fn);
}

std::vector<ProjPoint> subspace_points(const Field& f, const Subspace& w) {
  std::vector<ProjPoint> out;
  enumerate_combinations(f, w, [&](const Vec& v) { out.push_back(ProjPoint{w.ambient_dim(), v}); });
  return out;
}

std::uint64_t gaussian_binomial(unsigned n, unsigned k, std::uint64_t q) {
  if (k > n) return 0;
  unsigned __int128 result = 1;
  auto qpow = [q](unsigned e) {
    unsigned __int128 r = 1;
    for (unsigned i = 0; i < e; ++i) r *= q;
    return r;
  };
  for (unsigned i = 0; i < k; ++i) {
    result = result * (qpow(n - i) - 1) / (qpow(i + 1) - 1);
    if (result > static_cast<unsigned __int128>(UINT64_MAX)) throw std::overflow_error("gaussian binomial overflow");
  }
  return static_cast<std::uint64_t>(result);
}

SubspaceEnumerator::SubspaceEnumerator(FieldPtr field, int n, int projdim)
    : field_(std::move(field)), n_(n), k_(projdim + 1) {
  if (n < 0 || n + 1 > kMaxCoords) throw std::invalid_argument("ambient dimension out of range");
  if (k_ < 1 || k_ > n + 1) throw std::invalid_argument("subspace dimension out of range");
  const int coords = n + 1;
  std::vector<int> comb(static_cast<std::size_t>(k_));
  for (int i = 0; i < k_; ++i) comb[static_cast<std::size_t>(i)] = i;
  const std::uint64_t q = field_->q();
  while (true) {
    Pattern p;
    p.pivots = comb;
    for (int r = 0; r < k_; ++r)
      for (int c = comb[static_cast<std::size_t>(r)] + 1; c < coords; ++c)
        if (std::find(comb.begin(), comb.end(), c) == comb.end()) p.free.emplace_back(r, c);
    p.count = 1;
    for (std::size_t i = 0; i < p.free.size(); ++i) p.count *= q;
    p.offset = total_;
    total_ += p.count;
    patterns_.push_back(std::move(p));
    int i = k_ - 1;
    while (i >= 0 && comb[static_cast<std::size_t>(i)] == coords - k_ + i) --i;
    if (i < 0) break;
    ++comb[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k_; ++j) comb[static_cast<std::size_t>(j)] = comb[static_cast<std::size_t>(j - 1)] + 1;
  }
}

Subspace SubspaceEnumerator::at(std::uint64_t index) const {
  std::optional<Subspace> out;
  for_range(index, index + 1, [&](const Subspace& s) {
    out = s;
    return false;
  });
  if (!out) throw std::out_of_range("subspace index out of range");
  return *out;
}

void SubspaceEnumerator::for_range(std::uint64_t begin, std::uint64_t end,
                                   const std::function<bool(const Subspace&)>& fn) const {
  end = std::min(end, total_);
  if (begin >= end) return;
  const unsigned q = field_->q();
  auto pit = std::upper_bound(patterns_.begin(), patterns_.end(), begin,
                              [](std::uint64_t v, const Pattern& p) { return v < p.offset; });
  std::size_t pi = static_cast<std::size_t>(std::distance(patterns_.begin(), pit)) - 1;
  std::vector<unsigned> digit;
  auto load = [&](std::uint64_t local) {
    const auto& p = patterns_[pi];
    digit.assign(p.free.size(), 0);
    for (std::size_t i = p.free.size(); i-- > 0;) {
      digit[i] = static_cast<unsigned>(local % q);
      local /= q;
    }
  };
  load(begin - patterns_[pi].offset);
  std::array<Vec, kMaxCoords> rows{};
  for (std::uint64_t idx = begin; idx < end; ++idx) {
    const auto& p = patterns_[pi];
    for (int r = 0; r < k_; ++r) {
      rows[static_cast<std::size_t>(r)].fill(0);
      rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(p.pivots[static_cast<std::size_t>(r)])] = 1;
    }
    for (std::size_t i = 0; i < p.free.size(); ++i)
      rows[static_cast<std::size_t>(p.free[i].first)][static_cast<std::size_t>(p.free[i].second)] =
          static_cast<elem_t>(digit[i]);
    if (!fn(Subspace::from_rref_rows(n_, std::span<const Vec>(rows.data(), static_cast<std::size_t>(k_))))) return;
    // advance
    std::size_t i = digit.size();
    bool carried = true;
    while (i-- > 0) {
      if (++digit[i] < q) {
        carried = false;
        break;
      }
      digit[i] = 0;
    }
    if (carried) {
      ++pi;
      if (pi >= patterns_.size()) return;
      digit.assign(patterns_[pi].free.size(), 0);
    }
  }
}

std::vector<Subspace> all_subspaces(const FieldPtr& field, int n, int projdim, std::uint64_t budget) {
  SubspaceEnumerator e(field, n, projdim);
  if (e.count() > budget) throw BudgetExceeded(e.count(), budget);
  std::vector<Subspace> out;
  out.reserve(static_cast<std::size_t>(e.count()));
  e.for_each([&](const Subspace& s) {
    out.push_back(s);
    return true;
  });
  return out;
}

std::vector<Subspace> subspaces_through(const FieldPtr& field, const Subspace& u, int projdim, std::uint64_t budget) {
  const Field& f = *field;
  const int coords = u.coords();
  if (projdim < u.projdim() || projdim > u.ambient_dim()) throw std::invalid_argument("bad target dimension");
  if (projdim == u.projdim()) return {u};
  std::vector<int> complement;
  for (int c = 0; c < coords; ++c) {
    bool piv = false;
    for (int i = 0; i < u.rank(); ++i) piv = piv || u.pivot(i) == c;
    if (!piv) complement.push_back(c);
  }
  const int qn = static_cast<int>(complement.size()) - 1;
  SubspaceEnumerator e(field, qn, projdim - u.rank());
  if (e.count() > budget) throw BudgetExceeded(e.count(), budget);
  std::vector<Subspace> out;
  out.reserve(static_cast<std::size_t>(e.count()));
  e.for_each([&](const Subspace& s) {
    std::array<Vec, kMaxCoords> g{};
    std::copy(u.rows().begin(), u.rows().end(), g.begin());
    for (int r = 0; r < s.rank(); ++r) {
      Vec v{};
      for (std::size_t j = 0; j < complement.size(); ++j)
        v[static_cast<std::size_t>(complement[j])] = s.row(r)[j];
      g[static_cast<std::size_t>(u.rank() + r)] = v;
    }
    out.push_back(canonicalize(f, u.ambient_dim(),
                               std::span<const Vec>(g.data(), static_cast<std::size_t>(u.rank() + s.rank()))));
    return true;
  });
  return out;
}

std::vector<ProjPoint> hyperplane_duals(const Field& f, int n) {
  std::array<Vec, kMaxCoords> id{};
  for (int i = 0; i <= n; ++i) id[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
  const auto whole = Subspace::from_rref_rows(n, std::span<const Vec>(id.data(), static_cast<std::size_t>(n + 1)));
  return subspace_points(f, whole);
}

bool incident(const Field& f, const ProjPoint& point, const ProjPoint& dual) {
  if (point.n != dual.n) throw std::invalid_argument("point and hyperplane live in different spaces");
  return dot(f, point.coords, dual.coords, point.n + 1) == 0;
}

PointSpace::PointSpace(FieldPtr field, int n) : field_(std::move(field)), n_(n), q_(field_->q()) {
  std::uint64_t total = 1;
  for (int i = 0; i <= n; ++i) total *= q_;
  if (total > (1ull << 25)) throw std::invalid_argument("point table too large for q=" + std::to_string(q_));
  table_.assign(static_cast<std::size_t>(total), -1);
  const Field& f = *field_;
  Vec v{};
  for (std::uint64_t code = 1; code < total; ++code) {
    std::uint64_t c = code;
    for (int i = n; i >= 0; --i) {
      v[static_cast<std::size_t>(i)] = static_cast<elem_t>(c % q_);
      c /= q_;
    }
    int first = 0;
    while (v[static_cast<std::size_t>(first)] == 0) ++first;
    if (v[static_cast<std::size_t>(first)] == 1) {
      table_[code] = static_cast<std::int32_t>(points_.size());
      points_.push_back(v);
    }
  }
  for (std::uint64_t code = 1; code < total; ++code) {
    if (table_[code] >= 0) continue;
    std::uint64_t c = code;
    for (int i = n; i >= 0; --i) {
      v[static_cast<std::size_t>(i)] = static_cast<elem_t>(c % q_);
      c /= q_;
    }
    table_[code] = table_[pack(normalized(f, v))];
  }
}

void PointSpace::indices_of(const Subspace& w, std::vector<int>& out) const {
  out.clear();
  enumerate_combinations(*field_, w, [&](const Vec& v) { out.push_back(table_[pack(v)]); });
}

}  // namespace srd::pg
