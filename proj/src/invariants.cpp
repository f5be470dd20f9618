#include "srd/invariants.hpp"

#include <deque>
#include <stdexcept>
#include <unordered_set>

namespace srd::inv {

const char* to_string(PointClass c) {
  switch (c) {
    case PointClass::P1: return "P1";
    case PointClass::P2n: return "P2n";
    case PointClass::P2s: return "P2s";
    case PointClass::P2e: return "P2e";
    case PointClass::P2i: return "P2i";
    case PointClass::P3: return "P3";
  }
  return "?";
}

const char* to_string(HyperplaneClass c) {
  switch (c) {
    case HyperplaneClass::H1: return "H1";
    case HyperplaneClass::H2r: return "H2r";
    case HyperplaneClass::H2i: return "H2i";
    case HyperplaneClass::H3: return "H3";
  }
  return "?";
}

int slot(PointClass c) {
  switch (c) {
    case PointClass::P1: return 0;
    case PointClass::P2n:
    case PointClass::P2e: return 1;
    case PointClass::P2s:
    case PointClass::P2i: return 2;
    case PointClass::P3: return 3;
  }
  return -1;
}

int slot(HyperplaneClass c) { return static_cast<int>(c); }

std::string format_dist(const Dist& d) {
  std::string s = "[";
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(d[i]);
  }
  return s + "]";
}

PointClass classify_point(const Field& f, const Vec& y) {
  switch (veronese::point_rank(f, y)) {
    case 1: return PointClass::P1;
    case 3: return PointClass::P3;
    case 2: break;
    default: throw std::invalid_argument("zero vector has no point class");
  }
  if (f.even()) return (y[0] == 0 && y[3] == 0 && y[5] == 0) ? PointClass::P2n : PointClass::P2s;
  const elem_t minors[3] = {f.sub(f.mul(y[0], y[3]), f.mul(y[1], y[1])),
                            f.sub(f.mul(y[0], y[5]), f.mul(y[2], y[2])),
                            f.sub(f.mul(y[3], y[5]), f.mul(y[4], y[4]))};
  for (elem_t d : minors)
    if (d != 0) return f.is_square(f.neg(d)) ? PointClass::P2e : PointClass::P2i;
  throw std::logic_error("rank-2 symmetric matrix without a nonzero principal minor");
}

int tangent_count(const Field& f, const Vec& y) {
  if (veronese::point_rank(f, y) != 2) throw std::invalid_argument("tangent count needs a rank-2 point");
  const auto cp = veronese::conic_plane_of(f, y);
  int tangents = 0;
  for (const Vec& c : cp.conic_points) {
    std::array<Vec, 2> g{y, c};
    const auto line = pg::canonicalize(f, 5, g);
    int on_line = 0;
    for (const Vec& d : cp.conic_points)
      if (pg::contains(f, line, d)) ++on_line;
    if (on_line == 1) ++tangents;
  }
  return tangents;
}

PointClass classify_point_geometric(const Field& f, const Vec& y) {
  pg::Matrix m(3, 3);
  const Mat3 a = veronese::to_matrix(y);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m(i, j) = a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  switch (pg::matrix_rank(f, m)) {
    case 1: return PointClass::P1;
    case 3: return PointClass::P3;
    case 2: break;
    default: throw std::invalid_argument("zero vector has no point class");
  }
  const int t = tangent_count(f, y);
  if (f.even()) return t == static_cast<int>(f.q()) + 1 ? PointClass::P2n : PointClass::P2s;
  return t == 2 ? PointClass::P2e : PointClass::P2i;
}

namespace {

std::vector<veronese::Vec3> plane_points(const Field& f) {
  std::vector<veronese::Vec3> out;
  std::array<Vec, 3> id{Vec{1, 0, 0, 0, 0, 0}, Vec{0, 1, 0, 0, 0, 0}, Vec{0, 0, 1, 0, 0, 0}};
  const auto whole = pg::canonicalize(f, 2, id);
  pg::for_each_point(f, whole, [&](const Vec& v) { out.push_back({v[0], v[1], v[2]}); });
  return out;
}

HyperplaneClass classify_zero_set(const Field& f, const std::vector<veronese::Vec3>& s) {
  const std::size_t q = f.q();
  if (s.size() == 1) return HyperplaneClass::H2i;
  if (s.size() == 2 * q + 1) return HyperplaneClass::H2r;
  if (s.size() == q + 1) {
    const auto& a = s[0];
    const auto& b = s[1];
    const veronese::Vec3 line{f.sub(f.mul(a[1], b[2]), f.mul(a[2], b[1])), f.sub(f.mul(a[2], b[0]), f.mul(a[0], b[2])),
                              f.sub(f.mul(a[0], b[1]), f.mul(a[1], b[0]))};
    for (const auto& u : s) {
      const elem_t d = f.add(f.add(f.mul(line[0], u[0]), f.mul(line[1], u[1])), f.mul(line[2], u[2]));
      if (d != 0) return HyperplaneClass::H3;
    }
    return HyperplaneClass::H1;
  }
  throw std::logic_error("conic zero set of impossible size " + std::to_string(s.size()));
}

}  // namespace

HyperplaneClass classify_hyperplane(const Field& f, const Vec& dual) {
  if (pg::is_zero(dual)) throw std::invalid_argument("zero dual vector");
  std::vector<veronese::Vec3> s;
  for (const auto& u : plane_points(f))
    if (pg::dot(f, dual, veronese::veronese(f, u)) == 0) s.push_back(u);
  return classify_zero_set(f, s);
}

Geometry::Geometry(FieldPtr field) : field_(std::move(field)), space_(field_, 5) {
  const Field& f = *field_;
  if (f.q() > 16) throw std::invalid_argument("geometry tables support q <= 16");
  const auto n = static_cast<std::size_t>(space_.size());
  pclass_.resize(n);
  hclass_.resize(n);
  rank_.resize(n);
  pslot_.resize(n);
  hslot_.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Vec& y = space_.point(static_cast<int>(i));
    const PointClass c = classify_point(f, y);
    pclass_[i] = static_cast<std::uint8_t>(c);
    pslot_[i] = static_cast<std::uint8_t>(slot(c));
    rank_[i] = static_cast<std::uint8_t>(c == PointClass::P1 ? 1 : c == PointClass::P3 ? 3 : 2);
    if (f.even() && y[0] == 0 && y[3] == 0 && y[5] == 0 && rank_[i] != 2)
      throw std::logic_error("zero-diagonal point of rank other than 2 in even characteristic");
  }
  std::vector<Vec> images;
  std::vector<veronese::Vec3> pts = plane_points(f);
  for (const auto& u : pts) images.push_back(veronese::veronese(f, u));
  std::vector<veronese::Vec3> zeros;
  for (std::size_t i = 0; i < n; ++i) {
    const Vec& a = space_.point(static_cast<int>(i));
    zeros.clear();
    for (std::size_t j = 0; j < pts.size(); ++j)
      if (pg::dot(f, a, images[j]) == 0) zeros.push_back(pts[j]);
    const HyperplaneClass c = classify_zero_set(f, zeros);
    hclass_[i] = static_cast<std::uint8_t>(c);
    hslot_[i] = static_cast<std::uint8_t>(slot(c));
  }
}

Dist Geometry::od0(const Subspace& w) const {
  Dist d{};
  std::vector<int> idx;
  space_.indices_of(w, idx);
  for (int i : idx) ++d[pslot_[static_cast<std::size_t>(i)]];
  return d;
}

Dist Geometry::od4(const Subspace& w) const {
  Dist d{};
  const auto dual = pg::annihilator(*field_, w);
  if (!dual) return d;
  std::vector<int> idx;
  space_.indices_of(*dual, idx);
  for (int i : idx) ++d[hslot_[static_cast<std::size_t>(i)]];
  return d;
}

RankDist Geometry::rank_distribution(const Subspace& w) const {
  RankDist r{};
  std::vector<int> idx;
  space_.indices_of(w, idx);
  for (int i : idx) ++r[rank_[static_cast<std::size_t>(i)] - 1u];
  return r;
}

int Geometry::min_rank(const Subspace& w) const {
  const RankDist r = rank_distribution(w);
  for (int i = 0; i < 3; ++i)
    if (r[static_cast<std::size_t>(i)] > 0) return i + 1;
  return 0;
}

Dist Geometry::point_census() const {
  Dist d{};
  for (auto s : pslot_) ++d[s];
  return d;
}

Dist Geometry::hyperplane_census() const {
  Dist d{};
  for (auto s : hslot_) ++d[s];
  return d;
}

Dist expected_point_census(std::int64_t q, bool even) {
  const std::int64_t plane = q * q + q + 1;
  const std::int64_t r3 = q * q * q * q * q - q * q;
  if (even) return Dist{plane, plane, (q * q - 1) * plane, r3};
  return Dist{plane, plane * q * (q + 1) / 2, plane * q * (q - 1) / 2, r3};
}

Dist expected_hyperplane_census(std::int64_t q) {
  const std::int64_t plane = q * q + q + 1;
  return Dist{plane, plane * (q * q + q) / 2, (q * q * q * q - q) / 2, q * q * q * q * q - q * q};
}

std::vector<Mat3> k_generators(const Field& f) {
  Mat3 transvection = veronese::identity3();
  transvection[0][1] = 1;
  const Mat3 cycle{{{0, 0, 1}, {1, 0, 0}, {0, 1, 0}}};
  Mat3 scalar = veronese::identity3();
  scalar[0][0] = f.primitive();
  return {transvection, cycle, scalar};
}

std::uint64_t pgl3_order(std::uint64_t q) { return q * q * q * (q * q * q - 1) * (q * q - 1); }

namespace {

Mat3 projective_normal(const Field& f, Mat3 m) {
  for (int i = 0; i < 9; ++i) {
    const elem_t x = m[i / 3][i % 3];
    if (x == 0) continue;
    if (x != 1) {
      const elem_t inv = f.inv(x);
      for (auto& row : m)
        for (auto& e : row) e = f.mul(e, inv);
    }
    break;
  }
  return m;
}

std::uint64_t pack_mat(const Mat3& m, std::uint64_t q) {
  std::uint64_t code = 0;
  for (const auto& row : m)
    for (auto e : row) code = code * q + e;
  return code;
}

}  // namespace

std::uint64_t generated_group_order(const Field& f, std::uint64_t budget) {
  return generated_group_order(f, k_generators(f), budget);
}

std::vector<Mat3> nucleus_point_stabilizer_generators(const Field& f) {
  if (!f.even()) throw std::invalid_argument("the nucleus plane exists only for q even");
  const elem_t w = f.primitive();
  Mat3 d0 = veronese::identity3(), d1 = veronese::identity3(), e10 = veronese::identity3(),
       e20 = veronese::identity3(), t12 = veronese::identity3();
  d0[0][0] = w;
  d1[1][1] = w;
  e10[1][0] = 1;
  e20[2][0] = 1;
  t12[1][2] = 1;
  const Mat3 swap12{{{1, 0, 0}, {0, 0, 1}, {0, 1, 0}}};
  return {d0, d1, e10, e20, t12, swap12};
}

std::uint64_t generated_group_order(const Field& f, const std::vector<Mat3>& gens, std::uint64_t budget) {
  if (f.q() > 128) throw std::invalid_argument("group closure supports q <= 128");
  std::unordered_set<std::uint64_t> seen;
  std::deque<Mat3> queue;
  const Mat3 id = veronese::identity3();
  seen.insert(pack_mat(id, f.q()));
  queue.push_back(id);
  while (!queue.empty()) {
    const Mat3 m = queue.front();
    queue.pop_front();
    for (const auto& g : gens) {
      const Mat3 next = projective_normal(f, veronese::mul3(f, g, m));
      if (seen.insert(pack_mat(next, f.q())).second) {
        if (seen.size() > budget) throw pg::BudgetExceeded(seen.size(), budget);
        queue.push_back(next);
      }
    }
  }
  return seen.size();
}

Orbit orbit_of(const Field& f, const Subspace& w, std::uint64_t budget) {
  return orbit_of(f, w, k_generators(f), budget);
}

Orbit orbit_of(const Field& f, const Subspace& w, const std::vector<Mat3>& gens, std::uint64_t budget) {
  std::vector<veronese::Lin6> maps;
  for (const auto& g : gens) maps.push_back(veronese::induced_map(f, g));
  Orbit orbit;
  std::deque<Subspace> queue;
  orbit.insert(w);
  queue.push_back(w);
  while (!queue.empty()) {
    const Subspace cur = queue.front();
    queue.pop_front();
    for (const auto& m : maps) {
      Subspace next = veronese::apply_lin(f, m, cur);
      if (orbit.insert(next).second) {
        if (orbit.size() > budget) throw pg::BudgetExceeded(orbit.size(), budget);
        queue.push_back(std::move(next));
      }
    }
  }
  return orbit;
}

std::uint64_t orbit_size(const Field& f, const Subspace& w, std::uint64_t budget) {
  return orbit_of(f, w, budget).size();
}

std::uint64_t stabilizer_order(const Field& f, const Subspace& w, std::uint64_t budget) {
  const std::uint64_t n = orbit_size(f, w, budget);
  const std::uint64_t g = pgl3_order(f.q());
  if (g % n != 0) throw std::logic_error("orbit size does not divide the group order");
  return g / n;
}

}  // namespace srd::inv
