#include "srd/veronese.hpp"

#include <stdexcept>

namespace srd::veronese {

namespace {
constexpr int kIdx[3][3] = {{0, 1, 2}, {1, 3, 4}, {2, 4, 5}};
}

Mat3 to_matrix(const Vec& y) {
  Mat3 m{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m[i][j] = y[static_cast<std::size_t>(kIdx[i][j])];
  return m;
}

Vec from_matrix(const Mat3& m) {
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      if (m[i][j] != m[j][i]) throw std::invalid_argument("matrix is not symmetric");
  return Vec{m[0][0], m[0][1], m[0][2], m[1][1], m[1][2], m[2][2]};
}

Mat3 identity3() { return Mat3{{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}}; }

Mat3 mul3(const Field& f, const Mat3& a, const Mat3& b) {
  Mat3 r{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      elem_t s = 0;
      for (int k = 0; k < 3; ++k) s = f.add(s, f.mul(a[i][k], b[k][j]));
      r[i][j] = s;
    }
  return r;
}

Mat3 transpose3(const Mat3& a) {
  Mat3 r{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r[i][j] = a[j][i];
  return r;
}

elem_t det3(const Field& f, const Mat3& a) {
  auto minor = [&](int r1, int r2, int c1, int c2) {
    return f.sub(f.mul(a[r1][c1], a[r2][c2]), f.mul(a[r1][c2], a[r2][c1]));
  };
  elem_t d = f.mul(a[0][0], minor(1, 2, 1, 2));
  d = f.sub(d, f.mul(a[0][1], minor(1, 2, 0, 2)));
  d = f.add(d, f.mul(a[0][2], minor(1, 2, 0, 1)));
  return d;
}

Vec3 apply3(const Field& f, const Mat3& a, const Vec3& u) {
  Vec3 r{};
  for (int i = 0; i < 3; ++i)
    for (int k = 0; k < 3; ++k) r[i] = f.add(r[i], f.mul(a[i][k], u[k]));
  return r;
}

int rank3(const Field& f, const Mat3& m) {
  pg::Matrix mm(3, 3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) mm(i, j) = m[i][j];
  return pg::matrix_rank(f, mm);
}

Vec veronese(const Field& f, const Vec3& u) {
  return Vec{f.mul(u[0], u[0]), f.mul(u[0], u[1]), f.mul(u[0], u[2]),
             f.mul(u[1], u[1]), f.mul(u[1], u[2]), f.mul(u[2], u[2])};
}

int point_rank(const Field& f, const Vec& y) {
  if (pg::is_zero(y)) return 0;
  const Mat3 m = to_matrix(y);
  if (det3(f, m) != 0) return 3;
  // rank 1 iff every 2x2 minor vanishes
  for (int r1 = 0; r1 < 3; ++r1)
    for (int r2 = r1 + 1; r2 < 3; ++r2)
      for (int c1 = 0; c1 < 3; ++c1)
        for (int c2 = c1 + 1; c2 < 3; ++c2)
          if (f.mul(m[r1][c1], m[r2][c2]) != f.mul(m[r1][c2], m[r2][c1])) return 2;
  return 1;
}

Vec3 kernel_of_rank2(const Field& f, const Mat3& m) {
  // The cross product of two independent rows spans the kernel.
  for (int r1 = 0; r1 < 3; ++r1)
    for (int r2 = r1 + 1; r2 < 3; ++r2) {
      const auto& a = m[r1];
      const auto& b = m[r2];
      Vec3 k{f.sub(f.mul(a[1], b[2]), f.mul(a[2], b[1])), f.sub(f.mul(a[2], b[0]), f.mul(a[0], b[2])),
             f.sub(f.mul(a[0], b[1]), f.mul(a[1], b[0]))};
      if (k[0] != 0 || k[1] != 0 || k[2] != 0) {
        Vec v{k[0], k[1], k[2], 0, 0, 0};
        v = pg::normalized(f, v);
        return Vec3{v[0], v[1], v[2]};
      }
    }
  throw std::invalid_argument("matrix does not have rank 2");
}

ConicPlane conic_plane_of_line(const Field& f, const Vec3& k) {
  if (k[0] == 0 && k[1] == 0 && k[2] == 0) throw std::invalid_argument("zero line coordinates");
  // Basis of the line {x : k.x = 0} in PG(2,q).
  std::array<Vec, 1> kk{Vec{k[0], k[1], k[2], 0, 0, 0}};
  const auto kline = pg::canonicalize(f, 2, kk);
  const auto basis = pg::null_space(f, kline);
  const auto line = pg::canonicalize(f, 2, basis);
  ConicPlane out;
  out.line = k;
  pg::for_each_point(f, line, [&](const Vec& u) { out.conic_points.push_back(veronese(f, Vec3{u[0], u[1], u[2]})); });
  out.plane = pg::canonicalize(f, 5, out.conic_points);
  return out;
}

ConicPlane conic_plane_of(const Field& f, const Vec& y) {
  if (point_rank(f, y) != 2) throw std::invalid_argument("conic plane requested for a point of rank other than 2");
  return conic_plane_of_line(f, kernel_of_rank2(f, to_matrix(y)));
}

Subspace nucleus_plane(const Field& f) {
  if (!f.even()) throw std::invalid_argument("nucleus plane exists only for q even");
  std::array<Vec, 3> g{Vec{0, 1, 0, 0, 0, 0}, Vec{0, 0, 1, 0, 0, 0}, Vec{0, 0, 0, 0, 1, 0}};
  return pg::canonicalize(f, 5, g);
}

Vec delta(const ConicForm& c) { return Vec{c[0], c[1], c[2], c[3], c[4], c[5]}; }

ConicForm delta_inverse(const Vec& d) { return ConicForm{d[0], d[1], d[2], d[3], d[4], d[5]}; }

elem_t eval_conic(const Field& f, const ConicForm& c, const Vec3& u) {
  const Vec v = veronese(f, u);
  return pg::dot(f, delta(c), v);
}

ConicForm double_line(const Field& f, const Vec3& k) {
  const Vec v = veronese(f, k);
  // (k.x)^2 has cross coefficients 2 k_i k_j.
  const elem_t two = f.from_int(2);
  return ConicForm{v[0], f.mul(two, v[1]), f.mul(two, v[2]), v[3], f.mul(two, v[4]), v[5]};
}

Lin6 induced_map(const Field& f, const Mat3& a) {
  if (det3(f, a) == 0) throw std::invalid_argument("singular matrix does not define a collineation");
  const Mat3 at = transpose3(a);
  Lin6 m{};
  for (int j = 0; j < 6; ++j) {
    Vec e{};
    e[static_cast<std::size_t>(j)] = 1;
    const Vec img = from_matrix(mul3(f, mul3(f, a, to_matrix(e)), at));
    for (int i = 0; i < 6; ++i) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = img[static_cast<std::size_t>(i)];
  }
  return m;
}

Vec apply_lin(const Field& f, const Lin6& m, const Vec& y) {
  Vec r{};
  for (std::size_t i = 0; i < 6; ++i) {
    elem_t s = 0;
    for (std::size_t j = 0; j < 6; ++j)
      if (y[j] != 0) s = f.add(s, f.mul(m[i][j], y[j]));
    r[i] = s;
  }
  return r;
}

Subspace apply_lin(const Field& f, const Lin6& m, const Subspace& w) {
  std::array<Vec, pg::kMaxCoords> g{};
  for (int i = 0; i < w.rank(); ++i) g[static_cast<std::size_t>(i)] = apply_lin(f, m, w.row(i));
  return pg::canonicalize(f, 5, std::span<const Vec>(g.data(), static_cast<std::size_t>(w.rank())));
}

Vec k_action(const Field& f, const Mat3& a, const Vec& y) {
  if (det3(f, a) == 0) throw std::invalid_argument("singular matrix does not define a collineation");
  return from_matrix(mul3(f, mul3(f, a, to_matrix(y)), transpose3(a)));
}

Subspace k_action(const Field& f, const Mat3& a, const Subspace& w) {
  if (w.ambient_dim() != 5) throw std::invalid_argument("k_action expects a subspace of PG(5,q)");
  return apply_lin(f, induced_map(f, a), w);
}

Subspace polarity_rho(const Field& f, const Subspace& w) {
  if (f.even()) throw std::invalid_argument("the trace-form polarity requires q odd");
  if (w.ambient_dim() != 5) throw std::invalid_argument("polarity expects a subspace of PG(5,q)");
  // tr(AB) = sum y_i y'_i with weight 2 on the off-diagonal coordinates.
  const elem_t two = f.from_int(2);
  const std::array<elem_t, 6> weight{1, two, two, 1, two, 1};
  std::array<Vec, pg::kMaxCoords> scaled{};
  for (int i = 0; i < w.rank(); ++i)
    for (std::size_t c = 0; c < 6; ++c) scaled[static_cast<std::size_t>(i)][c] = f.mul(w.row(i)[c], weight[c]);
  const auto s = pg::canonicalize(f, 5, std::span<const Vec>(scaled.data(), static_cast<std::size_t>(w.rank())));
  auto polar = pg::annihilator(f, s);
  if (!polar) throw std::invalid_argument("the whole space has no polar subspace");
  return *polar;
}

}  // namespace srd::veronese
