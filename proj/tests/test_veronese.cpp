#include <doctest.h>

#include <random>
#include <set>

#include "support.hpp"
#include "srd/veronese.hpp"

using namespace srd;
using test::vec;
using veronese::Mat3;
using veronese::Vec3;

namespace {

std::vector<Vec3> plane_points(const gf::FieldPtr& f) {
  const pg::PointSpace s(f, 2);
  std::vector<Vec3> out;
  for (int i = 0; i < s.size(); ++i) out.push_back({s.point(i)[0], s.point(i)[1], s.point(i)[2]});
  return out;
}

Mat3 random_invertible(const gf::Field& f, std::mt19937& rng) {
  for (;;) {
    Mat3 a{};
    for (auto& row : a)
      for (auto& x : row) x = static_cast<gf::elem_t>(rng() % f.q());
    if (veronese::det3(f, a) != 0) return a;
  }
}

}  // namespace

TEST_CASE("matrix coordinates") {
  const auto y = vec({1, 2, 3, 4, 0, 1});
  const Mat3 m = veronese::to_matrix(y);
  CHECK(m[0][1] == 2);
  CHECK(m[1][0] == 2);
  CHECK(m[2][1] == 0);
  CHECK(veronese::from_matrix(m) == y);
  Mat3 bad = m;
  bad[0][1] = 0;
  CHECK_THROWS_AS(veronese::from_matrix(bad), std::invalid_argument);
}

TEST_CASE("veronese map") {
  const auto f = gf::make_field(3, 1);
  CHECK(veronese::veronese(*f, {1, 0, 0}) == vec({1, 0, 0, 0, 0, 0}));
  CHECK(veronese::veronese(*f, {0, 0, 1}) == vec({0, 0, 0, 0, 0, 1}));
  CHECK(veronese::veronese(*f, {1, 1, 1}) == vec({1, 1, 1, 1, 1, 1}));
  for (unsigned q : {2u, 3u, 4u, 5u}) {
    const auto g = gf::parse_field_spec(std::to_string(q));
    std::set<pg::Vec> images;
    for (const Vec3& u : plane_points(g)) {
      const auto y = veronese::veronese(*g, u);
      CHECK(veronese::point_rank(*g, y) == 1);
      images.insert(pg::normalized(*g, y));
    }
    CHECK(images.size() == q * q + q + 1);
  }
}

TEST_CASE("point ranks against kernel sizes") {
  const auto f3 = gf::make_field(3, 1);
  CHECK(veronese::point_rank(*f3, vec({0, 1, 0, 0, 0, 0})) == 2);
  CHECK(veronese::point_rank(*f3, vec({1, 0, 0, 1, 0, 1})) == 3);
  CHECK(veronese::point_rank(*f3, vec({})) == 0);
  CHECK(veronese::rank3(*f3, veronese::identity3()) == 3);
  for (unsigned q : {2u, 3u, 4u}) {
    const auto f = gf::parse_field_spec(std::to_string(q));
    const auto o = test::oracle_field(*f);
    const pg::PointSpace s(f, 5);
    for (int i = 0; i < s.size(); ++i)
      CHECK(veronese::point_rank(*f, s.point(i)) == oracle::rank(o, oracle::to_m3(test::v6(s.point(i)))));
  }
}

TEST_CASE("conic planes") {
  for (unsigned q : {3u, 4u, 5u}) {
    const auto f = gf::parse_field_spec(std::to_string(q));
    std::set<std::vector<std::uint32_t>> planes;
    for (const Vec3& k : plane_points(f)) {
      const auto cp = veronese::conic_plane_of_line(*f, k);
      CHECK(cp.plane.projdim() == 2);
      CHECK(cp.conic_points.size() == q + 1);
      int rank1 = 0;
      pg::for_each_point(*f, cp.plane, [&](const pg::Vec& y) { rank1 += veronese::point_rank(*f, y) == 1; });
      CHECK(rank1 == static_cast<int>(q + 1));
      planes.insert(test::points_of(*f, cp.plane));
    }
    CHECK(planes.size() == q * q + q + 1);
  }
  const auto f3 = gf::make_field(3, 1);
  const auto cp = veronese::conic_plane_of(*f3, vec({1, 0, 0, 1, 0, 0}));
  CHECK(cp.line == Vec3{0, 0, 1});
  CHECK_THROWS(veronese::conic_plane_of(*f3, vec({1, 0, 0, 0, 0, 0})));
  const Mat3 m = veronese::to_matrix(vec({1, 0, 0, 1, 0, 0}));
  const Vec3 k = veronese::kernel_of_rank2(*f3, m);
  CHECK(veronese::apply3(*f3, m, k) == Vec3{0, 0, 0});
}

TEST_CASE("nucleus plane") {
  const auto f4 = gf::make_field(2, 2);
  const auto pn = veronese::nucleus_plane(*f4);
  CHECK(pg::contains(*f4, pn, vec({0, 1, 1, 0, 1, 0})));
  CHECK_FALSE(pg::contains(*f4, pn, vec({1, 1, 0, 0, 0, 0})));
  pg::for_each_point(*f4, pn, [&](const pg::Vec& y) { CHECK(veronese::point_rank(*f4, y) == 2); });
  CHECK_THROWS(veronese::nucleus_plane(*gf::make_field(3, 1)));
}

TEST_CASE("delta sends a conic to the hyperplane of its points") {
  const auto f = gf::make_field(3, 1);
  CHECK(veronese::delta({1, 0, 0, 0, 0, 0}) == vec({1, 0, 0, 0, 0, 0}));
  CHECK(veronese::delta({0, 1, 0, 0, 0, 0}) == vec({0, 1, 0, 0, 0, 0}));
  CHECK(veronese::delta({0, 0, 1, 1, 0, 0}) == vec({0, 0, 1, 1, 0, 0}));
  for (unsigned q : {2u, 3u, 4u}) {
    const auto g = gf::parse_field_spec(std::to_string(q));
    const pg::PointSpace duals(g, 5);
    const auto pts = plane_points(g);
    for (int i = 0; i < duals.size(); ++i) {
      const auto c = veronese::delta_inverse(duals.point(i));
      CHECK(veronese::delta(c) == duals.point(i));
      for (const Vec3& u : pts)
        CHECK((veronese::eval_conic(*g, c, u) == 0) ==
              (pg::dot(*g, duals.point(i), veronese::veronese(*g, u)) == 0));
    }
  }
}

TEST_CASE("double lines vanish exactly on their line") {
  for (unsigned q : {3u, 4u}) {
    const auto f = gf::parse_field_spec(std::to_string(q));
    const auto pts = plane_points(f);
    for (const Vec3& k : pts) {
      const auto c = veronese::double_line(*f, k);
      for (const Vec3& u : pts) {
        const auto kx = f->add(f->add(f->mul(k[0], u[0]), f->mul(k[1], u[1])), f->mul(k[2], u[2]));
        CHECK(veronese::eval_conic(*f, c, u) == f->mul(kx, kx));
      }
    }
  }
}

TEST_CASE("k action") {
  for (unsigned q : {2u, 3u, 4u, 5u}) {
    const auto f = gf::parse_field_spec(std::to_string(q));
    const auto o = test::oracle_field(*f);
    std::mt19937 rng(q);
    const pg::PointSpace s(f, 5);
    for (int trial = 0; trial < 20; ++trial) {
      const Mat3 a = random_invertible(*f, rng), b = random_invertible(*f, rng);
      oracle::M3 oa{};
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) oa[i][j] = a[i][j];
      const auto lin = veronese::induced_map(*f, a);
      for (int i = 0; i < s.size(); i += 7) {
        const pg::Vec& y = s.point(i);
        const auto ay = veronese::k_action(*f, a, y);
        CHECK(test::same(pg::normalized(*f, ay), oracle::normalize(o, oracle::act(o, oa, test::v6(y)), 6)));
        CHECK(pg::normalized(*f, veronese::apply_lin(*f, lin, y)) == pg::normalized(*f, ay));
        // (AB).y = A.(B.y)
        CHECK(pg::normalized(*f, veronese::k_action(*f, veronese::mul3(*f, a, b), y)) ==
              pg::normalized(*f, veronese::k_action(*f, a, veronese::k_action(*f, b, y))));
        CHECK(veronese::point_rank(*f, ay) == veronese::point_rank(*f, y));
      }
      for (const Vec3& u : plane_points(f))
        CHECK(pg::normalized(*f, veronese::k_action(*f, a, veronese::veronese(*f, u))) ==
              pg::normalized(*f, veronese::veronese(*f, veronese::apply3(*f, a, u))));
    }
    CHECK(veronese::k_action(*f, veronese::identity3(), vec({1, 1, 0, 1, 0, 1})) == vec({1, 1, 0, 1, 0, 1}));
  }
  const auto f3 = gf::make_field(3, 1);
  Mat3 singular{};
  singular[0][0] = 1;
  CHECK_THROWS(veronese::k_action(*f3, singular, vec({1, 0, 0, 0, 0, 0})));
}

TEST_CASE("polarity by the trace form") {
  for (unsigned q : {3u, 5u}) {
    const auto f = gf::parse_field_spec(std::to_string(q));
    const auto o = test::oracle_field(*f);
    std::mt19937 rng(q);
    for (int projdim = 0; projdim <= 4; ++projdim) {
      const pg::SubspaceEnumerator en(f, 5, projdim);
      for (int trial = 0; trial < 10; ++trial) {
        const auto w = en.at(rng() % en.count());
        const auto rho = veronese::polarity_rho(*f, w);
        CHECK(rho.projdim() == 4 - projdim);
        CHECK(veronese::polarity_rho(*f, rho) == w);
        CHECK(test::same(test::points_of(*f, rho), oracle::polar_points(o, test::rows_of(w))));
      }
    }
  }
  CHECK_THROWS(veronese::polarity_rho(*gf::make_field(2, 2), veronese::nucleus_plane(*gf::make_field(2, 2))));
}
