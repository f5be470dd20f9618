#include <doctest.h>

#include <random>

#include "support.hpp"
#include "srd/atlas.hpp"
#include "srd/codes.hpp"

using namespace srd;
using codes::ClassLabel;
using codes::SrdCode;
using test::vec;
using veronese::Mat3;

namespace {

Mat3 sym(unsigned a, unsigned b, unsigned c, unsigned d, unsigned e, unsigned g) {
  return veronese::to_matrix(vec({a, b, c, d, e, g}));
}

const Mat3 kIdentity = sym(1, 0, 0, 1, 0, 1);

SrdCode code(const gf::FieldPtr& f, const pg::Subspace& w) { return SrdCode::from_subspace(f, w); }

}  // namespace

TEST_CASE("code construction") {
  const auto f = gf::make_field(3, 1);
  const SrdCode c(f, {kIdentity, sym(0, 1, 0, 0, 0, 0)});
  CHECK(c.dim() == 2);
  CHECK_THROWS_AS(SrdCode(f, {}), codes::CodeFormatError);
  CHECK_THROWS_AS(SrdCode(f, {kIdentity, kIdentity}), codes::CodeFormatError);
  Mat3 bad = kIdentity;
  bad[0][1] = 1;
  CHECK_THROWS_AS(SrdCode(f, {bad}), codes::CodeFormatError);
  Mat3 big = kIdentity;
  big[2][2] = 3;
  CHECK_THROWS_AS(SrdCode(f, {big}), codes::CodeFormatError);
}

TEST_CASE("minimum distance and the dimension bound") {
  const auto f = gf::make_field(3, 1);
  CHECK(codes::min_distance(SrdCode(f, {sym(1, 0, 0, 0, 0, 0), sym(0, 0, 0, 1, 0, 0)})) == 1);
  CHECK(codes::min_distance(SrdCode(f, {kIdentity})) == 3);
  CHECK(codes::min_distance(SrdCode(f, {sym(0, 1, 0, 0, 0, 0)})) == 2);
  CHECK(codes::min_distance(code(f, atlas::sigma_gf_plane(*f))) == 3);
  CHECK(codes::dim_bound(3, 1) == 6);
  CHECK(codes::dim_bound(3, 2) == 4);
  CHECK(codes::dim_bound(3, 3) == 3);
  CHECK(codes::dim_bound(2, 2) == 2);
  CHECK(codes::dim_bound(4, 4) == 4);
  CHECK_THROWS(codes::dim_bound(3, 4));
  CHECK(codes::is_msrd(code(f, atlas::sigma_gf_plane(*f))));
  CHECK_FALSE(codes::is_msrd(SrdCode(f, {kIdentity})));
  const auto solid = atlas::representative(*f, atlas::find_spec("Omega_8,2", atlas::Parity::Odd));
  CHECK(codes::is_msrd(code(f, solid)));
}

TEST_CASE("codeword rank distributions against enumeration") {
  for (unsigned q : {2u, 3u, 4u}) {
    const auto f = gf::parse_field_spec(std::to_string(q));
    const auto o = test::oracle_field(*f);
    std::mt19937_64 rng(q);
    for (int projdim = 0; projdim <= 3; ++projdim) {
      const pg::SubspaceEnumerator en(f, 5, projdim);
      for (int trial = 0; trial < 5; ++trial) {
        const auto w = en.at(rng() % en.count());
        const auto d = codes::codeword_rank_distribution(code(f, w));
        CHECK(test::same(d, oracle::codeword_ranks(o, test::rows_of(w))));
        CHECK(d[0] == 1);
      }
    }
  }
  const auto f3 = gf::make_field(3, 1);
  const auto d = codes::codeword_rank_distribution(code(f3, atlas::sigma_gf_plane(*f3)));
  CHECK(d == std::array<std::uint64_t, 4>{1, 0, 0, 26});
}

TEST_CASE("completeness against the brute-force oracle") {
  for (unsigned q : {2u, 3u}) {
    const auto f = gf::parse_field_spec(std::to_string(q));
    const auto o = test::oracle_field(*f);
    std::mt19937_64 rng(17 + q);
    int tested = 0, complete = 0;
    for (int projdim = 0; projdim <= 3; ++projdim) {
      const pg::SubspaceEnumerator en(f, 5, projdim);
      const codes::CompletenessTester t2(*f, 2), t3(*f, 3);
      for (int trial = 0; trial < 400; ++trial) {
        const auto w = en.at(rng() % en.count());
        const int d = codes::min_rank(*f, w);
        if (d < 2) continue;
        const bool mine = (d == 2 ? t2 : t3).complete(w);
        CHECK(mine == oracle::complete(o, test::rows_of(w), d));
        CHECK(mine == codes::is_complete(*f, w, d));
        ++tested;
        complete += mine;
      }
    }
    CAPTURE(q);
    CHECK(tested > 50);
    CHECK(complete > 0);
  }
  for (unsigned q : {2u, 3u, 4u}) {
    const auto f = gf::parse_field_spec(std::to_string(q));
    const auto o = test::oracle_field(*f);
    for (const auto* spec : atlas::specs_for(atlas::parity_of(*f))) {
      const auto w = atlas::representative(*f, *spec);
      const int d = codes::min_rank(*f, w);
      if (d < 2) continue;
      CAPTURE(q);
      CAPTURE(spec->id);
      CHECK(codes::is_complete(*f, w, d) == oracle::complete(o, test::rows_of(w), d));
    }
  }
}

TEST_CASE("complete examples") {
  const auto f4 = gf::make_field(2, 2);
  CHECK(codes::is_complete(code(f4, veronese::nucleus_plane(*f4))));
  const auto line = atlas::line_in_omega7(*f4, atlas::default_params(*f4));
  CHECK_FALSE(codes::is_complete(code(f4, line)));
  const auto f3 = gf::make_field(3, 1);
  CHECK(codes::is_complete(code(f3, atlas::sigma_gf_plane(*f3))));
  CHECK_FALSE(codes::is_complete(SrdCode(f3, {kIdentity})));
  // A code with a rank-1 codeword is complete only as the whole space.
  CHECK_FALSE(codes::is_complete(SrdCode(f3, {sym(1, 0, 0, 0, 0, 0)})));
  const codes::CompletenessTester t(*f3, 2);
  const auto pi = veronese::conic_plane_of_line(*f3, {0, 0, 1}).plane;
  CHECK(t.quotient_points(pi) == 13);
}

TEST_CASE("extension to a complete code") {
  for (unsigned q : {3u, 5u}) {
    const auto f = gf::parse_field_spec(std::to_string(q));
    const SrdCode c(f, {sym(0, 1, 0, 0, 0, 0)});
    const auto e = codes::extend_to_complete(c);
    CAPTURE(q);
    CHECK(codes::min_distance(e) == 2);
    CHECK(codes::is_complete(e));
    CHECK(pg::contains(*f, e.subspace(), c.subspace()));
    CHECK(e.dim() >= 3);
  }
  const auto f5 = gf::make_field(5, 1);
  const auto e5 = codes::extend_to_complete(SrdCode(f5, {sym(0, 1, 0, 0, 0, 0)}));
  CHECK(codes::classify(e5) != ClassLabel::NotComplete);

  const auto f4 = gf::make_field(2, 2);
  const auto pn = veronese::nucleus_plane(*f4);
  CHECK(codes::extend_to_complete(*f4, pn) == pn);
  const auto e4 = codes::extend_to_complete(SrdCode(f4, {kIdentity}));
  CHECK(codes::is_complete(e4));
  CHECK(codes::min_distance(e4) == 3);
  CHECK(e4.dim() == 3);

  const auto whole = codes::extend_to_complete(SrdCode(f5, {sym(1, 0, 0, 0, 0, 0)}));
  CHECK(whole.dim() == 6);
}

TEST_CASE("classification labels") {
  const auto f3 = gf::make_field(3, 1);
  auto odd = [&](const char* id) {
    return codes::classify(*f3, atlas::representative(*f3, atlas::find_spec(id, atlas::Parity::Odd)));
  };
  CHECK(odd("Omega_8,2") == ClassLabel::Omega8_2);
  CHECK(odd("Omega_14,2") == ClassLabel::Omega14_2);
  CHECK(odd("Omega_15,2") == ClassLabel::Omega15_2);
  CHECK(codes::classify(*f3, atlas::sigma_gf_plane(*f3)) == ClassLabel::GFType);
  CHECK(codes::classify(*f3, atlas::sigma_tf_plane(*f3)) == ClassLabel::TFType);
  CHECK(codes::classify(SrdCode(f3, {kIdentity})) == ClassLabel::NotComplete);

  const auto f4 = gf::make_field(2, 2);
  const inv::Geometry g4(f4);
  auto even = [&](const char* id) {
    return codes::classify(*f4, atlas::representative(*f4, atlas::find_spec(id, atlas::Parity::Even)));
  };
  CHECK(even("Omega_7") == ClassLabel::Omega7);
  CHECK(even("Omega_13") == ClassLabel::Omega13);
  CHECK(even("Omega_14") == ClassLabel::Omega14);
  CHECK(codes::classify(*f4, veronese::nucleus_plane(*f4)) == ClassLabel::SigmaN);
  CHECK(codes::classify(*f4, atlas::sigma16_plane(*f4)) == ClassLabel::Sigma16);
  CHECK(codes::classify(*f4, atlas::sigma18_plane(g4).plane) == ClassLabel::Sigma18);
  CHECK(codes::classify(*f4, atlas::sigma_gf_plane(*f4)) == ClassLabel::GFType);

  const auto f5 = gf::make_field(5, 1);
  CHECK(codes::classify(*f5, atlas::sigma_tf_plane(*f5)) == ClassLabel::TFType);
  CHECK(codes::classify_constant_rank3_by_orbit(*f5, atlas::sigma_tf_plane(*f5)) == ClassLabel::TFType);
  CHECK(codes::classify_constant_rank3_by_orbit(*f3, atlas::sigma_gf_plane(*f3)) == ClassLabel::GFType);
  CHECK_THROWS(codes::classify_constant_rank3_by_orbit(*f3, veronese::conic_plane_of_line(*f3, {0, 0, 1}).plane));
  CHECK(std::string(codes::to_string(ClassLabel::TFType)) == "TF_type");
}

TEST_CASE("classification by cubic extension matches orbit membership") {
  for (unsigned q : {3u, 5u}) {
    const auto f = gf::parse_field_spec(std::to_string(q));
    const auto gfp = atlas::sigma_gf_plane(*f);
    const auto orbit = inv::orbit_of(*f, gfp);
    std::mt19937_64 rng(q);
    std::vector<pg::Subspace> members(orbit.begin(), orbit.end());
    for (int i = 0; i < 10; ++i) {
      const auto& w = members[rng() % members.size()];
      CHECK(codes::classify(*f, w) == ClassLabel::GFType);
    }
  }
}

TEST_CASE("JSON round trip") {
  const auto f = gf::parse_field_spec("2^3/101");
  const SrdCode c(f, {kIdentity, sym(0, 1, 0, 0, 0, 0), sym(0, 0, 5, 0, 7, 0)});
  const auto j = codes::to_json(c);
  CHECK(j["field"] == "2^3/101");
  const auto back = codes::from_json(j);
  CHECK(back.subspace() == c.subspace());
  CHECK(back.field().modulus() == f->modulus());
  CHECK(codes::parse_code(j.dump()).basis() == c.basis());

  CHECK_THROWS_WITH_AS(codes::parse_code(R"({"field":"3","basis":[[[0,1,0],[0,0,0],[0,0,0]]]})"),
                       "matrix 0 not symmetric", codes::CodeFormatError);
  CHECK_THROWS_AS(codes::parse_code("{"), codes::CodeFormatError);
  CHECK_THROWS_AS(codes::parse_code(R"({"field":"3"})"), codes::CodeFormatError);
  CHECK_THROWS_AS(codes::parse_code(R"({"field":"3","basis":[[[0,1],[1,0]]]})"), codes::CodeFormatError);
  CHECK_THROWS_AS(codes::parse_code(R"({"field":"3","basis":[[[3,0,0],[0,0,0],[0,0,0]]]})"),
                  codes::CodeFormatError);
  CHECK_THROWS_AS(codes::parse_code(R"({"field":"6","basis":[]})"), gf::FieldError);
}
