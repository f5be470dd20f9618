#include <doctest.h>

#include "support.hpp"

using namespace srd;
using gf::elem_t;

namespace {

const unsigned kOrders[][2] = {{2, 1}, {3, 1}, {2, 2}, {5, 1}, {7, 1}, {2, 3}, {3, 2}, {2, 4}, {5, 2}};

}  // namespace

TEST_CASE("default moduli are the first irreducible in base-p order") {
  for (auto [p, h] : kOrders) {
    if (h == 1) continue;
    const auto irr = oracle::irreducibles(p, h);
    REQUIRE_FALSE(irr.empty());
    // Order of the lower coefficients read as sum c_i p^i.
    auto key = [p = p](const std::vector<unsigned>& m) {
      unsigned k = 0;
      for (std::size_t i = m.size() - 1; i-- > 0;) k = k * p + m[i];
      return k;
    };
    auto best = *std::min_element(irr.begin(), irr.end(), [&](auto& a, auto& b) { return key(a) < key(b); });
    CHECK(gf::default_modulus(p, h) == best);
  }
  CHECK(gf::default_modulus(2, 2) == std::vector<unsigned>{1, 1, 1});
  CHECK(gf::default_modulus(2, 3) == std::vector<unsigned>{1, 1, 0, 1});
}

TEST_CASE("is_irreducible agrees with the sieve") {
  for (unsigned p : {2u, 3u}) {
    for (unsigned h = 2; h <= 4; ++h) {
      const auto irr = oracle::irreducibles(p, h);
      std::size_t count = 0;
      unsigned n = 1;
      for (unsigned i = 0; i < h; ++i) n *= p;
      for (unsigned code = 0; code < n; ++code) {
        std::vector<unsigned> m(h + 1, 0);
        unsigned c = code;
        for (unsigned i = 0; i < h; ++i) {
          m[i] = c % p;
          c /= p;
        }
        m[h] = 1;
        const bool expect = std::find(irr.begin(), irr.end(), m) != irr.end();
        CHECK(gf::is_irreducible(p, m) == expect);
        count += expect;
      }
      CHECK(count == irr.size());
    }
  }
}

TEST_CASE("field arithmetic matches schoolbook polynomial arithmetic") {
  for (auto [p, h] : kOrders) {
    const auto f = gf::make_field(p, h);
    const auto o = test::oracle_field(*f);
    CAPTURE(f->spec());
    for (elem_t a = 0; a < f->q(); ++a) {
      CHECK(f->neg(a) == o.neg(a));
      if (a) CHECK(f->inv(a) == o.inv(a));
      CHECK(f->pow(a, 5) == o.pow(a, 5));
      for (elem_t b = 0; b < f->q(); ++b) {
        CHECK(f->add(a, b) == o.add(a, b));
        CHECK(f->mul(a, b) == o.mul(a, b));
        CHECK(f->sub(a, b) == o.sub(a, b));
      }
    }
  }
}

TEST_CASE("primitive element generates the multiplicative group") {
  for (auto [p, h] : kOrders) {
    const auto f = gf::make_field(p, h);
    std::set<elem_t> seen;
    for (unsigned k = 0; k + 1 < f->q(); ++k) seen.insert(f->exp(k));
    CHECK(seen.size() == f->q() - 1);
    for (elem_t a = 1; a < f->q(); ++a) CHECK(f->exp(f->log(a)) == a);
  }
}

TEST_CASE("squares and traces against enumeration") {
  for (auto [p, h] : kOrders) {
    const auto f = gf::make_field(p, h);
    const auto o = test::oracle_field(*f);
    for (elem_t a = 0; a < f->q(); ++a) {
      if (f->even()) CHECK(f->trace2(a) == o.trace2(a));
      else CHECK(f->is_square(a) == (o.squares().count(a) == 1));
    }
  }
  CHECK_FALSE(gf::make_field(3, 1)->is_square(2));
  CHECK(gf::make_field(5, 1)->is_square(4));
  CHECK(gf::make_field(7, 1)->is_square(2));
  CHECK(gf::make_field(2, 2)->trace2(1) == 0);
  CHECK(gf::make_field(2, 3)->trace2(1) == 1);
  const auto f4 = gf::make_field(2, 2);
  CHECK(f4->trace2(f4->primitive()) == 1);
  CHECK_THROWS_AS(gf::make_field(3, 1)->trace2(1), gf::FieldError);
  CHECK_THROWS_AS(gf::make_field(2, 2)->is_square(1), gf::FieldError);
}

TEST_CASE("frobenius fixes exactly the prime field") {
  const auto f = gf::make_field(3, 2);
  int fixed = 0;
  for (elem_t a = 0; a < f->q(); ++a) {
    CHECK(f->frobenius(a) == f->pow(a, 3));
    CHECK(f->frobenius(a, 2) == a);
    fixed += f->frobenius(a) == a;
  }
  CHECK(fixed == 3);
}

TEST_CASE("field specs") {
  CHECK(gf::parse_field_spec("4")->spec() == "2^2");
  CHECK(gf::parse_field_spec("2^2")->q() == 4);
  CHECK(gf::parse_field_spec("3")->h() == 1);
  CHECK(gf::parse_field_spec("3")->modulus().empty());
  const auto custom = gf::parse_field_spec("2^3/101");
  CHECK(custom->modulus() == std::vector<unsigned>{1, 0, 1, 1});
  CHECK_FALSE(custom->has_default_modulus());
  CHECK(custom->spec() == "2^3/101");
  CHECK(gf::parse_field_spec("2^3/011")->has_default_modulus());
  CHECK_THROWS_AS(gf::parse_field_spec("6"), gf::FieldError);
  CHECK_THROWS_AS(gf::parse_field_spec("1"), gf::FieldError);
  CHECK_THROWS_AS(gf::parse_field_spec("4^1"), gf::FieldError);
  CHECK_THROWS_AS(gf::parse_field_spec("2^2/01"), gf::FieldError);
  CHECK_THROWS_AS(gf::parse_field_spec("2^2/1"), gf::FieldError);
  CHECK_THROWS_AS(gf::parse_field_spec("abc"), gf::FieldError);
  CHECK_THROWS_AS(gf::parse_field_spec("2^7"), gf::FieldError);
  CHECK_THROWS_AS(gf::parse_field_spec("3/1"), gf::FieldError);
  CHECK_THROWS_AS(gf::make_field(2, 13), gf::FieldError);
}

TEST_CASE("custom modulus builds an isomorphic field") {
  const auto f = gf::parse_field_spec("2^3/101");
  const auto o = test::oracle_field(*f);
  for (elem_t a = 0; a < 8; ++a)
    for (elem_t b = 0; b < 8; ++b) CHECK(f->mul(a, b) == o.mul(a, b));
}

TEST_CASE("field elements") {
  const auto f = gf::make_field(5, 1);
  const gf::FieldElement a(f, 3), b(f, 4);
  CHECK((a + b).value() == 2);
  CHECK((a * b).value() == 2);
  CHECK((a - b).value() == 4);
  CHECK((a / b).value() == 2);
  CHECK((-a).value() == 2);
  CHECK(a.inverse().value() == 2);
  CHECK_THROWS_AS(gf::FieldElement(f, 0).inverse(), gf::FieldError);
  CHECK_THROWS_AS(gf::FieldElement(f, 5), gf::FieldError);
  const gf::FieldElement other(gf::make_field(5, 1), 1);
  CHECK_THROWS_AS(a + other, gf::FieldError);
  CHECK(f->from_int(-1) == 4);
  CHECK(f->from_int(12) == 2);
}

TEST_CASE("cubic extensions") {
  SUBCASE("F2 -> F8") {
    const auto ext = gf::cubic_extension(gf::make_field(2, 1));
    CHECK(ext.big->q() == 8);
    for (elem_t x = 0; x < 8; ++x) CHECK(ext.frobenius(ext.frobenius(ext.frobenius(x))) == x);
    int moved = 0;
    for (elem_t x = 0; x < 8; ++x) moved += ext.frobenius(x) != x;
    CHECK(moved == 6);
  }
  SUBCASE("F3 -> F27") {
    const auto ext = gf::cubic_extension(gf::make_field(3, 1));
    CHECK(ext.big->q() == 27);
    CHECK(ext.big->add(ext.embed(2), ext.embed(1)) == 0);
  }
  SUBCASE("F4 -> F64") {
    const auto base = gf::make_field(2, 2);
    const auto ext = gf::cubic_extension(base);
    CHECK(ext.big->q() == 64);
    std::set<elem_t> fixed;
    for (elem_t x = 0; x < 64; ++x)
      if (ext.frobenius(x) == x) fixed.insert(x);
    CHECK(fixed.size() == 4);
    std::set<elem_t> image(ext.embedding.begin(), ext.embedding.end());
    CHECK(image == fixed);
    for (elem_t a = 0; a < 4; ++a)
      for (elem_t b = 0; b < 4; ++b) {
        CHECK(ext.big->mul(ext.embed(a), ext.embed(b)) == ext.embed(base->mul(a, b)));
        CHECK(ext.big->add(ext.embed(a), ext.embed(b)) == ext.embed(base->add(a, b)));
      }
  }
}
