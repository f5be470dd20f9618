#include <doctest.h>

#include <mutex>

#include "support.hpp"
#include "srd/survey.hpp"

using namespace srd;

namespace {

std::uint64_t cell_total(const survey::Survey& s) {
  std::uint64_t n = 0;
  for (const auto& [key, cell] : s.cells) n += cell.count;
  return n;
}

}  // namespace

TEST_CASE("exact surveys reconcile with the gaussian binomials") {
  for (unsigned q : {2u, 3u}) {
    const auto f = gf::parse_field_spec(std::to_string(q));
    const inv::Geometry geo(f);
    for (int projdim = 0; projdim <= 4; ++projdim) {
      const auto s = survey::run(geo, projdim, 1, pg::kDefaultBudget, 1000, 1);
      CAPTURE(q);
      CAPTURE(projdim);
      CHECK_FALSE(s.sampled);
      CHECK(s.total == pg::gaussian_binomial(6, projdim + 1, q));
      CHECK(s.visited == s.total);
      CHECK(cell_total(s) == s.total);
      for (const auto& [key, cell] : s.cells) {
        CHECK(cell.first < s.total);
        CHECK(cell.complete <= cell.count);
      }
    }
  }
  // Points: the six point classes with the census sizes.
  const auto f3 = gf::make_field(3, 1);
  const inv::Geometry g3(f3);
  const auto pts = survey::run(g3, 0, 1, pg::kDefaultBudget, 1000, 1);
  CHECK(pts.cells.size() == 4);
  CHECK(pts.count_if([](const survey::Key& k) { return k.first[0] == 1; }) == 13);
}

TEST_CASE("survey results do not depend on the number of jobs") {
  const auto f = gf::make_field(3, 1);
  const inv::Geometry geo(f);
  const auto a = survey::run(geo, 2, 1, pg::kDefaultBudget, 1000, 1);
  const auto b = survey::run(geo, 2, 3, pg::kDefaultBudget, 1000, 1);
  REQUIRE(a.cells.size() == b.cells.size());
  for (auto ia = a.cells.begin(), ib = b.cells.begin(); ia != a.cells.end(); ++ia, ++ib) {
    CHECK(ia->first == ib->first);
    CHECK(ia->second.count == ib->second.count);
    CHECK(ia->second.complete == ib->second.complete);
    CHECK(ia->second.first == ib->second.first);
    CHECK(ia->second.min_uncovered == ib->second.min_uncovered);
  }
}

TEST_CASE("sampled surveys are reproducible") {
  const auto f = gf::make_field(2, 2);
  const inv::Geometry geo(f);
  const auto a = survey::run_sampled(geo, 3, 1, 500, 42);
  const auto b = survey::run_sampled(geo, 3, 2, 500, 42);
  const auto c = survey::run_sampled(geo, 3, 1, 500, 43);
  CHECK(a.sampled);
  CHECK(a.visited == 500);
  CHECK(cell_total(a) == 500);
  CHECK(a.total == pg::gaussian_binomial(6, 4, 4));
  std::vector<std::pair<survey::Key, std::uint64_t>> ka, kb, kc;
  for (const auto& [k, cell] : a.cells) ka.emplace_back(k, cell.count);
  for (const auto& [k, cell] : b.cells) kb.emplace_back(k, cell.count);
  for (const auto& [k, cell] : c.cells) kc.emplace_back(k, cell.count);
  CHECK(ka == kb);
  CHECK(ka != kc);
  // Over budget, run() falls back to sampling.
  const auto d = survey::run(geo, 3, 1, 1000, 500, 42);
  CHECK(d.sampled);
}

TEST_CASE("survey of an explicit list") {
  const auto f = gf::make_field(2, 2);
  const inv::Geometry geo(f);
  const auto pn = veronese::nucleus_plane(*f);
  const auto s = survey::run_list(geo, {pn, pn}, 1);
  REQUIRE(s.cells.size() == 1);
  const auto& [key, cell] = *s.cells.begin();
  CHECK(key.first == inv::Dist{0, 21, 0, 0});
  CHECK(cell.count == 2);
  CHECK(cell.complete == 2);
  CHECK(cell.first == 0);
  CHECK(survey::rank_distribution(key.first) == inv::RankDist{0, 21, 0});
}

TEST_CASE("parallel ranges cover the interval once") {
  for (unsigned jobs : {1u, 2u, 5u}) {
    std::vector<int> hits(23, 0);
    std::mutex m;
    survey::parallel_ranges(23, jobs, [&](std::uint64_t b, std::uint64_t e, unsigned) {
      std::lock_guard<std::mutex> lock(m);
      for (auto i = b; i < e; ++i) ++hits[i];
    });
    for (int h : hits) CHECK(h == 1);
  }
}
