#include "srd/survey.hpp"

#include <algorithm>
#include <random>
#include <thread>

namespace srd::survey {

std::uint64_t Survey::count_if(const std::function<bool(const Key&)>& pred) const {
  std::uint64_t n = 0;
  for (const auto& [key, cell] : cells)
    if (pred(key)) n += cell.count;
  return n;
}

inv::RankDist rank_distribution(const Dist& od0) { return {od0[0], od0[1] + od0[2], od0[3]}; }

void parallel_ranges(std::uint64_t n, unsigned jobs,
                     const std::function<void(std::uint64_t, std::uint64_t, unsigned)>& fn) {
  jobs = std::max(1u, jobs);
  if (jobs == 1 || n < 2 * jobs) {
    fn(0, n, 0);
    return;
  }
  std::vector<std::thread> pool;
  const std::uint64_t chunk = (n + jobs - 1) / jobs;
  for (unsigned w = 0; w < jobs; ++w) {
    const std::uint64_t b = std::min<std::uint64_t>(n, w * chunk), e = std::min<std::uint64_t>(n, b + chunk);
    pool.emplace_back(fn, b, e, w);
  }
  for (auto& t : pool) t.join();
}

namespace {

class Evaluator {
 public:
  explicit Evaluator(const inv::Geometry& geo) : geo_(geo), t2_(geo.field(), 2), t3_(geo.field(), 3) {}

  void add(std::map<Key, Cell>& cells, const Subspace& w, std::uint64_t position) const {
    const Dist od0 = geo_.od0(w);
    Cell& cell = cells[{od0, geo_.od4(w)}];
    ++cell.count;
    cell.first = std::min(cell.first, position);
    if (od0[0] != 0) return;
    if (od0[1] + od0[2] > 0) {
      const std::uint64_t uncovered = t2_.quotient_points(w) - t2_.covered(w);
      cell.min_uncovered = std::min(cell.min_uncovered, uncovered);
      if (uncovered == 0) ++cell.complete;
    } else if (t3_.complete(w)) {
      ++cell.complete;
    }
  }

 private:
  const inv::Geometry& geo_;
  codes::CompletenessTester t2_, t3_;
};

void merge(std::map<Key, Cell>& into, const std::map<Key, Cell>& from) {
  for (const auto& [key, c] : from) {
    Cell& d = into[key];
    d.count += c.count;
    d.complete += c.complete;
    d.first = std::min(d.first, c.first);
    d.min_uncovered = std::min(d.min_uncovered, c.min_uncovered);
  }
}

Survey reduce(std::vector<std::map<Key, Cell>>& parts, Survey s) {
  for (const auto& p : parts) merge(s.cells, p);
  return s;
}

Survey over_indices(const inv::Geometry& geo, int projdim, unsigned jobs, const std::vector<std::uint64_t>& draws,
                    std::uint64_t total) {
  const pg::SubspaceEnumerator en(geo.field_ptr(), 5, projdim);
  const Evaluator ev(geo);
  std::vector<std::map<Key, Cell>> parts(std::max(1u, jobs));
  parallel_ranges(draws.size(), jobs, [&](std::uint64_t b, std::uint64_t e, unsigned w) {
    for (std::uint64_t i = b; i < e; ++i) ev.add(parts[w], en.at(draws[i]), draws[i]);
  });
  Survey s;
  s.projdim = projdim;
  s.total = total;
  s.visited = draws.size();
  s.sampled = true;
  return reduce(parts, std::move(s));
}

}  // namespace

Survey run_sampled(const inv::Geometry& geo, int projdim, unsigned jobs, std::uint64_t sample, std::uint64_t seed) {
  const std::uint64_t total = pg::gaussian_binomial(6, static_cast<unsigned>(projdim + 1), geo.q());
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint64_t> pick(0, total - 1);
  std::vector<std::uint64_t> draws(sample);
  for (auto& d : draws) d = pick(rng);
  return over_indices(geo, projdim, jobs, draws, total);
}

Survey run(const inv::Geometry& geo, int projdim, unsigned jobs, std::uint64_t budget, std::uint64_t sample,
           std::uint64_t seed) {
  const std::uint64_t total = pg::gaussian_binomial(6, static_cast<unsigned>(projdim + 1), geo.q());
  if (total > budget) return run_sampled(geo, projdim, jobs, sample, seed);
  const pg::SubspaceEnumerator en(geo.field_ptr(), 5, projdim);
  const Evaluator ev(geo);
  std::vector<std::map<Key, Cell>> parts(std::max(1u, jobs));
  parallel_ranges(total, jobs, [&](std::uint64_t b, std::uint64_t e, unsigned w) {
    std::uint64_t i = b;
    en.for_range(b, e, [&](const Subspace& s) {
      ev.add(parts[w], s, i++);
      return true;
    });
  });
  Survey s;
  s.projdim = projdim;
  s.total = total;
  s.visited = total;
  return reduce(parts, std::move(s));
}

Survey run_list(const inv::Geometry& geo, const std::vector<Subspace>& items, unsigned jobs) {
  const Evaluator ev(geo);
  std::vector<std::map<Key, Cell>> parts(std::max(1u, jobs));
  parallel_ranges(items.size(), jobs, [&](std::uint64_t b, std::uint64_t e, unsigned w) {
    for (std::uint64_t i = b; i < e; ++i) ev.add(parts[w], items[i], i);
  });
  Survey s;
  s.projdim = items.empty() ? 0 : items.front().rank() - 1;
  s.total = items.size();
  s.visited = items.size();
  return reduce(parts, std::move(s));
}

}  // namespace srd::survey
