#pragma once

#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <utility>
#include <vector>

#include "srd/codes.hpp"
#include "srd/invariants.hpp"

namespace srd::survey {

using inv::Dist;
using pg::Subspace;

struct Cell {
  std::uint64_t count = 0;
  /// Members that are complete for their minimum rank (r1 = 0 only).
  std::uint64_t complete = 0;
  /// Smallest enumeration index (or list position) seen; the cell's representative.
  std::uint64_t first = std::numeric_limits<std::uint64_t>::max();
  /// Minimum over members of the quotient points not covered by rank-1
  /// points, i.e. subspaces one dimension up that keep minimum rank 2.
  /// Tracked only for members of minimum rank 2.
  std::uint64_t min_uncovered = std::numeric_limits<std::uint64_t>::max();
};

/// Cells keyed by (OD0, OD4).
using Key = std::pair<Dist, Dist>;

struct Survey {
  int projdim = 0;
  std::uint64_t total = 0;    // size of the candidate family
  std::uint64_t visited = 0;  // members evaluated (draws, when sampled)
  bool sampled = false;
  std::map<Key, Cell> cells;

  std::uint64_t count_if(const std::function<bool(const Key&)>& pred) const;
};

inv::RankDist rank_distribution(const Dist& od0);

/// Every subspace of PG(5,q) of the given dimension when the count fits in
/// `budget`, else `sample` uniform draws (with replacement) from a seeded
/// generator. Results do not depend on `jobs`.
Survey run(const inv::Geometry& geo, int projdim, unsigned jobs, std::uint64_t budget, std::uint64_t sample,
           std::uint64_t seed);

/// Exactly `sample` seeded draws.
Survey run_sampled(const inv::Geometry& geo, int projdim, unsigned jobs, std::uint64_t sample, std::uint64_t seed);

/// Survey of an explicit candidate list; Cell::first is a list position.
Survey run_list(const inv::Geometry& geo, const std::vector<Subspace>& items, unsigned jobs);

/// Runs fn(begin, end, worker) over a split of [0, n) into `jobs` contiguous ranges.
void parallel_ranges(std::uint64_t n, unsigned jobs,
                     const std::function<void(std::uint64_t, std::uint64_t, unsigned)>& fn);

}  // namespace srd::survey
