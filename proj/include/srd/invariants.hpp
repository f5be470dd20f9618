#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <unordered_set>
#include <vector>

#include "srd/pg.hpp"
#include "srd/veronese.hpp"

namespace srd::inv {

using gf::elem_t;
using gf::Field;
using gf::FieldPtr;
using pg::Subspace;
using pg::Vec;
using veronese::Mat3;

enum class PointClass { P1, P2n, P2s, P2e, P2i, P3 };
enum class HyperplaneClass { H1, H2r, H2i, H3 };

const char* to_string(PointClass c);
const char* to_string(HyperplaneClass c);

/// Position in OD0: P1, P2n|P2e, P2s|P2i, P3.
int slot(PointClass c);
int slot(HyperplaneClass c);

/// Four-component count vector (OD0, OD4, or a census).
using Dist = std::array<std::int64_t, 4>;
/// Point counts of rank 1, 2, 3.
using RankDist = std::array<std::int64_t, 3>;

std::string format_dist(const Dist& d);

/// Algebraic classification: rank, then zero diagonal (q even) or the
/// square class of minus a nonzero principal 2x2 minor (q odd).
PointClass classify_point(const Field& f, const Vec& y);

/// Lines through a rank-2 point y in its conic plane that meet the conic
/// in exactly one point.
int tangent_count(const Field& f, const Vec& y);
/// Geometric classification of rank-2 points by tangent_count: 2 exterior,
/// 0 interior (q odd); q+1 nucleus, 1 otherwise (q even).
PointClass classify_point_geometric(const Field& f, const Vec& y);

/// Classification from the zero set of the conic delta^{-1}(H) in PG(2,q).
/// Throws std::logic_error for an impossible zero-set size.
HyperplaneClass classify_hyperplane(const Field& f, const Vec& dual);

/// Lookup tables over all points and hyperplanes of PG(5,q), q <= 16.
class Geometry {
 public:
  explicit Geometry(FieldPtr field);

  const Field& field() const { return *field_; }
  const FieldPtr& field_ptr() const { return field_; }
  const pg::PointSpace& space() const { return space_; }
  unsigned q() const { return field_->q(); }

  PointClass point_class(int index) const { return static_cast<PointClass>(pclass_[static_cast<std::size_t>(index)]); }
  HyperplaneClass hyperplane_class(int index) const {
    return static_cast<HyperplaneClass>(hclass_[static_cast<std::size_t>(index)]);
  }
  int rank_of(int index) const { return rank_[static_cast<std::size_t>(index)]; }
  int point_slot(int index) const { return pslot_[static_cast<std::size_t>(index)]; }
  int hyperplane_slot(int index) const { return hslot_[static_cast<std::size_t>(index)]; }

  Dist od0(const Subspace& w) const;
  Dist od4(const Subspace& w) const;
  RankDist rank_distribution(const Subspace& w) const;
  int min_rank(const Subspace& w) const;

  Dist point_census() const;
  Dist hyperplane_census() const;

 private:
  FieldPtr field_;
  pg::PointSpace space_;
  std::vector<std::uint8_t> pclass_, hclass_, rank_, pslot_, hslot_;
};

/// Expected class sizes over the whole space.
Dist expected_point_census(std::int64_t q, bool even);
Dist expected_hyperplane_census(std::int64_t q);

/// A transvection, a 3-cycle permutation, and diag(w,1,1) for a primitive w.
std::vector<Mat3> k_generators(const Field& f);
std::uint64_t pgl3_order(std::uint64_t q);
/// Order of the projective group generated by k_generators, by BFS.
std::uint64_t generated_group_order(const Field& f, std::uint64_t budget = pg::kDefaultBudget);
std::uint64_t generated_group_order(const Field& f, const std::vector<Mat3>& gens,
                                    std::uint64_t budget = pg::kDefaultBudget);
/// Generators of the stabilizer of the nucleus point (0,0,0,0,1,0): the
/// matrices whose first row is (a,0,0). Requires q even.
std::vector<Mat3> nucleus_point_stabilizer_generators(const Field& f);

using Orbit = std::unordered_set<Subspace, pg::SubspaceHash>;

/// Full K-orbit of w; throws pg::BudgetExceeded past `budget` members.
Orbit orbit_of(const Field& f, const Subspace& w, std::uint64_t budget = pg::kDefaultBudget);
/// Orbit under the group generated by `gens`.
Orbit orbit_of(const Field& f, const Subspace& w, const std::vector<Mat3>& gens,
               std::uint64_t budget = pg::kDefaultBudget);
std::uint64_t orbit_size(const Field& f, const Subspace& w, std::uint64_t budget = pg::kDefaultBudget);
std::uint64_t stabilizer_order(const Field& f, const Subspace& w, std::uint64_t budget = pg::kDefaultBudget);

}  // namespace srd::inv
