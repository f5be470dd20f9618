#pragma once

#include <random>
#include <set>
#include <string>
#include <vector>

#include "srd/verify.hpp"

namespace srd::verify::detail {

using Q = std::int64_t;

std::string str(const Dist& d);
std::string str(const inv::RankDist& r);
std::string str(std::uint64_t n);
std::string str(const std::set<Dist>& s);

Report begin(const Context& ctx, const std::string& driver, const std::string& title);

/// Pass iff expected == computed, else Fail (or `otherwise`).
Check exact(std::string id, std::string anchor, std::string expected, std::string computed,
            Status otherwise = Status::Fail);
/// Sampled iff expected == computed, else Fail.
Check sampled(std::string id, std::string anchor, std::string expected, std::string computed);
/// exact() or sampled() by mode.
Check check(bool is_sampled, std::string id, std::string anchor, std::string expected, std::string computed);

/// Sets of observed values: equality when exact; when sampled, the observed
/// set only has to lie inside the expected one.
Check set_check(bool is_sampled, std::string id, std::string anchor, const std::set<Dist>& expected,
                const std::set<Dist>& computed);
/// Counts of distinct classes: equality when exact, at most `expected` when sampled.
Check count_check(bool is_sampled, std::string id, std::string anchor, std::uint64_t expected, std::uint64_t computed);

/// Sum of the cell counts against the family size, for exact surveys.
void reconcile(Report& r, const survey::Survey& s, const std::string& id);
void add_size(Report& r, const std::string& label, const survey::Survey& s);

bool r1_zero(const survey::Key& k);
bool min_rank2(const survey::Key& k);
bool constant_rank3(const survey::Key& k);

/// Atlas ids of the three solid orbits of minimum rank 2.
std::vector<std::string> min_rank2_solid_ids(bool even);
/// OD0 of those solids evaluated at q.
std::set<Dist> min_rank2_solid_od0(const Context& ctx);
std::set<Dist> min_rank2_solid_od4(const Context& ctx);
/// OD0 of the complete planes of minimum rank 2 for q even.
std::set<Dist> complete_plane_od0(Q q);
std::set<Dist> complete_plane_od4(Q q);

Subspace member(const Context& ctx, const survey::Survey& s, const survey::Cell& c);

veronese::Mat3 random_invertible(const Field& f, std::mt19937_64& rng);

}  // namespace srd::verify::detail
