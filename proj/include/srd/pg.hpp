#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "srd/gf.hpp"

namespace srd::pg {

using gf::elem_t;
using gf::Field;
using gf::FieldPtr;

/// Projective spaces up to PG(5,q); coordinates beyond n+1 stay zero.
inline constexpr int kMaxCoords = 6;
using Vec = std::array<elem_t, kMaxCoords>;

class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(std::uint64_t needed, std::uint64_t budget);
  std::uint64_t needed() const { return needed_; }

 private:
  std::uint64_t needed_;
};

inline constexpr std::uint64_t kDefaultBudget = 10'000'000;

/// Dense matrix over a field, row-major.
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols, 0) {}
  Matrix(int rows, int cols, std::vector<elem_t> data);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  elem_t& operator()(int r, int c) { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
  elem_t operator()(int r, int c) const { return data_[static_cast<std::size_t>(r) * cols_ + c]; }

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<elem_t> data_;
};

/// Row rank by Gaussian elimination.
int matrix_rank(const Field& f, Matrix m);

/// Reduced row-echelon form in place; returns the pivot column of each
/// nonzero row. Zero rows end up at the bottom.
std::vector<int> rref(const Field& f, Matrix& m);

elem_t dot(const Field& f, const Vec& a, const Vec& b, int coords = kMaxCoords);

/// A point of PG(n,q): first nonzero coordinate equals 1.
struct ProjPoint {
  int n = 0;
  Vec coords{};

  friend bool operator==(const ProjPoint&, const ProjPoint&) = default;
};

/// Normalizes a nonzero vector; throws on the zero vector.
ProjPoint make_point(const Field& f, int n, const Vec& v);
Vec normalized(const Field& f, const Vec& v);
bool is_zero(const Vec& v);

/// A subspace of PG(n,q) stored by its unique RREF basis.
class Subspace {
 public:
  Subspace() = default;

  int ambient_dim() const { return n_; }
  int coords() const { return n_ + 1; }
  /// Vector-space dimension k (number of basis rows).
  int rank() const { return k_; }
  int projdim() const { return k_ - 1; }
  const Vec& row(int i) const { return rows_[static_cast<std::size_t>(i)]; }
  std::span<const Vec> rows() const { return {rows_.data(), static_cast<std::size_t>(k_)}; }
  int pivot(int i) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.n_ == b.n_ && a.k_ == b.k_ && a.rows_ == b.rows_;
  }
  std::size_t hash() const;

  /// Wraps rows that are already in RREF with full rank (no checks beyond shape).
  static Subspace from_rref_rows(int n, std::span<const Vec> rows);

 private:
  int n_ = 0;
  int k_ = 0;
  std::array<Vec, kMaxCoords> rows_{};
};

struct SubspaceHash {
  std::size_t operator()(const Subspace& s) const { return s.hash(); }
};

/// RREF basis of the span of `generators`; nullopt if they are all zero.
std::optional<Subspace> try_canonicalize(const Field& f, int n, std::span<const Vec> generators);
/// Throws std::invalid_argument if all generators are zero.
Subspace canonicalize(const Field& f, int n, std::span<const Vec> generators);

bool contains(const Field& f, const Subspace& w, const Vec& v);
bool contains(const Field& f, const Subspace& w, const Subspace& u);
Subspace join(const Field& f, const Subspace& w, const Vec& v);
Subspace join(const Field& f, const Subspace& w, const Subspace& u);
/// Vector dimension of the intersection (0 when disjoint).
int intersection_rank(const Field& f, const Subspace& w, const Subspace& u);

/// Basis of {x : x . w = 0 for all w in W}; empty when W is the whole space.
std::vector<Vec> null_space(const Field& f, const Subspace& w);
/// The dual subspace (hyperplanes through W as dual points); nullopt for the whole space.
std::optional<Subspace> annihilator(const Field& f, const Subspace& w);

/// Calls fn(vec) for each point of W, normalized, in lexicographic order of
/// the normalized coefficient vectors over the RREF basis.
void for_each_point(const Field& f, const Subspace& w, const std::function<void(const Vec&)>& fn);
std::vector<ProjPoint> subspace_points(const Field& f, const Subspace& w);

/// Number of (k-1)-subspaces of PG(n-1,q); exact, throws on overflow.
std::uint64_t gaussian_binomial(unsigned n, unsigned k, std::uint64_t q);

/// All subspaces of PG(n,q) of projective dimension `projdim` in RREF
/// canonical form, ordered by pivot pattern then free entries (base q).
class SubspaceEnumerator {
 public:
  SubspaceEnumerator(FieldPtr field, int n, int projdim);

  std::uint64_t count() const { return total_; }
  Subspace at(std::uint64_t index) const;
  /// Visits indices [begin, end); fn returns false to stop early.
  void for_range(std::uint64_t begin, std::uint64_t end, const std::function<bool(const Subspace&)>& fn) const;
  void for_each(const std::function<bool(const Subspace&)>& fn) const { for_range(0, total_, fn); }

 private:
  struct Pattern {
    std::vector<int> pivots;
    std::vector<std::pair<int, int>> free;  // (row, column)
    std::uint64_t count = 0;
    std::uint64_t offset = 0;
  };
  FieldPtr field_;
  int n_ = 0, k_ = 0;
  std::vector<Pattern> patterns_;
  std::uint64_t total_ = 0;
};

std::vector<Subspace> all_subspaces(const FieldPtr& field, int n, int projdim,
                                    std::uint64_t budget = kDefaultBudget);

/// Subspaces of projective dimension `projdim` containing `u`, each once.
std::vector<Subspace> subspaces_through(const FieldPtr& field, const Subspace& u, int projdim,
                                        std::uint64_t budget = kDefaultBudget);

/// Hyperplanes of PG(n,q) as normalized dual coordinate vectors.
std::vector<ProjPoint> hyperplane_duals(const Field& f, int n);
bool incident(const Field& f, const ProjPoint& point, const ProjPoint& dual);

/// Dense index of the points of PG(n,q): every nonzero vector (not only
/// normalized ones) maps to the index of its projective point. Index order
/// is increasing base-q value of the normalized vectors.
class PointSpace {
 public:
  PointSpace(FieldPtr field, int n);

  const Field& field() const { return *field_; }
  int n() const { return n_; }
  int size() const { return static_cast<int>(points_.size()); }

  std::uint32_t pack(const Vec& v) const {
    std::uint32_t code = 0;
    for (int i = 0; i <= n_; ++i) code = code * q_ + v[static_cast<std::size_t>(i)];
    return code;
  }
  int index_of(const Vec& v) const { return table_[pack(v)]; }
  const Vec& point(int index) const { return points_[static_cast<std::size_t>(index)]; }

  /// Point indices of W in for_each_point order.
  void indices_of(const Subspace& w, std::vector<int>& out) const;

 private:
  FieldPtr field_;
  int n_;
  std::uint32_t q_;
  std::vector<std::int32_t> table_;
  std::vector<Vec> points_;
};

}  // namespace srd::pg
