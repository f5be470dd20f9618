#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "srd/invariants.hpp"

namespace srd::codes {

using gf::Field;
using gf::FieldPtr;
using pg::Subspace;
using pg::Vec;
using veronese::Mat3;

class CodeFormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An F_q-linear code of symmetric 3x3 matrices with the rank metric.
class SrdCode {
 public:
  /// Throws CodeFormatError on an empty, non-symmetric, out-of-field or
  /// dependent basis.
  SrdCode(FieldPtr field, std::vector<Mat3> basis);
  static SrdCode from_subspace(FieldPtr field, const Subspace& w);

  const Field& field() const { return *field_; }
  const FieldPtr& field_ptr() const { return field_; }
  const std::vector<Mat3>& basis() const { return basis_; }
  const Subspace& subspace() const { return subspace_; }
  int dim() const { return subspace_.rank(); }

 private:
  FieldPtr field_;
  std::vector<Mat3> basis_;
  Subspace subspace_;
};

enum class ClassLabel {
  Omega8_2,
  Omega14_2,
  Omega15_2,
  Omega7,
  Omega13,
  Omega14,
  SigmaN,
  Sigma16,
  Sigma18,
  GFType,
  TFType,
  WholeSpace,
  NotComplete,
};

const char* to_string(ClassLabel c);

/// Point counts of rank 1, 2, 3 in W; works for any field size.
inv::RankDist subspace_rank_distribution(const Field& f, const Subspace& w);
int min_rank(const Field& f, const Subspace& w);

int min_distance(const SrdCode& c);
/// Codeword counts of rank 0..3: r0 = 1 and r_i = (q-1) times the point count.
std::array<std::uint64_t, 4> codeword_rank_distribution(const SrdCode& c);

/// Largest dimension of an n x n symmetric code with minimum distance d.
int dim_bound(int n, int d);
bool is_msrd(const SrdCode& c);

/// W is complete for minimum rank d iff the points of rank < d cover every
/// point of the quotient PG(5,q)/W.
class CompletenessTester {
 public:
  CompletenessTester(const Field& f, int d);

  int min_rank() const { return d_; }
  /// Points of PG(5,q)/W that are images of points of rank < d.
  std::uint64_t covered(const Subspace& w) const;
  /// Number of points of PG(5,q)/W.
  std::uint64_t quotient_points(const Subspace& w) const;
  bool complete(const Subspace& w) const;

 private:
  const Field* f_;
  int d_;
  std::vector<Vec> low_;
};

bool is_complete(const Field& f, const Subspace& w, int d);
bool is_complete(const SrdCode& c);

/// Adjoins, in for_each_point order over PG(5,q), the first point whose
/// span keeps the minimum rank, until the code is complete.
Subspace extend_to_complete(const Field& f, const Subspace& w);
SrdCode extend_to_complete(const SrdCode& c);

/// Label by minimum distance, dimension and rank distribution. Throws
/// std::logic_error when a complete code matches no known signature.
ClassLabel classify(const Field& f, const Subspace& w);
ClassLabel classify(const SrdCode& c);
/// Constant-rank-3 planes: GF_type or TF_type by orbit membership.
/// Only practical for small q.
ClassLabel classify_constant_rank3_by_orbit(const Field& f, const Subspace& w,
                                            std::uint64_t budget = pg::kDefaultBudget);

nlohmann::json to_json(const SrdCode& c);
/// Throws CodeFormatError (or gf::FieldError for a bad field spec).
SrdCode from_json(const nlohmann::json& j);
SrdCode parse_code(const std::string& text);

}  // namespace srd::codes
