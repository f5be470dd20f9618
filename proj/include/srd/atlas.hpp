#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "srd/invariants.hpp"

namespace srd::atlas {

using gf::elem_t;
using gf::Field;
using gf::FieldPtr;
using inv::Dist;
using pg::Subspace;
using pg::Vec;

enum class Parity { Even, Odd };

/// Side conditions on representative parameters.
enum class Condition {
  NonsquareDelta,  // delta not a square (q odd)
  PencilUV,          // v*l^2 + u*v*l - 1 != 0 for all l
  PencilUVSquare,    // as PencilUV with -v a square (q odd)
  PencilUVNonsquare, // as PencilUV with -v a nonsquare (q odd)
  TraceInverse,    // Tr(gamma^-1) = 1 (q even)
  Trace,           // Tr(gamma) = 1 (q even)
  Cubic,           // l^3 + gamma l^2 - beta l + alpha != 0 for all l
  CubicBC,         // b l^3 + c l + 1 has no root, b != 0 (q even)
};

const char* to_string(Condition c);

/// Named parameter values in search order.
using Assignment = std::vector<std::pair<std::string, elem_t>>;

/// Every assignment satisfying the condition, in lexicographic order of the
/// parameter tuple. The pencil conditions return (u, v) pairs; each slot
/// i = 0, 1, 2 gets its own pair.
std::vector<Assignment> all_assignments(const Field& f, Condition c);
/// First satisfying assignment; throws std::logic_error if none exists.
Assignment find_params(const Field& f, Condition c);

struct Params {
  elem_t u0 = 0, v0 = 0;
  elem_t u1 = 0, v1 = 0;
  elem_t u2 = 0, v2 = 0;
  elem_t delta = 0;
  elem_t gamma_inv = 0;  // Tr(gamma^-1) = 1
  elem_t gamma_tr = 0;   // Tr(gamma) = 1
  elem_t alpha = 0, beta = 0, gamma = 0;
  elem_t b = 0, c = 0;

  void apply(const Assignment& a);
};

/// Stores an assignment of condition c in its parameter slot.
void apply_condition(Params& p, Condition c, const Assignment& a);

/// First assignments of every condition that applies to the field's parity.
Params default_params(const Field& f);

/// Linear form in up to four indeterminates x, y, z, t.
struct Lin {
  const Field* f = nullptr;
  std::array<elem_t, 4> c{};
};
Lin operator+(const Lin& a, const Lin& b);
Lin operator-(const Lin& a);
Lin operator-(const Lin& a, const Lin& b);
Lin operator*(elem_t k, const Lin& a);

/// A symmetric matrix of linear forms, entries in y0..y5 order.
struct SymTemplate {
  int vars = 0;
  std::array<Lin, 6> entries;
};

/// Basis vector i sets indeterminate i to 1 and the others to 0.
/// Throws std::logic_error if the basis is dependent.
Subspace subspace_of(const Field& f, const SymTemplate& t);

struct RepSpec {
  std::string id;
  std::string table;  // "lines", "solids", "pairs"
  Parity parity;
  int projdim;
  std::vector<Condition> conditions;
  std::function<SymTemplate(const Field&, const Params&)> build;
  std::function<Dist(std::int64_t)> od0, od4;
  /// The matrix exactly as printed, set only where `build` rescales
  /// parameters to make the printed distributions hold outside
  /// characteristic 3.
  std::function<SymTemplate(const Field&, const Params&)> printed;
};

/// Table rows: 15 lines and 15 solids for q even; 15 solid/line pairs
/// (listed as 30 specs, solid first) for q odd.
const std::vector<RepSpec>& all_specs();
std::vector<const RepSpec*> specs_for(Parity p);
const RepSpec& find_spec(const std::string& id, Parity p);

Parity parity_of(const Field& f);

/// Throws std::invalid_argument on a parity mismatch.
Subspace representative(const Field& f, const RepSpec& spec, const Params& params);
Subspace representative(const Field& f, const RepSpec& spec);
/// The printed matrix (equal to representative() when `printed` is unset).
Subspace printed_representative(const Field& f, const RepSpec& spec, const Params& params);

/// <l, P(0,0,a,b,0,c)> with l the line [[.,x,.],[x,.,y],[.,y,.]].
Subspace pi_abc(const Field& f, elem_t a, elem_t b, elem_t c);
/// pi_{1,1,0}; requires q even.
Subspace sigma16_plane(const Field& f);
/// [[x,y,.],[y,z,z],[.,z,x+z]]; requires q even.
Subspace sigma11_plane(const Field& f);
/// The line (x,y,z,t) = (0,y,0,t) of the Omega_7 representative; requires q even.
Subspace line_in_omega7(const Field& f, const Params& params);

struct Sigma18 {
  Subspace plane;
  Vec point;       // the rank-2 point in the nucleus plane
  Vec hyperplane;  // dual coordinates of H(P)
  Subspace line;   // the constant-rank-3 line used
};
/// Span of a nucleus point P and a constant-rank-3 line of the hyperplane
/// H(P) through C(P); requires q even >= 4.
Sigma18 sigma18_plane(const inv::Geometry& geo);

/// Span of the Gram matrices of (x,y) -> Tr(c x y) over the basis
/// {1, w, w^2} of GF(q^3), c ranging over the same basis.
Subspace sigma_gf_plane(const Field& f);
/// polarity_rho(sigma_gf_plane); requires q odd.
Subspace sigma_tf_plane(const Field& f);

/// Rank-1 points of the plane after extending scalars to GF(q^3).
std::uint64_t rank_one_points_over_cubic(const Field& f, const Subspace& w);

}  // namespace srd::atlas
