#pragma once

#include <array>
#include <vector>

#include "srd/pg.hpp"

namespace srd::veronese {

using gf::elem_t;
using gf::Field;
using pg::Subspace;
using pg::Vec;

using Mat3 = std::array<std::array<elem_t, 3>, 3>;
using Vec3 = std::array<elem_t, 3>;
/// Coefficients (a00, a01, a02, a11, a12, a22) of a ternary quadratic form.
using ConicForm = std::array<elem_t, 6>;
/// Linear map of F_q^6 given by its matrix (rows act on column vectors).
using Lin6 = std::array<std::array<elem_t, 6>, 6>;

/// Point coordinates (y0..y5) <-> [[y0,y1,y2],[y1,y3,y4],[y2,y4,y5]].
Mat3 to_matrix(const Vec& y);
/// Throws std::invalid_argument unless m is symmetric.
Vec from_matrix(const Mat3& m);

Mat3 identity3();
Mat3 mul3(const Field& f, const Mat3& a, const Mat3& b);
Mat3 transpose3(const Mat3& a);
elem_t det3(const Field& f, const Mat3& a);
Vec3 apply3(const Field& f, const Mat3& a, const Vec3& u);
int rank3(const Field& f, const Mat3& m);

/// u -> u u^T.
Vec veronese(const Field& f, const Vec3& u);
/// Rank of M_P (0 for the zero vector).
int point_rank(const Field& f, const Vec& y);

/// Nonzero vector spanning the kernel of a rank-2 symmetric matrix.
Vec3 kernel_of_rank2(const Field& f, const Mat3& m);

struct ConicPlane {
  Subspace plane;
  Vec3 line;                     // dual coordinates of the line of PG(2,q)
  std::vector<Vec> conic_points; // images of the points of that line
};

/// Plane spanned by the image of the line k.x = 0 of PG(2,q).
ConicPlane conic_plane_of_line(const Field& f, const Vec3& k);
/// The unique conic plane through a rank-2 point; throws if rank != 2.
ConicPlane conic_plane_of(const Field& f, const Vec& y);

/// Zero-diagonal matrices; throws for q odd.
Subspace nucleus_plane(const Field& f);

/// Dual coordinates of the hyperplane section cut by the conic.
Vec delta(const ConicForm& c);
ConicForm delta_inverse(const Vec& dual);
elem_t eval_conic(const Field& f, const ConicForm& c, const Vec3& u);
/// The form (k.x)^2 of a double line.
ConicForm double_line(const Field& f, const Vec3& k);

/// M -> A M A^T on points. The matching action on PG(2,q) is u -> A u, so
/// k_action(A, veronese(u)) == veronese(A u). Throws on singular A.
Vec k_action(const Field& f, const Mat3& a, const Vec& y);
Subspace k_action(const Field& f, const Mat3& a, const Subspace& w);
/// The 6x6 matrix of y -> A M_y A^T; throws on singular A.
Lin6 induced_map(const Field& f, const Mat3& a);
Vec apply_lin(const Field& f, const Lin6& m, const Vec& y);
Subspace apply_lin(const Field& f, const Lin6& m, const Subspace& w);

/// Polar subspace under <A,B> = tr(AB); throws for q even and for the
/// whole space.
Subspace polarity_rho(const Field& f, const Subspace& w);

}  // namespace srd::veronese
