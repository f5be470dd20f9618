#include "srd/codes.hpp"

#include <algorithm>

#include "srd/atlas.hpp"

namespace srd::codes {

using gf::elem_t;

SrdCode::SrdCode(FieldPtr field, std::vector<Mat3> basis) : field_(std::move(field)), basis_(std::move(basis)) {
  if (basis_.empty()) throw CodeFormatError("basis is empty");
  if (basis_.size() > 6) throw CodeFormatError("more than 6 basis matrices");
  const Field& f = *field_;
  std::array<Vec, 6> rows{};
  for (std::size_t m = 0; m < basis_.size(); ++m) {
    for (const auto& row : basis_[m])
      for (elem_t e : row)
        if (e >= f.q())
          throw CodeFormatError("matrix " + std::to_string(m) + " has entry " + std::to_string(e) +
                                " outside GF(" + std::to_string(f.q()) + ")");
    try {
      rows[m] = veronese::from_matrix(basis_[m]);
    } catch (const std::invalid_argument&) {
      throw CodeFormatError("matrix " + std::to_string(m) + " not symmetric");
    }
  }
  auto s = pg::try_canonicalize(f, 5, std::span<const Vec>(rows.data(), basis_.size()));
  if (!s || s->rank() != static_cast<int>(basis_.size())) throw CodeFormatError("basis matrices are linearly dependent");
  subspace_ = *s;
}

SrdCode SrdCode::from_subspace(FieldPtr field, const Subspace& w) {
  if (w.ambient_dim() != 5) throw std::invalid_argument("codes live in PG(5,q)");
  std::vector<Mat3> basis;
  for (const Vec& r : w.rows()) basis.push_back(veronese::to_matrix(r));
  return SrdCode(std::move(field), std::move(basis));
}

const char* to_string(ClassLabel c) {
  switch (c) {
    case ClassLabel::Omega8_2: return "Omega8_2";
    case ClassLabel::Omega14_2: return "Omega14_2";
    case ClassLabel::Omega15_2: return "Omega15_2";
    case ClassLabel::Omega7: return "Omega7";
    case ClassLabel::Omega13: return "Omega13";
    case ClassLabel::Omega14: return "Omega14";
    case ClassLabel::SigmaN: return "Sigma_N";
    case ClassLabel::Sigma16: return "Sigma_16";
    case ClassLabel::Sigma18: return "Sigma_18";
    case ClassLabel::GFType: return "GF_type";
    case ClassLabel::TFType: return "TF_type";
    case ClassLabel::WholeSpace: return "WholeSpace";
    case ClassLabel::NotComplete: return "NotComplete";
  }
  return "?";
}

inv::RankDist subspace_rank_distribution(const Field& f, const Subspace& w) {
  inv::RankDist r{};
  pg::for_each_point(f, w, [&](const Vec& y) { ++r[static_cast<std::size_t>(veronese::point_rank(f, y) - 1)]; });
  return r;
}

int min_rank(const Field& f, const Subspace& w) {
  const auto r = subspace_rank_distribution(f, w);
  for (int i = 0; i < 3; ++i)
    if (r[static_cast<std::size_t>(i)] > 0) return i + 1;
  return 0;
}

int min_distance(const SrdCode& c) { return min_rank(c.field(), c.subspace()); }

std::array<std::uint64_t, 4> codeword_rank_distribution(const SrdCode& c) {
  const auto r = subspace_rank_distribution(c.field(), c.subspace());
  const std::uint64_t m = c.field().q() - 1;
  return {1, m * static_cast<std::uint64_t>(r[0]), m * static_cast<std::uint64_t>(r[1]),
          m * static_cast<std::uint64_t>(r[2])};
}

int dim_bound(int n, int d) {
  if (n < 1 || d < 1 || d > n) throw std::invalid_argument("dim_bound needs 1 <= d <= n");
  if ((n - d) % 2 == 0) return n * (n - d + 2) / 2;
  return (n + 1) * (n - d + 1) / 2;
}

bool is_msrd(const SrdCode& c) { return c.dim() == dim_bound(3, min_distance(c)); }

namespace {

Subspace whole_space(const Field& f) {
  std::array<Vec, 6> id{};
  for (std::size_t i = 0; i < 6; ++i) id[i][i] = 1;
  return pg::canonicalize(f, 5, id);
}

// Every point of PG(5,q) of rank below d.
std::vector<Vec> low_rank_points(const Field& f, int d) {
  std::vector<Vec> out;
  if (d <= 1) return out;
  if (d == 2) {
    std::array<Vec, 3> id{Vec{1, 0, 0, 0, 0, 0}, Vec{0, 1, 0, 0, 0, 0}, Vec{0, 0, 1, 0, 0, 0}};
    pg::for_each_point(f, pg::canonicalize(f, 2, id),
                       [&](const Vec& u) { out.push_back(veronese::veronese(f, {u[0], u[1], u[2]})); });
    return out;
  }
  pg::for_each_point(f, whole_space(f), [&](const Vec& y) {
    if (veronese::point_rank(f, y) < d) out.push_back(y);
  });
  return out;
}

// Points of the quotient PG(5,q)/W hit by the low-rank points, as a bitmap
// over packed normalized quotient coordinates.
class QuotientCover {
 public:
  QuotientCover(const Field& f, const Subspace& w, const std::vector<Vec>& low) : f_(f) {
    const auto dual = pg::annihilator(f, w);
    if (dual) dual_.assign(dual->rows().begin(), dual->rows().end());
    std::uint64_t size = 1;
    for (std::size_t i = 0; i < dual_.size(); ++i) size *= f.q();
    hit_.assign(size, 0);
    for (const Vec& v : low) mark(v);
  }

  std::uint64_t quotient_points() const {
    std::uint64_t n = 0, p = 1;
    for (std::size_t i = 0; i < dual_.size(); ++i, p *= f_.q()) n += p;
    return n;
  }
  std::uint64_t covered() const { return covered_; }
  bool complete() const { return covered_ == quotient_points(); }

  // Packed normalized image of v; 0 iff v lies in W.
  std::uint64_t image(const Vec& v) const {
    Vec img{};
    bool nonzero = false;
    for (std::size_t j = 0; j < dual_.size(); ++j) {
      img[j] = pg::dot(f_, dual_[j], v);
      nonzero = nonzero || img[j] != 0;
    }
    if (!nonzero) return 0;
    img = pg::normalized(f_, img);
    std::uint64_t code = 0;
    for (std::size_t j = 0; j < dual_.size(); ++j) code = code * f_.q() + img[j];
    return code;
  }
  bool is_hit(const Vec& v) const { return hit_[image(v)] != 0; }

 private:
  void mark(const Vec& v) {
    const std::uint64_t c = image(v);
    if (c != 0 && !hit_[c]) {
      hit_[c] = 1;
      ++covered_;
    }
  }

  const Field& f_;
  std::vector<Vec> dual_;
  std::vector<std::uint8_t> hit_;
  std::uint64_t covered_ = 0;
};

}  // namespace

CompletenessTester::CompletenessTester(const Field& f, int d) : f_(&f), d_(d), low_(low_rank_points(f, d)) {}

std::uint64_t CompletenessTester::covered(const Subspace& w) const { return QuotientCover(*f_, w, low_).covered(); }

std::uint64_t CompletenessTester::quotient_points(const Subspace& w) const {
  std::uint64_t n = 0, p = 1;
  for (int i = w.rank(); i < 6; ++i, p *= f_->q()) n += p;
  return n;
}

bool CompletenessTester::complete(const Subspace& w) const {
  if (w.rank() == 6) return true;
  if (d_ <= 1) return false;
  return QuotientCover(*f_, w, low_).complete();
}

bool is_complete(const Field& f, const Subspace& w, int d) { return CompletenessTester(f, d).complete(w); }

bool is_complete(const SrdCode& c) { return is_complete(c.field(), c.subspace(), min_distance(c)); }

Subspace extend_to_complete(const Field& f, const Subspace& w) {
  const int d = min_rank(f, w);
  if (d <= 1) return whole_space(f);
  const Subspace all = whole_space(f);
  const std::vector<Vec> low = low_rank_points(f, d);
  Subspace cur = w;
  while (cur.rank() < 6) {
    const QuotientCover cover(f, cur, low);
    if (cover.complete()) break;
    std::optional<Vec> next;
    pg::for_each_point(f, all, [&](const Vec& y) {
      if (!next && cover.image(y) != 0 && !cover.is_hit(y)) next = y;
    });
    if (!next) throw std::logic_error("incomplete code without an admissible extension point");
    cur = pg::join(f, cur, *next);
  }
  return cur;
}

SrdCode extend_to_complete(const SrdCode& c) {
  return SrdCode::from_subspace(c.field_ptr(), extend_to_complete(c.field(), c.subspace()));
}

ClassLabel classify(const Field& f, const Subspace& w) {
  const auto r = subspace_rank_distribution(f, w);
  const int d = r[0] > 0 ? 1 : r[1] > 0 ? 2 : 3;
  if (!is_complete(f, w, d)) return ClassLabel::NotComplete;
  if (d == 1) return ClassLabel::WholeSpace;
  const std::int64_t q = f.q();
  const bool even = f.even();
  if (d == 2 && w.rank() == 4) {
    if (r[2] == q * q * q - q) return even ? ClassLabel::Omega7 : ClassLabel::Omega8_2;
    if (r[2] == q * q * q - 2 * q) return even ? ClassLabel::Omega13 : ClassLabel::Omega14_2;
    if (r[2] == q * q * q) return even ? ClassLabel::Omega14 : ClassLabel::Omega15_2;
  }
  if (d == 2 && w.rank() == 3 && even) {
    if (r[2] == 0) return ClassLabel::SigmaN;
    if (r[2] == q * q) return ClassLabel::Sigma16;
    if (r[2] == q * q + q) return ClassLabel::Sigma18;
  }
  if (d == 3 && w.rank() == 3) {
    if (even) return ClassLabel::GFType;
    const auto n = atlas::rank_one_points_over_cubic(f, w);
    if (n == 3) return ClassLabel::GFType;
    if (n == 0) return ClassLabel::TFType;
  }
  throw std::logic_error("complete code with d=" + std::to_string(d) + ", dim " + std::to_string(w.rank()) +
                         ", rank distribution [" + std::to_string(r[0]) + "," + std::to_string(r[1]) + "," +
                         std::to_string(r[2]) + "] matches no class");
}

ClassLabel classify(const SrdCode& c) { return classify(c.field(), c.subspace()); }

ClassLabel classify_constant_rank3_by_orbit(const Field& f, const Subspace& w, std::uint64_t budget) {
  if (w.rank() != 3 || min_rank(f, w) != 3) throw std::invalid_argument("not a constant-rank-3 plane");
  if (inv::orbit_of(f, atlas::sigma_gf_plane(f), budget).count(w)) return ClassLabel::GFType;
  if (!f.even() && inv::orbit_of(f, atlas::sigma_tf_plane(f), budget).count(w)) return ClassLabel::TFType;
  throw std::logic_error("constant-rank-3 plane in neither known orbit");
}

nlohmann::json to_json(const SrdCode& c) {
  nlohmann::json basis = nlohmann::json::array();
  for (const auto& m : c.basis()) {
    nlohmann::json mj = nlohmann::json::array();
    for (const auto& row : m) mj.push_back({row[0], row[1], row[2]});
    basis.push_back(mj);
  }
  return {{"field", c.field().spec()}, {"basis", basis}};
}

SrdCode from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("field") || !j.contains("basis"))
    throw CodeFormatError("code JSON needs \"field\" and \"basis\"");
  if (!j["field"].is_string()) throw CodeFormatError("\"field\" must be a string");
  auto field = gf::parse_field_spec(j["field"].get<std::string>());
  const auto& b = j["basis"];
  if (!b.is_array()) throw CodeFormatError("\"basis\" must be an array");
  std::vector<Mat3> basis;
  for (std::size_t m = 0; m < b.size(); ++m) {
    const auto& mj = b[m];
    const std::string where = "matrix " + std::to_string(m);
    if (!mj.is_array() || mj.size() != 3) throw CodeFormatError(where + " is not 3x3");
    Mat3 mat{};
    for (std::size_t r = 0; r < 3; ++r) {
      if (!mj[r].is_array() || mj[r].size() != 3) throw CodeFormatError(where + " is not 3x3");
      for (std::size_t c = 0; c < 3; ++c) {
        const auto& e = mj[r][c];
        if (!e.is_number_integer()) throw CodeFormatError(where + " has a non-integer entry");
        const auto v = e.get<long long>();
        if (v < 0 || v >= static_cast<long long>(field->q()))
          throw CodeFormatError(where + " has entry " + std::to_string(v) + " outside GF(" +
                                std::to_string(field->q()) + ")");
        mat[r][c] = static_cast<elem_t>(v);
      }
    }
    basis.push_back(mat);
  }
  return SrdCode(std::move(field), std::move(basis));
}

SrdCode parse_code(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw CodeFormatError(std::string("malformed JSON: ") + e.what());
  }
  return from_json(j);
}

}  // namespace srd::codes
