#pragma once

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace srd::gf {

/// Residue-polynomial encoding of a field element: the coefficient vector
/// (c_0, ..., c_{h-1}) read as the base-p integer sum c_i p^i.
using elem_t = std::uint16_t;

class FieldError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr unsigned kDefaultCeiling = 4096;
inline constexpr unsigned kMaxUserDegree = 6;

bool is_prime(unsigned n);

/// True iff the monic polynomial with coefficients `coeffs` (low to high,
/// leading 1 included) has no factor of degree 1..deg/2 over GF(p).
bool is_irreducible(unsigned p, const std::vector<unsigned>& coeffs);

/// Monic irreducible polynomial of degree h over GF(p) whose lower
/// coefficients, read as sum c_i p^i, are minimal.
std::vector<unsigned> default_modulus(unsigned p, unsigned h);

class Field;
using FieldPtr = std::shared_ptr<const Field>;

/// GF(p^h) with precomputed exp/log tables. Immutable after construction.
class Field {
 public:
  /// `modulus` holds the monic modulus low to high (size h+1); empty selects
  /// default_modulus. Degrees above kMaxUserDegree are allowed here so that
  /// cubic extensions can be built; make_field enforces the user limit.
  static FieldPtr create(unsigned p, unsigned h, std::vector<unsigned> modulus = {},
                         unsigned ceiling = kDefaultCeiling);

  unsigned p() const { return p_; }
  unsigned h() const { return h_; }
  unsigned q() const { return q_; }
  bool even() const { return p_ == 2; }
  const std::vector<unsigned>& modulus() const { return modulus_; }
  bool has_default_modulus() const { return default_modulus_; }

  elem_t zero() const { return 0; }
  elem_t one() const { return 1; }
  elem_t primitive() const { return exp_[1]; }

  elem_t add(elem_t a, elem_t b) const {
    if (p_ == 2) return static_cast<elem_t>(a ^ b);
    if (!add_.empty()) return add_[static_cast<std::size_t>(a) * q_ + b];
    return add_slow(a, b);
  }
  elem_t neg(elem_t a) const { return neg_[a]; }
  elem_t sub(elem_t a, elem_t b) const { return add(a, neg_[b]); }
  elem_t mul(elem_t a, elem_t b) const {
    if (!mul_.empty()) return mul_[static_cast<std::size_t>(a) * q_ + b];
    if (a == 0 || b == 0) return 0;
    return exp_[log_[a] + log_[b]];
  }
  elem_t inv(elem_t a) const;
  elem_t div(elem_t a, elem_t b) const { return mul(a, inv(b)); }
  elem_t pow(elem_t a, std::uint64_t e) const;
  /// Discrete log to the base primitive(); a must be nonzero.
  unsigned log(elem_t a) const;
  elem_t exp(unsigned k) const { return exp_[k % (q_ - 1)]; }

  /// a^(p^k).
  elem_t frobenius(elem_t a, unsigned k = 1) const;
  /// True iff a is a square (0 included). Requires q odd.
  bool is_square(elem_t a) const;
  /// Absolute trace to GF(2): a + a^2 + ... + a^(2^(h-1)). Requires q even.
  elem_t trace2(elem_t a) const;
  /// Image of an integer in the prime subfield.
  elem_t from_int(long long n) const;

  /// "p^h" for the default modulus, "p^h/c_{h-1}...c_0" otherwise.
  std::string spec() const;

 private:
  Field() = default;
  elem_t add_slow(elem_t a, elem_t b) const;
  elem_t mul_slow(elem_t a, elem_t b) const;

  unsigned p_ = 0, h_ = 0, q_ = 0;
  std::vector<unsigned> modulus_;
  bool default_modulus_ = true;
  std::vector<elem_t> exp_;
  std::vector<unsigned> log_;
  std::vector<elem_t> add_;
  std::vector<elem_t> mul_;
  std::vector<elem_t> neg_;
};

/// Field with the default modulus; 1 <= h <= 6, p^h <= ceiling.
FieldPtr make_field(unsigned p, unsigned h, unsigned ceiling = kDefaultCeiling);

/// Accepts "q", "p^h", or "p^h/c_{h-1}...c_0" (digits, or comma separated
/// when p > 10) with the leading 1 omitted.
FieldPtr parse_field_spec(std::string_view text, unsigned ceiling = kDefaultCeiling);

/// A field element bound to its field. Mixing fields throws.
class FieldElement {
 public:
  FieldElement(FieldPtr field, elem_t value);

  const FieldPtr& field() const { return field_; }
  elem_t value() const { return value_; }

  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement operator/(const FieldElement& o) const;
  FieldElement operator-() const;
  FieldElement inverse() const;
  bool operator==(const FieldElement& o) const;

 private:
  void check_same(const FieldElement& o) const;
  FieldPtr field_;
  elem_t value_;
};

/// GF(q^3) over GF(q) with the subfield embedding and x -> x^q.
struct CubicExtension {
  FieldPtr base;
  FieldPtr big;
  std::vector<elem_t> embedding;  // indexed by base element

  elem_t embed(elem_t a) const { return embedding.at(a); }
  elem_t frobenius(elem_t x) const { return big->pow(x, base->q()); }
};

CubicExtension cubic_extension(const FieldPtr& field, unsigned ceiling = kDefaultCeiling);

}  // namespace srd::gf
