#include "srd/gf.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <sstream>

namespace srd::gf {

namespace {

using Poly = std::vector<unsigned>;  // low to high

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo the monic polynomial m over GF(p).
Poly poly_mod(Poly a, const Poly& m, unsigned p) {
  trim(a);
  const std::size_t dm = m.size() - 1;
  while (a.size() >= m.size()) {
    const unsigned lead = a.back();
    const std::size_t shift = a.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i) {
      a[shift + i] = (a[shift + i] + p - (lead * m[i]) % p) % p;
    }
    trim(a);
  }
  return a;
}

Poly digits(unsigned value, unsigned p, unsigned h) {
  Poly d(h, 0);
  for (unsigned i = 0; i < h; ++i) {
    d[i] = value % p;
    value /= p;
  }
  return d;
}

unsigned undigits(const Poly& d, unsigned p) {
  unsigned v = 0;
  for (std::size_t i = d.size(); i-- > 0;) v = v * p + d[i];
  return v;
}

std::uint64_t checked_power(unsigned p, unsigned h, unsigned ceiling) {
  std::uint64_t q = 1;
  for (unsigned i = 0; i < h; ++i) {
    q *= p;
    if (q > ceiling) throw FieldError("field order " + std::to_string(p) + "^" + std::to_string(h) +
                                      " exceeds ceiling " + std::to_string(ceiling));
  }
  return q;
}

}  // namespace

bool is_prime(unsigned n) {
  if (n < 2) return false;
  for (unsigned d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

bool is_irreducible(unsigned p, const std::vector<unsigned>& coeffs) {
  Poly f = coeffs;
  trim(f);
  if (f.size() < 2) return false;
  const unsigned deg = static_cast<unsigned>(f.size() - 1);
  if (deg == 1) return true;
  // every monic divisor candidate of degree d <= deg/2
  for (unsigned d = 1; d <= deg / 2; ++d) {
    std::uint64_t count = 1;
    for (unsigned i = 0; i < d; ++i) count *= p;
    for (std::uint64_t low = 0; low < count; ++low) {
      Poly g = digits(static_cast<unsigned>(low), p, d);
      g.push_back(1);
      if (poly_mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

std::vector<unsigned> default_modulus(unsigned p, unsigned h) {
  if (h <= 1) return {};
  std::uint64_t count = 1;
  for (unsigned i = 0; i < h; ++i) count *= p;
  for (std::uint64_t low = 0; low < count; ++low) {
    Poly f = digits(static_cast<unsigned>(low), p, h);
    f.push_back(1);
    if (is_irreducible(p, f)) return f;
  }
  throw FieldError("no irreducible polynomial found");  // unreachable for prime p
}

elem_t Field::add_slow(elem_t a, elem_t b) const {
  unsigned r = 0, scale = 1;
  unsigned x = a, y = b;
  for (unsigned i = 0; i < h_; ++i) {
    r += ((x % p_ + y % p_) % p_) * scale;
    x /= p_;
    y /= p_;
    scale *= p_;
  }
  return static_cast<elem_t>(r);
}

elem_t Field::mul_slow(elem_t a, elem_t b) const {
  if (h_ == 1) return static_cast<elem_t>((static_cast<unsigned>(a) * b) % p_);
  const Poly da = digits(a, p_, h_), db = digits(b, p_, h_);
  Poly prod(2 * h_, 0);
  for (unsigned i = 0; i < h_; ++i)
    for (unsigned j = 0; j < h_; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
  Poly r = poly_mod(prod, modulus_, p_);
  r.resize(h_, 0);
  return static_cast<elem_t>(undigits(r, p_));
}

FieldPtr Field::create(unsigned p, unsigned h, std::vector<unsigned> modulus, unsigned ceiling) {
  if (!is_prime(p)) throw FieldError("characteristic " + std::to_string(p) + " is not prime");
  if (h < 1) throw FieldError("extension degree must be positive");
  const auto q = checked_power(p, h, ceiling);
  if (q > 65535) throw FieldError("field order exceeds 16-bit element encoding");

  std::shared_ptr<Field> f(new Field());
  f->p_ = p;
  f->h_ = h;
  f->q_ = static_cast<unsigned>(q);

  const auto dflt = default_modulus(p, h);
  if (modulus.empty()) {
    f->modulus_ = dflt;
  } else {
    if (h == 1) throw FieldError("prime fields take no modulus");
    if (modulus.size() != h + 1 || modulus.back() != 1)
      throw FieldError("modulus must be monic of degree " + std::to_string(h));
    for (unsigned c : modulus)
      if (c >= p) throw FieldError("modulus coefficient out of range");
    if (!is_irreducible(p, modulus)) throw FieldError("modulus is reducible");
    f->modulus_ = std::move(modulus);
  }
  f->default_modulus_ = f->modulus_ == dflt;

  const unsigned n = f->q_;
  f->neg_.resize(n);
  for (unsigned a = 0; a < n; ++a) {
    Poly d = digits(a, p, h);
    for (auto& c : d) c = (p - c) % p;
    f->neg_[a] = static_cast<elem_t>(undigits(d, p));
  }
  if (p != 2 && n <= 1024) {
    f->add_.resize(static_cast<std::size_t>(n) * n);
    for (unsigned a = 0; a < n; ++a)
      for (unsigned b = 0; b < n; ++b)
        f->add_[static_cast<std::size_t>(a) * n + b] = f->add_slow(static_cast<elem_t>(a), static_cast<elem_t>(b));
  }

  // smallest primitive element, found by order computation with slow arithmetic
  elem_t gen = 0;
  for (unsigned g = 1; g < n && gen == 0; ++g) {
    elem_t x = static_cast<elem_t>(g);
    unsigned order = 1;
    while (x != 1) {
      x = f->mul_slow(x, static_cast<elem_t>(g));
      ++order;
    }
    if (order == n - 1) gen = static_cast<elem_t>(g);
  }
  if (n == 2) gen = 1;
  if (gen == 0) throw FieldError("no primitive element; modulus not irreducible?");

  f->exp_.resize(2 * static_cast<std::size_t>(n - 1) + 1);
  f->log_.assign(n, 0);
  elem_t x = 1;
  for (unsigned k = 0; k < n - 1; ++k) {
    f->exp_[k] = x;
    f->log_[x] = k;
    x = f->mul_slow(x, gen);
  }
  for (std::size_t k = n - 1; k < f->exp_.size(); ++k) f->exp_[k] = f->exp_[k - (n - 1)];

  if (n <= 256) {
    f->mul_.resize(static_cast<std::size_t>(n) * n);
    for (unsigned a = 0; a < n; ++a)
      for (unsigned b = 0; b < n; ++b)
        f->mul_[static_cast<std::size_t>(a) * n + b] =
            (a == 0 || b == 0) ? 0 : f->exp_[f->log_[a] + f->log_[b]];
  }

  // multiplicative group order spot check
  const elem_t sample = static_cast<elem_t>(n > 2 ? n - 1 : 1);
  if (f->pow(sample, n - 1) != 1) throw FieldError("multiplicative group check failed");
  return f;
}

elem_t Field::inv(elem_t a) const {
  if (a == 0) throw FieldError("inverse of zero");
  return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

elem_t Field::pow(elem_t a, std::uint64_t e) const {
  if (e == 0) return 1;
  if (a == 0) return 0;
  return exp_[static_cast<std::size_t>((static_cast<std::uint64_t>(log_[a]) * (e % (q_ - 1))) % (q_ - 1))];
}

unsigned Field::log(elem_t a) const {
  if (a == 0) throw FieldError("log of zero");
  return log_[a];
}

elem_t Field::frobenius(elem_t a, unsigned k) const {
  std::uint64_t e = 1;
  for (unsigned i = 0; i < k % h_; ++i) e *= p_;
  return pow(a, e);
}

bool Field::is_square(elem_t a) const {
  if (even()) throw FieldError("is_square requires odd characteristic");
  if (a == 0) return true;
  return log_[a] % 2 == 0;
}

elem_t Field::trace2(elem_t a) const {
  if (!even()) throw FieldError("trace2 requires characteristic 2");
  elem_t t = 0, x = a;
  for (unsigned i = 0; i < h_; ++i) {
    t = add(t, x);
    x = mul(x, x);
  }
  return t;
}

elem_t Field::from_int(long long n) const {
  long long r = n % static_cast<long long>(p_);
  if (r < 0) r += p_;
  return static_cast<elem_t>(r);
}

std::string Field::spec() const {
  std::string s = std::to_string(p_) + "^" + std::to_string(h_);
  if (default_modulus_) return s;
  s += "/";
  for (unsigned i = h_; i-- > 0;) {
    if (p_ > 10 && i + 1 != h_) s += ",";
    s += std::to_string(modulus_[i]);
  }
  return s;
}

FieldPtr make_field(unsigned p, unsigned h, unsigned ceiling) {
  if (h < 1 || h > kMaxUserDegree) throw FieldError("extension degree " + std::to_string(h) + " out of range 1..6");
  return Field::create(p, h, {}, ceiling);
}

namespace {

unsigned parse_uint(std::string_view s, const char* what) {
  unsigned v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
    throw FieldError(std::string("bad ") + what + " in field spec: '" + std::string(s) + "'");
  return v;
}

}  // namespace

FieldPtr parse_field_spec(std::string_view text, unsigned ceiling) {
  const auto slash = text.find('/');
  const std::string_view head = text.substr(0, slash);
  unsigned p = 0, h = 0;
  const auto caret = head.find('^');
  if (caret == std::string_view::npos) {
    const unsigned q = parse_uint(head, "order");
    for (unsigned d = 2; d <= q; ++d) {
      if (q % d == 0) {
        p = d;
        break;
      }
    }
    if (p == 0) throw FieldError("field order must be a prime power");
    unsigned rest = q;
    while (rest % p == 0) {
      rest /= p;
      ++h;
    }
    if (rest != 1) throw FieldError("field order " + std::to_string(q) + " is not a prime power");
  } else {
    p = parse_uint(head.substr(0, caret), "characteristic");
    h = parse_uint(head.substr(caret + 1), "degree");
  }
  if (slash == std::string_view::npos) return make_field(p, h, ceiling);

  if (h < 1 || h > kMaxUserDegree) throw FieldError("extension degree out of range 1..6");
  const std::string_view tail = text.substr(slash + 1);
  std::vector<unsigned> high_to_low;
  if (tail.find(',') != std::string_view::npos) {
    std::size_t start = 0;
    while (start <= tail.size()) {
      const auto comma = tail.find(',', start);
      const auto part = tail.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
      high_to_low.push_back(parse_uint(part, "coefficient"));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
  } else {
    for (char c : tail) {
      if (c < '0' || c > '9') throw FieldError("bad coefficient digit in field spec");
      high_to_low.push_back(static_cast<unsigned>(c - '0'));
    }
  }
  if (high_to_low.size() != h) throw FieldError("expected " + std::to_string(h) + " modulus coefficients");
  std::vector<unsigned> modulus(high_to_low.rbegin(), high_to_low.rend());
  modulus.push_back(1);
  return Field::create(p, h, std::move(modulus), ceiling);
}

FieldElement::FieldElement(FieldPtr field, elem_t value) : field_(std::move(field)), value_(value) {
  if (!field_) throw FieldError("null field");
  if (value_ >= field_->q()) throw FieldError("element encoding out of range");
}

void FieldElement::check_same(const FieldElement& o) const {
  if (field_ != o.field_) throw FieldError("arithmetic between elements of distinct fields");
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
  check_same(o);
  return {field_, field_->add(value_, o.value_)};
}
FieldElement FieldElement::operator-(const FieldElement& o) const {
  check_same(o);
  return {field_, field_->sub(value_, o.value_)};
}
FieldElement FieldElement::operator*(const FieldElement& o) const {
  check_same(o);
  return {field_, field_->mul(value_, o.value_)};
}
FieldElement FieldElement::operator/(const FieldElement& o) const {
  check_same(o);
  return {field_, field_->div(value_, o.value_)};
}
FieldElement FieldElement::operator-() const { return {field_, field_->neg(value_)}; }
FieldElement FieldElement::inverse() const { return {field_, field_->inv(value_)}; }
bool FieldElement::operator==(const FieldElement& o) const {
  check_same(o);
  return value_ == o.value_;
}

CubicExtension cubic_extension(const FieldPtr& field, unsigned ceiling) {
  CubicExtension ext;
  ext.base = field;
  ext.big = Field::create(field->p(), 3 * field->h(), {}, ceiling);
  const Field& big = *ext.big;
  const unsigned p = field->p(), h = field->h();

  elem_t root = 0;
  if (h == 1) {
    root = 0;  // unused: constants embed as themselves
  } else {
    const auto& m = field->modulus();
    bool found = false;
    for (unsigned r = 0; r < big.q() && !found; ++r) {
      elem_t acc = 0;
      for (std::size_t i = m.size(); i-- > 0;)
        acc = big.add(big.mul(acc, static_cast<elem_t>(r)), big.from_int(m[i]));
      if (acc == 0) {
        root = static_cast<elem_t>(r);
        found = true;
      }
    }
    if (!found) throw FieldError("base modulus has no root in the cubic extension");
  }

  ext.embedding.resize(field->q());
  for (unsigned a = 0; a < field->q(); ++a) {
    if (h == 1) {
      ext.embedding[a] = static_cast<elem_t>(a);
      continue;
    }
    const Poly d = digits(a, p, h);
    elem_t acc = 0, power = 1;
    for (unsigned i = 0; i < h; ++i) {
      acc = big.add(acc, big.mul(big.from_int(d[i]), power));
      power = big.mul(power, root);
    }
    ext.embedding[a] = acc;
  }
  return ext;
}

}  // namespace srd::gf
