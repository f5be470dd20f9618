#pragma once

#include <algorithm>
#include <array>
#include <vector>

#include "oracle/oracle.hpp"
#include "srd/gf.hpp"
#include "srd/pg.hpp"

namespace srd::test {

inline oracle::Field oracle_field(const gf::Field& f) { return oracle::Field(f.p(), f.h(), f.modulus()); }

inline std::vector<oracle::V6> rows_of(const pg::Subspace& w) {
  std::vector<oracle::V6> out;
  for (const pg::Vec& v : w.rows()) {
    oracle::V6 r{};
    for (int i = 0; i < 6; ++i) r[i] = v[static_cast<std::size_t>(i)];
    out.push_back(r);
  }
  return out;
}

inline pg::Vec vec(std::initializer_list<unsigned> xs) {
  pg::Vec v{};
  std::size_t i = 0;
  for (unsigned x : xs) v[i++] = static_cast<gf::elem_t>(x);
  return v;
}

inline oracle::V6 v6(const pg::Vec& v) {
  oracle::V6 r{};
  for (int i = 0; i < 6; ++i) r[i] = v[static_cast<std::size_t>(i)];
  return r;
}

/// Sorted packed points of a library subspace, in the oracle's packing.
inline std::vector<std::uint32_t> points_of(const gf::Field& f, const pg::Subspace& w) {
  const auto of = oracle_field(f);
  std::vector<std::uint32_t> out;
  pg::for_each_point(f, w, [&](const pg::Vec& v) { out.push_back(oracle::pack(of, v6(v), w.coords())); });
  std::sort(out.begin(), out.end());
  return out;
}

template <class A, class B>
bool same(const A& a, const B& b) {
  return std::equal(a.begin(), a.end(), b.begin(), b.end(),
                    [](auto x, auto y) { return static_cast<long long>(x) == static_cast<long long>(y); });
}

}  // namespace srd::test
