#include "srd/atlas.hpp"

#include <stdexcept>

namespace srd::atlas {

const char* to_string(Condition c) {
  switch (c) {
    case Condition::NonsquareDelta: return "delta nonsquare";
    case Condition::PencilUV: return "v*l^2+u*v*l-1 has no root";
    case Condition::PencilUVSquare: return "v*l^2+u*v*l-1 has no root, -v square";
    case Condition::PencilUVNonsquare: return "v*l^2+u*v*l-1 has no root, -v nonsquare";
    case Condition::TraceInverse: return "Tr(gamma^-1)=1";
    case Condition::Trace: return "Tr(gamma)=1";
    case Condition::Cubic: return "l^3+gamma*l^2-beta*l+alpha has no root";
    case Condition::CubicBC: return "b*l^3+c*l+1 irreducible";
  }
  return "?";
}

Parity parity_of(const Field& f) { return f.even() ? Parity::Even : Parity::Odd; }

namespace {

bool pencil_ok(const Field& f, elem_t u, elem_t v) {
  if (v == 0) return false;
  const elem_t uv = f.mul(u, v);
  for (unsigned l = 0; l < f.q(); ++l) {
    const auto x = static_cast<elem_t>(l);
    if (f.sub(f.add(f.mul(v, f.mul(x, x)), f.mul(uv, x)), 1) == 0) return false;
  }
  return true;
}

bool cubic_ok(const Field& f, elem_t alpha, elem_t beta, elem_t gamma) {
  for (unsigned l = 0; l < f.q(); ++l) {
    const auto x = static_cast<elem_t>(l);
    const elem_t x2 = f.mul(x, x);
    elem_t s = f.mul(x2, x);
    s = f.add(s, f.mul(gamma, x2));
    s = f.sub(s, f.mul(beta, x));
    s = f.add(s, alpha);
    if (s == 0) return false;
  }
  return true;
}

bool cubic_bc_ok(const Field& f, elem_t b, elem_t c) {
  if (b == 0) return false;
  for (unsigned l = 0; l < f.q(); ++l) {
    const auto x = static_cast<elem_t>(l);
    if (f.add(f.add(f.mul(b, f.mul(x, f.mul(x, x))), f.mul(c, x)), 1) == 0) return false;
  }
  return true;
}

void require_even(const Field& f, Condition c) {
  if (!f.even()) throw std::invalid_argument(std::string("condition '") + to_string(c) + "' needs q even");
}

}  // namespace

std::vector<Assignment> all_assignments(const Field& f, Condition c) {
  const unsigned q = f.q();
  std::vector<Assignment> out;
  switch (c) {
    case Condition::NonsquareDelta:
      if (f.even()) throw std::invalid_argument("condition 'delta nonsquare' needs q odd");
      for (unsigned d = 0; d < q; ++d)
        if (!f.is_square(static_cast<elem_t>(d))) out.push_back({{"delta", static_cast<elem_t>(d)}});
      break;
    case Condition::PencilUV:
    case Condition::PencilUVSquare:
    case Condition::PencilUVNonsquare:
      if (c != Condition::PencilUV && f.even())
        throw std::invalid_argument(std::string("condition '") + to_string(c) + "' needs q odd");
      for (unsigned u = 0; u < q; ++u)
        for (unsigned v = 1; v < q; ++v) {
          const auto uu = static_cast<elem_t>(u);
          const auto vv = static_cast<elem_t>(v);
          if (!pencil_ok(f, uu, vv)) continue;
          if (c == Condition::PencilUVSquare && !f.is_square(f.neg(vv))) continue;
          if (c == Condition::PencilUVNonsquare && f.is_square(f.neg(vv))) continue;
          out.push_back({{"u", uu}, {"v", vv}});
        }
      break;
    case Condition::TraceInverse:
      require_even(f, c);
      for (unsigned g = 1; g < q; ++g)
        if (f.trace2(f.inv(static_cast<elem_t>(g))) == 1) out.push_back({{"gamma", static_cast<elem_t>(g)}});
      break;
    case Condition::Trace:
      require_even(f, c);
      for (unsigned g = 1; g < q; ++g)
        if (f.trace2(static_cast<elem_t>(g)) == 1) out.push_back({{"gamma", static_cast<elem_t>(g)}});
      break;
    case Condition::Cubic:
      for (unsigned a = 0; a < q; ++a)
        for (unsigned b = 0; b < q; ++b)
          for (unsigned g = 0; g < q; ++g)
            if (cubic_ok(f, static_cast<elem_t>(a), static_cast<elem_t>(b), static_cast<elem_t>(g)))
              out.push_back({{"alpha", static_cast<elem_t>(a)},
                             {"beta", static_cast<elem_t>(b)},
                             {"gamma", static_cast<elem_t>(g)}});
      break;
    case Condition::CubicBC:
      require_even(f, c);
      for (unsigned b = 0; b < q; ++b)
        for (unsigned cc = 0; cc < q; ++cc)
          if (cubic_bc_ok(f, static_cast<elem_t>(b), static_cast<elem_t>(cc)))
            out.push_back({{"b", static_cast<elem_t>(b)}, {"c", static_cast<elem_t>(cc)}});
      break;
  }
  return out;
}

Assignment find_params(const Field& f, Condition c) {
  auto all = all_assignments(f, c);
  if (all.empty()) throw std::logic_error(std::string("no parameters satisfy '") + to_string(c) + "' over GF(" +
                                          std::to_string(f.q()) + ")");
  return all.front();
}

void Params::apply(const Assignment& a) {
  // "gamma" always lands in the cubic slot; trace and pencil conditions are
  // routed by default_params.
  for (const auto& [name, value] : a) {
    if (name == "u0") u0 = value;
    else if (name == "v0") v0 = value;
    else if (name == "u1") u1 = value;
    else if (name == "v1") v1 = value;
    else if (name == "u2") u2 = value;
    else if (name == "v2") v2 = value;
    else if (name == "delta") delta = value;
    else if (name == "alpha") alpha = value;
    else if (name == "beta") beta = value;
    else if (name == "gamma") gamma = value;
    else if (name == "b") b = value;
    else if (name == "c") c = value;
    else throw std::invalid_argument("unknown parameter " + name);
  }
}

void apply_condition(Params& p, Condition c, const Assignment& a) {
  if (c == Condition::PencilUV) {
    p.u0 = a.at(0).second;
    p.v0 = a.at(1).second;
    // Over even q the second slot carries no extra condition.
    p.u1 = p.u0;
    p.v1 = p.v0;
  } else if (c == Condition::PencilUVSquare) {
    p.u1 = a.at(0).second;
    p.v1 = a.at(1).second;
  } else if (c == Condition::PencilUVNonsquare) {
    p.u2 = a.at(0).second;
    p.v2 = a.at(1).second;
  } else if (c == Condition::TraceInverse) {
    p.gamma_inv = a.at(0).second;
  } else if (c == Condition::Trace) {
    p.gamma_tr = a.at(0).second;
  } else {
    p.apply(a);
  }
}

Params default_params(const Field& f) {
  Params p;
  std::vector<Condition> conds{Condition::PencilUV, Condition::Cubic};
  if (f.even()) {
    conds.insert(conds.end(), {Condition::TraceInverse, Condition::Trace, Condition::CubicBC});
  } else {
    conds.insert(conds.end(), {Condition::PencilUVSquare, Condition::PencilUVNonsquare, Condition::NonsquareDelta});
  }
  for (Condition c : conds) apply_condition(p, c, find_params(f, c));
  return p;
}

Lin operator+(const Lin& a, const Lin& b) {
  const Field* f = a.f ? a.f : b.f;
  Lin r{f, {}};
  for (std::size_t i = 0; i < 4; ++i) r.c[i] = f->add(a.c[i], b.c[i]);
  return r;
}

Lin operator-(const Lin& a) {
  Lin r{a.f, {}};
  for (std::size_t i = 0; i < 4; ++i) r.c[i] = a.f->neg(a.c[i]);
  return r;
}

Lin operator-(const Lin& a, const Lin& b) { return a + (-b); }

Lin operator*(elem_t k, const Lin& a) {
  Lin r{a.f, {}};
  for (std::size_t i = 0; i < 4; ++i) r.c[i] = a.f->mul(k, a.c[i]);
  return r;
}

Subspace subspace_of(const Field& f, const SymTemplate& t) {
  std::array<Vec, 4> g{};
  for (int v = 0; v < t.vars; ++v)
    for (std::size_t i = 0; i < 6; ++i) g[static_cast<std::size_t>(v)][i] = t.entries[i].c[static_cast<std::size_t>(v)];
  auto s = pg::try_canonicalize(f, 5, std::span<const Vec>(g.data(), static_cast<std::size_t>(t.vars)));
  if (!s || s->rank() != t.vars) throw std::logic_error("representative basis is linearly dependent");
  return *s;
}

namespace {

struct Vars {
  Lin x, y, z, t, o;
};

Vars vars(const Field& f) {
  return Vars{Lin{&f, {1, 0, 0, 0}}, Lin{&f, {0, 1, 0, 0}}, Lin{&f, {0, 0, 1, 0}}, Lin{&f, {0, 0, 0, 1}},
              Lin{&f, {0, 0, 0, 0}}};
}

// Entries of [[a00,a01,a02],[a01,a11,a12],[a02,a12,a22]].
SymTemplate sym(int n, Lin a00, Lin a01, Lin a02, Lin a11, Lin a12, Lin a22) {
  return SymTemplate{n, {a00, a01, a02, a11, a12, a22}};
}

using Q = std::int64_t;

RepSpec line_even(std::string id, std::vector<Condition> conds,
                  std::function<SymTemplate(const Field&, const Params&)> build, std::function<Dist(Q)> od0,
                  std::function<Dist(Q)> od4) {
  return RepSpec{std::move(id), "lines", Parity::Even, 1, std::move(conds), std::move(build), std::move(od0),
                 std::move(od4), {}};
}

RepSpec solid_even(std::string id, std::vector<Condition> conds,
                   std::function<SymTemplate(const Field&, const Params&)> build, std::function<Dist(Q)> od0,
                   std::function<Dist(Q)> od4) {
  return RepSpec{std::move(id), "solids", Parity::Even, 3, std::move(conds), std::move(build), std::move(od0),
                 std::move(od4), {}};
}

// A solid/line pair for q odd: OD0(S) = OD4(L) = a and OD4(S) = OD0(L) = b.
void pair_odd(std::vector<RepSpec>& out, const std::string& suffix, std::vector<Condition> conds,
              std::function<SymTemplate(const Field&, const Params&)> solid,
              std::function<SymTemplate(const Field&, const Params&)> line, std::function<Dist(Q)> a,
              std::function<Dist(Q)> b) {
  out.push_back(RepSpec{"Omega_" + suffix, "pairs", Parity::Odd, 3, conds, std::move(solid), a, b, {}});
  out.push_back(RepSpec{"o_" + suffix, "pairs", Parity::Odd, 1, conds, std::move(line), b, a, {}});
}

elem_t quarter(const Field& f, elem_t a) { return f.div(a, f.from_int(4)); }

// [[x, b x, y], [b x, -v x, z], [y, z, t]]
SymTemplate omega10(const Field& f, elem_t b, elem_t v0) {
  auto v = vars(f);
  return sym(4, v.x, b * v.x, v.y, -(v0 * v.x), v.z, v.t);
}

// [[x,y,z],[y,-v x,t],[z,t,-y+u v x]]
SymTemplate omega15(const Field& f, elem_t u, elem_t v) {
  auto w = vars(f);
  return sym(4, w.x, w.y, w.z, -(v * w.x), w.t, f.mul(u, v) * w.x - w.y);
}

// [[a g z - a t,x,y],[x,z,t],[y,t,-x-b z]]
SymTemplate omega17(const Field& f, elem_t alpha, elem_t beta, elem_t gamma) {
  auto w = vars(f);
  return sym(4, f.mul(alpha, gamma) * w.z - alpha * w.t, w.x, w.y, w.z, w.t, -w.x - beta * w.z);
}

void set_printed(std::vector<RepSpec>& specs, const std::string& id,
                 std::function<SymTemplate(const Field&, const Params&)> printed) {
  for (auto& s : specs)
    if (s.id == id && s.parity == Parity::Odd) s.printed = std::move(printed);
}

std::vector<RepSpec> build_specs() {
  std::vector<RepSpec> s;
  using C = Condition;

  // Lines, q even.
  s.push_back(line_even(
      "o_5", {},
      [](const Field& f, const Params&) {
        auto v = vars(f);
        return sym(2, v.x, v.o, v.o, v.y, v.o, v.o);
      },
      [](Q q) { return Dist{2, 0, q - 1, 0}; }, [](Q q) { return Dist{1, 2 * q * q + q, 0, q * q * q - q * q}; }));
  s.push_back(line_even(
      "o_6", {},
      [](const Field& f, const Params&) {
        auto v = vars(f);
        return sym(2, v.x, v.y, v.o, v.o, v.o, v.o);
      },
      [](Q q) { return Dist{1, 1, q - 1, 0}; },
      [](Q q) { return Dist{q + 1, (3 * q * q + q) / 2, (q * q - q) / 2, q * q * q - q * q}; }));
  s.push_back(line_even(
      "o_8,1", {},
      [](const Field& f, const Params&) {
        auto v = vars(f);
        return sym(2, v.x, v.o, v.o, v.y, v.o, -v.y);
      },
      [](Q q) { return Dist{1, 0, 1, q - 1}; },
      [](Q q) { return Dist{1, q * q + 3 * q / 2, q / 2, q * q * q - q}; }));
  s.push_back(line_even(
      "o_8,3", {},
      [](const Field& f, const Params&) {
        auto v = vars(f);
        return sym(2, v.x, v.o, v.o, v.o, v.y, v.o);
      },
      [](Q q) { return Dist{1, 1, 0, q - 1}; }, [](Q q) { return Dist{q + 1, q * q + q, 0, q * q * q - q}; }));
  s.push_back(line_even(
      "o_9", {},
      [](const Field& f, const Params&) {
        auto v = vars(f);
        return sym(2, v.x, v.o, v.y, v.y, v.o, v.o);
      },
      [](Q q) { return Dist{1, 0, 0, q}; }, [](Q q) { return Dist{1, q * q + q, 0, q * q * q}; }));
  s.push_back(line_even(
      "o_10", {C::PencilUV},
      [](const Field& f, const Params& p) {
        auto v = vars(f);
        return sym(2, p.v0 * v.x, v.y, v.o, v.x + p.u0 * v.y, v.o, v.o);
      },
      [](Q q) { return Dist{0, 0, q + 1, 0}; }, [](Q q) { return Dist{1, q * q + q, q * q, q * q * q - q * q}; }));
  s.push_back(line_even(
      "o_12,1", {},
      [](const Field& f, const Params&) {
        auto v = vars(f);
        return sym(2, v.o, v.x, v.o, v.o, v.y, v.o);
      },
      [](Q q) { return Dist{0, q + 1, 0, 0}; },
      [](Q q) { return Dist{q * q + q + 1, (q * q + q) / 2, (q * q - q) / 2, q * q * q - q * q}; }));
  s.push_back(line_even(
      "o_12,3", {},
      [](const Field& f, const Params&) {
        auto v = vars(f);
        return sym(2, v.o, v.x, v.o, v.x + v.y, v.y, v.o);
      },
      [](Q q) { return Dist{0, 1, q, 0}; },
      [](Q q) { return Dist{q + 1, q * q + q / 2, q * q - q / 2, q * q * q - q * q}; }));
  s.push_back(line_even(
      "o_13,1", {},
      [](const Field& f, const Params&) {
        auto v = vars(f);
        return sym(2, v.o, v.x, v.o, v.y, v.o, -v.y);
      },
      [](Q q) { return Dist{0, 1, 1, q - 1}; },
      [](Q q) { return Dist{q + 1, q * q / 2 + q, q * q / 2, q * q * q - q}; }));
  s.push_back(line_even(
      "o_13,3", {},
      [](const Field& f, const Params&) {
        auto v = vars(f);
        return sym(2, v.o, v.x, v.o, v.x + v.y, v.o, v.y);
      },
      [](Q q) { return Dist{0, 0, 2, q - 1}; },
      [](Q q) { return Dist{1, (q * q + 3 * q) / 2, (q * q + q) / 2, q * q * q - q}; }));
  s.push_back(line_even(
      "o_14,1", {},
      [](const Field& f, const Params&) {
        auto v = vars(f);
        return sym(2, v.x, v.o, v.o, -(v.x + v.y), v.o, v.y);
      },
      [](Q q) { return Dist{0, 0, 3, q - 2}; },
      [](Q q) { return Dist{1, q * q / 2 + 2 * q, q * q / 2 + q, q * q * q - 2 * q}; }));
  s.push_back(line_even(
      "o_15,1", {C::PencilUV},
      [](const Field& f, const Params& p) {
        auto v = vars(f);
        return sym(2, p.v1 * v.y, v.x, v.o, p.u1 * v.x + v.y, v.o, v.x);
      },
      [](Q q) { return Dist{0, 0, 1, q}; }, [](Q q) { return Dist{1, q * q / 2 + q, q * q / 2, q * q * q}; }));
  s.push_back(line_even(
      "o_16,1", {},
      [](const Field& f, const Params&) {
        auto v = vars(f);
        return sym(2, v.o, v.o, v.x, v.x, v.y, v.o);
      },
      [](Q q) { return Dist{0, 1, 0, q}; },
      [](Q q) { return Dist{q + 1, (q * q + q) / 2, (q * q - q) / 2, q * q * q}; }));
  s.push_back(line_even(
      "o_16,3", {},
      [](const Field& f, const Params&) {
        auto v = vars(f);
        return sym(2, v.o, v.o, v.x, v.x, v.y, v.y);
      },
      [](Q q) { return Dist{0, 0, 1, q}; }, [](Q q) { return Dist{1, q * q / 2 + q, q * q / 2, q * q * q}; }));
  s.push_back(line_even(
      "o_17", {C::Cubic},
      [](const Field& f, const Params& p) {
        auto v = vars(f);
        return sym(2, f.inv(p.alpha) * v.x, v.y, v.o, p.beta * v.y - p.gamma * v.x, v.x, v.y);
      },
      [](Q q) { return Dist{0, 0, 0, q + 1}; },
      [](Q q) { return Dist{1, (q * q + q) / 2, (q * q - q) / 2, q * q * q + q}; }));

  // Solids, q even.
  s.push_back(solid_even(
      "Omega_1", {},
      [](const Field& f, const Params&) {
        auto v = vars(f);
        return sym(4, v.x, v.y, v.z, v.t, v.o, v.t);
      },
      [](Q q) { return Dist{1, q + 1, 2 * q * q - 1, q * q * q - q * q}; }, [](Q q) { return Dist{1, q / 2, q / 2, 0}; }));
  s.push_back(solid_even(
      "Omega_2", {},
      [](const Field& f, const Params&) {
        auto v = vars(f);
        return sym(4, v.x, v.y, v.z, v.t, v.o, v.o);
      },
      [](Q q) { return Dist{q + 1, q + 1, 2 * q * q - q - 1, q * q * q - q * q}; },
      [](Q q) { return Dist{1, q, 0, 0}; }));
  s.push_back(solid_even(
      "Omega_3", {},
      [](const Field& f, const Params&) {
        auto v = vars(f);
        return sym(4, v.x, v.y, v.z, v.o, v.t, v.o);
      },
      [](Q q) { return Dist{1, q * q + q + 1, q * q - 1, q * q * q - q * q}; },
      [](Q q) { return Dist{q + 1, 0, 0, 0}; }));
  s.push_back(solid_even(
      "Omega_4", {},
      [](const Field& f, const Params&) {
        auto v = vars(f);
        return sym(4, v.x, v.o, v.y, v.z, v.o, v.t);
      },
      [](Q q) { return Dist{q + 2, 1, 2 * q * q - 2, q * q * q - q * q}; }, [](Q q) { return Dist{0, q + 1, 0, 0}; }));
  s.push_back(solid_even(
      "Omega_5", {},
      [](const Field& f, const Params&) {
        auto v = vars(f);
        return sym(4, v.o, v.x, v.y, v.z, v.t, v.x);
      },
      [](Q q) { return Dist{1, q + 1, q * q - 1, q * q * q}; }, [](Q q) { return Dist{1, 0, 0, q}; }));
  s.push_back(solid_even(
      "Omega_6", {},
      [](const Field& f, const Params&) {
        auto v = vars(f);
        return sym(4, v.x, v.o, v.y, v.z, v.t, v.o);
      },
      [](Q q) { return Dist{2, q + 1, q * q + q - 2, q * q * q - q}; }, [](Q q) { return Dist{1, 1, 0, q - 1}; }));
  s.push_back(solid_even(
      "Omega_7", {C::TraceInverse},
      [](const Field& f, const Params& p) {
        auto v = vars(f);
        return sym(4, v.x, v.y, v.z, v.x + p.gamma_inv * v.y, v.t, v.y);
      },
      [](Q q) { return Dist{0, q + 1, q * q + q, q * q * q - q}; }, [](Q q) { return Dist{1, 0, 1, q - 1}; }));
  s.push_back(solid_even(
      "Omega_8", {},
      [](const Field& f, const Params&) {
        auto v = vars(f);
        return sym(4, v.x, v.y, v.z, v.t, v.z, v.y);
      },
      [](Q q) { return Dist{3, 1, q * q + 2 * q - 3, q * q * q - q}; }, [](Q q) { return Dist{0, 2, 0, q - 1}; }));
  s.push_back(solid_even(
      "Omega_9", {},
      [](const Field& f, const Params&) {
        auto v = vars(f);
        return sym(4, v.x, v.x, v.y, v.z, v.t, v.t);
      },
      [](Q q) { return Dist{4, 1, q * q + 3 * q - 4, q * q * q - 2 * q}; }, [](Q q) { return Dist{0, 3, 0, q - 2}; }));
  s.push_back(solid_even(
      "Omega_10", {C::TraceInverse},
      [](const Field& f, const Params& p) {
        auto v = vars(f);
        return sym(4, v.x, v.y, v.z, v.y + p.gamma_inv * v.t, v.t, v.y);
      },
      [](Q q) { return Dist{1, 1, q * q + 2 * q - 1, q * q * q - q}; }, [](Q q) { return Dist{0, 1, 1, q - 1}; }));
  s.push_back(solid_even(
      "Omega_11", {},
      [](const Field& f, const Params&) {
        auto v = vars(f);
        return sym(4, v.x, v.y, v.z, v.t, v.o, v.y);
      },
      [](Q q) { return Dist{2, 1, q * q + q - 2, q * q * q}; }, [](Q q) { return Dist{0, 1, 0, q}; }));
  s.push_back(solid_even(
      "Omega_12", {C::TraceInverse},
      [](const Field& f, const Params& p) {
        auto v = vars(f);
        return sym(4, v.x, v.y, v.z, v.t, p.gamma_inv * v.y + v.z, v.y);
      },
      [](Q q) { return Dist{2, 1, q * q + q - 2, q * q * q}; }, [](Q q) { return Dist{0, 1, 0, q}; }));
  s.push_back(solid_even(
      "Omega_13", {C::Trace},
      [](const Field& f, const Params& p) {
        auto v = vars(f);
        return sym(4, v.x, v.y, v.z, p.gamma_tr * v.x + v.y, v.t, p.gamma_tr * v.x + v.z);
      },
      [](Q q) { return Dist{0, 1, q * q + 3 * q, q * q * q - 2 * q}; }, [](Q q) { return Dist{0, 1, 2, q - 2}; }));
  s.push_back(solid_even(
      "Omega_14", {C::Trace},
      [](const Field& f, const Params& p) {
        auto v = vars(f);
        const elem_t g = p.gamma_tr;
        return sym(4, v.x, v.y, g * v.x + v.y + g * v.t, g * v.x + v.y, v.z, v.t);
      },
      [](Q q) { return Dist{0, 1, q * q + q, q * q * q}; }, [](Q q) { return Dist{0, 0, 1, q}; }));
  s.push_back(solid_even(
      "Omega_15", {C::CubicBC},
      [](const Field& f, const Params& p) {
        auto v = vars(f);
        return sym(4, v.x, v.y, p.b * v.z + p.c * v.y, v.z, v.t, v.y);
      },
      [](Q q) { return Dist{1, 1, q * q - 1, q * q * q + q}; }, [](Q q) { return Dist{0, 0, 0, q + 1}; }));

  // Solid/line pairs, q odd.
  pair_odd(
      s, "5", {},
      [](const Field& f, const Params&) {
        auto v = vars(f);
        return sym(4, v.o, v.x, v.y, v.o, v.z, v.t);
      },
      [](const Field& f, const Params&) {
        auto v = vars(f);
        return sym(2, v.x, v.o, v.o, v.y, v.o, v.o);
      },
      [](Q q) { return Dist{1, 2 * q * q + q, 0, q * q * q - q * q}; },
      [](Q q) { return Dist{2, (q - 1) / 2, (q - 1) / 2, 0}; });
  pair_odd(
      s, "6", {},
      [](const Field& f, const Params&) {
        auto v = vars(f);
        return sym(4, v.o, v.o, v.x, v.y, v.z, v.t);
      },
      [](const Field& f, const Params&) {
        auto v = vars(f);
        return sym(2, v.x, v.y, v.o, v.o, v.o, v.o);
      },
      [](Q q) { return Dist{q + 1, (3 * q * q + q) / 2, (q * q - q) / 2, q * q * q - q * q}; },
      [](Q q) { return Dist{1, q, 0, 0}; });
  pair_odd(
      s, "8,1", {},
      [](const Field& f, const Params&) {
        auto v = vars(f);
        return sym(4, v.o, v.x, v.y, v.z, v.t, v.z);
      },
      [](const Field& f, const Params&) {
        auto v = vars(f);
        return sym(2, v.x, v.o, v.o, v.y, v.o, -v.y);
      },
      [](Q q) { return Dist{2, q * q + (3 * q - 1) / 2, (q - 1) / 2, q * q * q - q}; },
      [](Q q) { return Dist{1, 1, 0, q - 1}; });
  pair_odd(
      s, "8,2", {C::NonsquareDelta},
      [](const Field& f, const Params& p) {
        auto v = vars(f);
        return sym(4, v.o, v.x, v.y, p.delta * v.z, v.t, v.z);
      },
      [](const Field& f, const Params& p) {
        auto v = vars(f);
        return sym(2, v.x, v.o, v.o, v.y, v.o, -(p.delta * v.y));
      },
      [](Q q) { return Dist{0, q * q + (3 * q + 1) / 2, (q + 1) / 2, q * q * q - q}; },
      [](Q q) { return Dist{1, 0, 1, q - 1}; });
  pair_odd(
      s, "9", {},
      [](const Field& f, const Params&) {
        auto v = vars(f);
        return sym(4, v.o, v.x, v.y, -v.y, v.z, v.t);
      },
      [](const Field& f, const Params&) {
        auto v = vars(f);
        return sym(2, v.x, v.o, v.y, v.y, v.o, v.o);
      },
      [](Q q) { return Dist{1, q * q + q, 0, q * q * q}; }, [](Q q) { return Dist{1, 0, 0, q}; });
  pair_odd(
      s, "10", {C::PencilUV},
      [](const Field& f, const Params& p) { return omega10(f, f.div(f.mul(p.u0, p.v0), f.from_int(2)), p.v0); },
      [](const Field& f, const Params& p) {
        auto v = vars(f);
        return sym(2, p.v0 * v.x, v.y, v.o, v.x + p.u0 * v.y, v.o, v.o);
      },
      [](Q q) { return Dist{1, q * q + q, q * q, q * q * q - q * q}; },
      [](Q q) { return Dist{0, (q + 1) / 2, (q + 1) / 2, 0}; });
  pair_odd(
      s, "12,1", {},
      [](const Field& f, const Params&) {
        auto v = vars(f);
        return sym(4, v.x, v.o, v.y, v.z, v.o, v.t);
      },
      [](const Field& f, const Params&) {
        auto v = vars(f);
        return sym(2, v.o, v.x, v.o, v.o, v.y, v.o);
      },
      [](Q q) { return Dist{q + 2, q * q + (q - 1) / 2, q * q - (q + 1) / 2, q * q * q - q * q}; },
      [](Q q) { return Dist{0, q + 1, 0, 0}; });
  pair_odd(
      s, "13,1", {},
      [](const Field& f, const Params&) {
        auto v = vars(f);
        return sym(4, v.x, v.o, v.y, v.z, v.t, v.z);
      },
      [](const Field& f, const Params&) {
        auto v = vars(f);
        return sym(2, v.o, v.x, v.o, v.y, v.o, -v.y);
      },
      [](Q q) { return Dist{3, (q * q + 3 * q - 2) / 2, (q * q + q - 2) / 2, q * q * q - q}; },
      [](Q q) { return Dist{0, 2, 0, q - 1}; });
  pair_odd(
      s, "13,2", {C::NonsquareDelta},
      [](const Field& f, const Params& p) {
        auto v = vars(f);
        return sym(4, v.x, v.o, v.y, p.delta * v.z, v.t, v.z);
      },
      [](const Field& f, const Params& p) {
        auto v = vars(f);
        return sym(2, v.o, v.x, v.o, v.y, v.o, -(p.delta * v.y));
      },
      [](Q q) { return Dist{1, (q * q + 3 * q) / 2, (q * q + q) / 2, q * q * q - q}; },
      [](Q q) { return Dist{0, 1, 1, q - 1}; });
  pair_odd(
      s, "14,1", {},
      [](const Field& f, const Params&) {
        auto v = vars(f);
        return sym(4, v.x, v.y, v.z, v.x, v.t, v.x);
      },
      [](const Field& f, const Params&) {
        auto v = vars(f);
        return sym(2, v.x, v.o, v.o, -(v.x + v.y), v.o, v.y);
      },
      [](Q q) { return Dist{4, (q * q - 1) / 2 + 2 * q - 1, (q * q - 1) / 2 + q - 1, q * q * q - 2 * q}; },
      [](Q q) { return Dist{0, 3, 0, q - 2}; });
  pair_odd(
      s, "14,2", {C::NonsquareDelta},
      [](const Field& f, const Params& p) {
        auto v = vars(f);
        return sym(4, p.delta * v.x, v.y, v.z, v.x, v.t, p.delta * v.x);
      },
      [](const Field& f, const Params& p) {
        auto v = vars(f);
        return sym(2, v.x, v.o, v.o, -(p.delta * (v.x + v.y)), v.o, v.y);
      },
      [](Q q) { return Dist{0, (q * q + 1) / 2 + 2 * q, (q * q + 1) / 2 + q, q * q * q - 2 * q}; },
      [](Q q) { return Dist{0, 1, 2, q - 2}; });
  pair_odd(
      s, "15,1", {C::PencilUVSquare},
      [](const Field& f, const Params& p) { return omega15(f, p.u1, quarter(f, p.v1)); },
      [](const Field& f, const Params& p) {
        auto v = vars(f);
        return sym(2, p.v1 * v.y, v.x, v.o, p.u1 * v.x + v.y, v.o, v.x);
      },
      [](Q q) { return Dist{2, (q * q - 1) / 2 + q, (q * q - 1) / 2, q * q * q}; },
      [](Q q) { return Dist{0, 1, 0, q}; });
  pair_odd(
      s, "15,2", {C::PencilUVNonsquare},
      [](const Field& f, const Params& p) { return omega15(f, p.u2, quarter(f, p.v2)); },
      [](const Field& f, const Params& p) {
        auto v = vars(f);
        return sym(2, p.v2 * v.y, v.x, v.o, p.u2 * v.x + v.y, v.o, v.x);
      },
      [](Q q) { return Dist{0, (q * q + 1) / 2 + q, (q * q + 1) / 2, q * q * q}; },
      [](Q q) { return Dist{0, 0, 1, q}; });
  pair_odd(
      s, "16,1", {},
      [](const Field& f, const Params&) {
        auto v = vars(f);
        return sym(4, v.x, v.y, v.z, -v.z, v.o, v.t);
      },
      [](const Field& f, const Params&) {
        auto v = vars(f);
        return sym(2, v.o, v.o, v.x, v.x, v.y, v.o);
      },
      [](Q q) { return Dist{2, (q * q - 1) / 2 + q, (q * q - 1) / 2, q * q * q}; },
      [](Q q) { return Dist{0, 1, 0, q}; });
  pair_odd(
      s, "17", {C::Cubic},
      [](const Field& f, const Params& p) {
        return omega17(f, p.alpha, quarter(f, p.beta), quarter(f, p.gamma));
      },
      [](const Field& f, const Params& p) {
        auto v = vars(f);
        return sym(2, f.inv(p.alpha) * v.x, v.y, v.o, p.beta * v.y - p.gamma * v.x, v.x, v.y);
      },
      [](Q q) { return Dist{1, (q * q + q) / 2, (q * q - q) / 2, q * q * q + q}; },
      [](Q q) { return Dist{0, 0, 0, q + 1}; });

  // As printed, these solids carry the line's parameters unchanged. That
  // only pairs them with their lines when 4 = 1, i.e. in characteristic 3.
  set_printed(s, "Omega_15,1", [](const Field& f, const Params& p) { return omega15(f, p.u1, p.v1); });
  set_printed(s, "Omega_15,2", [](const Field& f, const Params& p) { return omega15(f, p.u2, p.v2); });
  set_printed(s, "Omega_17",
              [](const Field& f, const Params& p) { return omega17(f, p.alpha, p.beta, p.gamma); });
  // The polar of o_10 has u v0 x / 2 off the diagonal; the printed u v0 x
  // agrees only when (2u, v0) also satisfies the pencil condition.
  set_printed(s, "Omega_10",
              [](const Field& f, const Params& p) { return omega10(f, f.mul(p.u0, p.v0), p.v0); });
  return s;
}

}  // namespace

const std::vector<RepSpec>& all_specs() {
  static const std::vector<RepSpec> specs = build_specs();
  return specs;
}

std::vector<const RepSpec*> specs_for(Parity p) {
  std::vector<const RepSpec*> out;
  for (const auto& s : all_specs())
    if (s.parity == p) out.push_back(&s);
  return out;
}

const RepSpec& find_spec(const std::string& id, Parity p) {
  for (const auto& s : all_specs())
    if (s.id == id && s.parity == p) return s;
  throw std::invalid_argument("no representative '" + id + "' for q " + (p == Parity::Even ? "even" : "odd"));
}

Subspace representative(const Field& f, const RepSpec& spec, const Params& params) {
  if (spec.parity != parity_of(f))
    throw std::invalid_argument(spec.id + " is defined for q " + (spec.parity == Parity::Even ? "even" : "odd"));
  return subspace_of(f, spec.build(f, params));
}

Subspace representative(const Field& f, const RepSpec& spec) { return representative(f, spec, default_params(f)); }

Subspace printed_representative(const Field& f, const RepSpec& spec, const Params& params) {
  if (!spec.printed) return representative(f, spec, params);
  if (spec.parity != parity_of(f))
    throw std::invalid_argument(spec.id + " is defined for q " + (spec.parity == Parity::Even ? "even" : "odd"));
  return subspace_of(f, spec.printed(f, params));
}

Subspace pi_abc(const Field& f, elem_t a, elem_t b, elem_t c) {
  auto v = vars(f);
  return subspace_of(f, sym(3, v.o, v.x, a * v.z, b * v.z, v.y, c * v.z));
}

Subspace sigma16_plane(const Field& f) {
  if (!f.even()) throw std::invalid_argument("Sigma_16 is defined for q even");
  return pi_abc(f, 1, 1, 0);
}

Subspace sigma11_plane(const Field& f) {
  if (!f.even()) throw std::invalid_argument("Sigma_11 is defined for q even");
  auto v = vars(f);
  return subspace_of(f, sym(3, v.x, v.y, v.o, v.z, v.z, v.x + v.z));
}

Subspace line_in_omega7(const Field& f, const Params& p) {
  if (!f.even()) throw std::invalid_argument("Omega_7 is defined for q even");
  auto v = vars(f);
  // (x,y,z,t) = (0,y,0,t): [[0,y,0],[y,gamma y,t],[0,t,y]]
  return subspace_of(f, sym(2, v.o, v.x, v.o, p.gamma_inv * v.x, v.y, v.x));
}

Sigma18 sigma18_plane(const inv::Geometry& geo) {
  const Field& f = geo.field();
  if (!f.even() || f.q() < 4) throw std::invalid_argument("Sigma_18 requires q even and q >= 4");
  Sigma18 out;
  out.point = Vec{0, 0, 0, 0, 1, 0};
  const auto k = veronese::kernel_of_rank2(f, veronese::to_matrix(out.point));
  out.hyperplane = veronese::delta(veronese::double_line(f, k));
  std::array<Vec, 1> dual{out.hyperplane};
  const auto hyper = *pg::annihilator(f, pg::canonicalize(f, 5, dual));
  const std::int64_t q = f.q();
  const pg::SubspaceEnumerator lines(geo.field_ptr(), 4, 1);
  bool found = false;
  lines.for_each([&](const Subspace& l4) {
    std::array<Vec, 2> g{};
    for (int r = 0; r < 2; ++r)
      for (int j = 0; j < 5; ++j)
        for (std::size_t c = 0; c < 6; ++c)
          g[static_cast<std::size_t>(r)][c] =
              f.add(g[static_cast<std::size_t>(r)][c],
                    f.mul(l4.row(r)[static_cast<std::size_t>(j)], hyper.row(j)[c]));
    const auto line = pg::canonicalize(f, 5, g);
    if (geo.od0(line) != Dist{0, 0, 0, q + 1}) return true;
    out.line = line;
    found = true;
    return false;
  });
  if (!found) throw std::logic_error("no constant-rank-3 line in H(P)");
  out.plane = pg::join(f, out.line, out.point);
  if (geo.od0(out.plane) != Dist{0, 1, 0, q * q + q})
    throw std::logic_error("Sigma_18 construction produced OD0 " + inv::format_dist(geo.od0(out.plane)));
  return out;
}

Subspace sigma_gf_plane(const Field& f) {
  const auto ext = gf::cubic_extension(gf::Field::create(f.p(), f.h(), f.modulus()));
  const Field& e = *ext.big;
  std::vector<elem_t> back(e.q(), 0);
  std::vector<bool> in_base(e.q(), false);
  for (unsigned a = 0; a < f.q(); ++a) {
    back[ext.embed(static_cast<elem_t>(a))] = static_cast<elem_t>(a);
    in_base[ext.embed(static_cast<elem_t>(a))] = true;
  }
  auto trace = [&](elem_t x) {
    const elem_t x1 = ext.frobenius(x);
    const elem_t t = e.add(e.add(x, x1), ext.frobenius(x1));
    if (!in_base[t]) throw std::logic_error("relative trace left the base field");
    return back[t];
  };
  const elem_t w = e.primitive();
  const std::array<elem_t, 3> basis{1, w, e.mul(w, w)};
  std::array<Vec, 3> g{};
  for (std::size_t ci = 0; ci < 3; ++ci) {
    veronese::Mat3 m{};
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) m[i][j] = trace(e.mul(basis[ci], e.mul(basis[i], basis[j])));
    g[ci] = veronese::from_matrix(m);
  }
  auto plane = pg::canonicalize(f, 5, g);
  if (plane.rank() != 3) throw std::logic_error("trace-form Gram matrices are dependent");
  return plane;
}

Subspace sigma_tf_plane(const Field& f) {
  if (f.even()) throw std::invalid_argument("Sigma_TF is defined for q odd");
  return veronese::polarity_rho(f, sigma_gf_plane(f));
}

std::uint64_t rank_one_points_over_cubic(const Field& f, const Subspace& w) {
  const auto ext = gf::cubic_extension(gf::Field::create(f.p(), f.h(), f.modulus()));
  const Field& e = *ext.big;
  std::array<Vec, pg::kMaxCoords> g{};
  for (int r = 0; r < w.rank(); ++r)
    for (std::size_t c = 0; c < 6; ++c) g[static_cast<std::size_t>(r)][c] = ext.embed(w.row(r)[c]);
  const auto we = pg::canonicalize(e, 5, std::span<const Vec>(g.data(), static_cast<std::size_t>(w.rank())));
  std::uint64_t count = 0;
  pg::for_each_point(e, we, [&](const Vec& y) {
    if (veronese::point_rank(e, y) == 1) ++count;
  });
  return count;
}

}  // namespace srd::atlas
