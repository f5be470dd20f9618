#include <algorithm>
#include <unordered_set>

#include "verify_internal.hpp"

namespace srd::verify {

const char* to_string(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::PaperDiscrepancy: return "paper-discrepancy";
    case Status::Sampled: return "consistent (sampled)";
    case Status::Skipped: return "skipped";
  }
  return "?";
}

Status Report::status() const {
  if (checks.empty()) return Status::Skipped;
  bool any_sampled = false;
  for (const Check& c : checks) {
    if (c.status == Status::Fail) return Status::Fail;
    any_sampled = any_sampled || c.status == Status::Sampled;
  }
  return any_sampled ? Status::Sampled : Status::Pass;
}

Context::Context(FieldPtr field, Options opts) : field_(std::move(field)), opts_(opts) {}

const inv::Geometry& Context::geometry() {
  if (!geo_) geo_ = std::make_unique<inv::Geometry>(field_);
  return *geo_;
}

const survey::Survey& Context::subspaces(int projdim) {
  auto it = full_.find(projdim);
  if (it == full_.end())
    it = full_.emplace(projdim, survey::run(geometry(), projdim, opts_.jobs, opts_.budget, opts_.sample,
                                            opts_.seed + static_cast<std::uint64_t>(projdim)))
             .first;
  return it->second;
}

const survey::Survey& Context::sampled_subspaces(int projdim) {
  auto it = sampled_.find(projdim);
  if (it == sampled_.end())
    it = sampled_
             .emplace(projdim, survey::run_sampled(geometry(), projdim, opts_.jobs, opts_.sample,
                                                   opts_.seed + 100 + static_cast<std::uint64_t>(projdim)))
             .first;
  return it->second;
}

std::uint64_t Context::orbit_size(const Subspace& w) {
  auto it = orbit_sizes_.find(w);
  if (it != orbit_sizes_.end()) return it->second;
  const auto orbit = inv::orbit_of(*field_, w, opts_.budget);
  const auto& geo = geometry();
  const Dist a = geo.od0(w), b = geo.od4(w);
  for (const Subspace& m : orbit) {
    ++tally_.members;
    if (geo.od0(m) != a || geo.od4(m) != b) ++tally_.violations;
  }
  ++tally_.orbits;
  orbit_sizes_.emplace(w, orbit.size());
  return orbit.size();
}

namespace detail {

std::string str(const Dist& d) { return inv::format_dist(d); }

std::string str(const inv::RankDist& r) {
  return "[" + std::to_string(r[0]) + "," + std::to_string(r[1]) + "," + std::to_string(r[2]) + "]";
}

std::string str(std::uint64_t n) { return std::to_string(n); }

std::string str(const std::set<Dist>& s) {
  std::string out = "{";
  for (const Dist& d : s) out += (out.size() > 1 ? " " : "") + str(d);
  return out + "}";
}

Report begin(const Context& ctx, const std::string& driver, const std::string& title) {
  Report r;
  r.driver = driver;
  r.title = title;
  r.field = ctx.field().spec();
  return r;
}

Check exact(std::string id, std::string anchor, std::string expected, std::string computed, Status otherwise) {
  const Status s = expected == computed ? Status::Pass : otherwise;
  return Check{std::move(id), std::move(anchor), std::move(expected), std::move(computed), s, {}};
}

Check sampled(std::string id, std::string anchor, std::string expected, std::string computed) {
  const Status s = expected == computed ? Status::Sampled : Status::Fail;
  return Check{std::move(id), std::move(anchor), std::move(expected), std::move(computed), s, {}};
}

Check check(bool is_sampled, std::string id, std::string anchor, std::string expected, std::string computed) {
  return is_sampled ? sampled(std::move(id), std::move(anchor), std::move(expected), std::move(computed))
                    : exact(std::move(id), std::move(anchor), std::move(expected), std::move(computed));
}

Check set_check(bool is_sampled, std::string id, std::string anchor, const std::set<Dist>& expected,
                const std::set<Dist>& computed) {
  if (!is_sampled) return exact(std::move(id), std::move(anchor), str(expected), str(computed));
  const bool inside = std::includes(expected.begin(), expected.end(), computed.begin(), computed.end());
  Check c{std::move(id), std::move(anchor), str(expected), str(computed), inside ? Status::Sampled : Status::Fail, {}};
  c.note = "observed values must lie in the expected set";
  return c;
}

Check count_check(bool is_sampled, std::string id, std::string anchor, std::uint64_t expected, std::uint64_t computed) {
  if (!is_sampled) return exact(std::move(id), std::move(anchor), str(expected), str(computed));
  Check c{std::move(id), std::move(anchor), str(expected), str(computed),
          computed <= expected ? Status::Sampled : Status::Fail, {}};
  c.note = "observed classes must not exceed the expected number";
  return c;
}

void reconcile(Report& r, const survey::Survey& s, const std::string& id) {
  if (s.sampled) return;
  r.checks.push_back(exact(id + "/reconcile", "enumeration total", str(s.total),
                           str(s.count_if([](const survey::Key&) { return true; }))));
}

void add_size(Report& r, const std::string& label, const survey::Survey& s) {
  r.sizes.emplace_back(label, s.visited);
  if (s.sampled) r.notes.push_back(label + ": " + str(s.visited) + " seeded draws from " + str(s.total));
}

bool r1_zero(const survey::Key& k) { return k.first[0] == 0; }
bool min_rank2(const survey::Key& k) { return k.first[0] == 0 && k.first[1] + k.first[2] > 0; }
bool constant_rank3(const survey::Key& k) { return k.first[0] == 0 && k.first[1] + k.first[2] == 0; }

std::vector<std::string> min_rank2_solid_ids(bool even) {
  if (even) return {"Omega_7", "Omega_13", "Omega_14"};
  return {"Omega_8,2", "Omega_14,2", "Omega_15,2"};
}

std::set<Dist> min_rank2_solid_od0(const Context& ctx) {
  std::set<Dist> out;
  for (const auto& id : min_rank2_solid_ids(ctx.even())) out.insert(atlas::find_spec(id, ctx.parity()).od0(ctx.q()));
  return out;
}

std::set<Dist> min_rank2_solid_od4(const Context& ctx) {
  std::set<Dist> out;
  for (const auto& id : min_rank2_solid_ids(ctx.even())) out.insert(atlas::find_spec(id, ctx.parity()).od4(ctx.q()));
  return out;
}

std::set<Dist> complete_plane_od0(Q q) { return {{0, q * q + q + 1, 0, 0}, {0, q + 1, 0, q * q}, {0, 1, 0, q * q + q}}; }
std::set<Dist> complete_plane_od4(Q q) { return {{q * q + q + 1, 0, 0, 0}, {q + 1, 0, 0, q * q}, {1, 0, 0, q * q + q}}; }

Subspace member(const Context& ctx, const survey::Survey& s, const survey::Cell& c) {
  return pg::SubspaceEnumerator(ctx.field_ptr(), 5, s.projdim).at(c.first);
}

veronese::Mat3 random_invertible(const Field& f, std::mt19937_64& rng) {
  std::uniform_int_distribution<gf::elem_t> pick(0, f.q() - 1);
  for (;;) {
    veronese::Mat3 a{};
    for (auto& row : a)
      for (auto& e : row) e = pick(rng);
    if (veronese::det3(f, a) != 0) return a;
  }
}

}  // namespace detail

using namespace detail;

Report tables(Context& ctx) {
  Report r = begin(ctx, "tables", "Table rows: representatives reproduce their OD0 and OD4");
  const Field& f = ctx.field();
  const auto& geo = ctx.geometry();
  const Q q = ctx.q();
  const atlas::Params def = atlas::default_params(f);
  for (const atlas::RepSpec* spec : atlas::specs_for(ctx.parity())) {
    const std::string anchor = spec->table == "lines"    ? "line table, q even"
                               : spec->table == "solids" ? "solid table, q even"
                                                         : "solid/line pairs, q odd";
    const Subspace w = atlas::representative(f, *spec, def);
    const Dist e0 = spec->od0(q), e4 = spec->od4(q);
    r.checks.push_back(exact(spec->id + "/od0", anchor, str(e0), str(geo.od0(w))));
    r.checks.push_back(exact(spec->id + "/od4", anchor, str(e4), str(geo.od4(w))));

    // Every admissible parameter value, for the built and the printed matrix.
    std::vector<atlas::Params> variants{def};
    for (atlas::Condition cond : spec->conditions)
      for (const auto& a : atlas::all_assignments(f, cond)) {
        atlas::Params p = def;
        atlas::apply_condition(p, cond, a);
        variants.push_back(p);
      }
    auto agreeing = [&](auto&& build) {
      std::uint64_t n = 0;
      for (const auto& p : variants) {
        const Subspace v = build(p);
        if (geo.od0(v) == e0 && geo.od4(v) == e4) ++n;
      }
      return n;
    };
    const std::uint64_t tried = variants.size();
    if (!spec->conditions.empty()) {
      Check c = exact(spec->id + "/all-parameters", anchor, str(tried),
                      str(agreeing([&](const atlas::Params& p) { return atlas::representative(f, *spec, p); })));
      c.note = "parameter choices (defaults, then each admissible value per condition) agreeing with the row";
      r.checks.push_back(std::move(c));
    }
    if (spec->printed) {
      const std::uint64_t n = agreeing([&](const atlas::Params& p) { return atlas::printed_representative(f, *spec, p); });
      const Subspace p = atlas::printed_representative(f, *spec, def);
      Check c = exact(spec->id + "/printed-matrix", anchor, str(tried), str(n), Status::PaperDiscrepancy);
      c.note = "the matrix as printed; default parameters give " + str(geo.od0(p)) + " " + str(geo.od4(p));
      r.checks.push_back(std::move(c));
    }
  }
  return r;
}

Report census(Context& ctx) {
  Report r = begin(ctx, "census", "Point and hyperplane class counts of PG(5,q)");
  const auto& geo = ctx.geometry();
  const Q q = ctx.q();
  const Dist pts = geo.point_census(), hyp = geo.hyperplane_census();
  const Q total = (q * q * q * q * q * q - 1) / (q - 1);
  r.checks.push_back(exact("points", "point orbits of PG(5,q)", str(inv::expected_point_census(q, ctx.even())), str(pts)));
  r.checks.push_back(exact("points/rank-1", "Veronese surface", str(std::uint64_t(q * q + q + 1)), str(std::uint64_t(pts[0]))));
  r.checks.push_back(exact("points/rank-3", "rank-3 points", str(std::uint64_t(q * q * q * q * q - q * q)),
                           str(std::uint64_t(pts[3]))));
  r.checks.push_back(exact("points/total", "points of PG(5,q)", str(std::uint64_t(total)),
                           str(std::uint64_t(pts[0] + pts[1] + pts[2] + pts[3]))));
  r.checks.push_back(exact("hyperplanes", "hyperplane orbits of PG(5,q)", str(inv::expected_hyperplane_census(q)), str(hyp)));
  r.checks.push_back(exact("hyperplanes/H1", "double-line hyperplanes", str(std::uint64_t(q * q + q + 1)),
                           str(std::uint64_t(hyp[0]))));
  r.checks.push_back(exact("hyperplanes/total", "hyperplanes of PG(5,q)", str(std::uint64_t(total)),
                           str(std::uint64_t(hyp[0] + hyp[1] + hyp[2] + hyp[3]))));
  r.sizes.emplace_back("points", static_cast<std::uint64_t>(total));
  return r;
}

Report solids(Context& ctx) {
  Report r = begin(ctx, "solids", "Solids of minimum rank 2 form three orbits with distinct rank distributions");
  const Field& f = ctx.field();
  const Q q = ctx.q();
  const auto& s = ctx.subspaces(3);
  add_size(r, "solids", s);
  reconcile(r, s, "solids");
  const std::string anchor = "solids of minimum rank 2";

  std::map<inv::RankDist, std::uint64_t> groups;
  std::map<inv::RankDist, std::uint64_t> complete;
  for (const auto& [key, cell] : s.cells) {
    if (!r1_zero(key)) continue;
    const auto rd = survey::rank_distribution(key.first);
    groups[rd] += cell.count;
    complete[rd] += cell.complete;
  }
  std::set<Dist> expected_od0 = min_rank2_solid_od0(ctx);
  std::vector<Q> want{q * q * q - 2 * q, q * q * q - q, q * q * q};
  std::string exp_r3, got_r3;
  for (Q v : want) exp_r3 += (exp_r3.empty() ? "" : " ") + std::to_string(v);
  std::vector<Q> got;
  for (const auto& [rd, n] : groups) got.push_back(rd[2]);
  std::sort(got.begin(), got.end());
  for (Q v : got) got_r3 += (got_r3.empty() ? "" : " ") + std::to_string(v);
  r.checks.push_back(count_check(s.sampled, "signatures/count", anchor, 3, groups.size()));
  if (!s.sampled) r.checks.push_back(exact("signatures/r3", anchor, exp_r3, got_r3));

  std::set<Dist> got_od0;
  for (const auto& [key, cell] : s.cells)
    if (r1_zero(key)) got_od0.insert(key.first);
  r.checks.push_back(set_check(s.sampled, "signatures/od0", anchor, expected_od0, got_od0));

  for (const auto& id : min_rank2_solid_ids(ctx.even())) {
    const atlas::RepSpec& spec = atlas::find_spec(id, ctx.parity());
    const Subspace rep = atlas::representative(f, spec);
    const Dist od0 = spec.od0(q);
    const auto rd = survey::rank_distribution(od0);
    const std::uint64_t orbit = ctx.orbit_size(rep);
    if (s.sampled) {
      Check c = sampled(id + "/present", anchor, "true", groups.count(rd) ? "true" : "false");
      c.note = "orbit size " + str(orbit);
      r.checks.push_back(std::move(c));
    } else {
      Check c = exact(id + "/single-orbit", anchor, str(orbit), str(groups.count(rd) ? groups.at(rd) : 0));
      c.note = "solids with r3 = " + std::to_string(rd[2]) + " against the orbit of the representative";
      r.checks.push_back(std::move(c));
    }
    r.checks.push_back(check(s.sampled, id + "/complete", "solids of minimum rank 2 are complete",
                             str(groups.count(rd) ? groups.at(rd) : 0), str(complete.count(rd) ? complete.at(rd) : 0)));
  }
  if (q == 2) r.notes.push_back("q = 2: three PGL(3,2)-orbits of solids of minimum rank 2");
  return r;
}

namespace {

std::vector<Subspace> nucleus_points(const Context& ctx) {
  std::vector<Subspace> out;
  pg::for_each_point(ctx.field(), veronese::nucleus_plane(ctx.field()), [&](const Vec& v) {
    std::array<Vec, 1> g{v};
    out.push_back(pg::canonicalize(ctx.field(), 5, g));
  });
  return out;
}

std::vector<Subspace> nucleus_lines(const Context& ctx) {
  const Field& f = ctx.field();
  std::vector<Vec> pts;
  pg::for_each_point(f, veronese::nucleus_plane(f), [&](const Vec& v) { pts.push_back(v); });
  std::vector<Subspace> out;
  std::unordered_set<Subspace, pg::SubspaceHash> seen;
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      std::array<Vec, 2> g{pts[i], pts[j]};
      Subspace l = pg::canonicalize(f, 5, g);
      if (seen.insert(l).second) out.push_back(l);
    }
  return out;
}

// Planes through any of the given subspaces, each once, in first-seen order.
std::vector<Subspace> planes_through(const Context& ctx, const std::vector<Subspace>& bases) {
  std::vector<Subspace> out;
  std::unordered_set<Subspace, pg::SubspaceHash> seen;
  for (const Subspace& b : bases)
    for (Subspace& p : pg::subspaces_through(ctx.field_ptr(), b, 2, ctx.options().budget))
      if (seen.insert(p).second) out.push_back(std::move(p));
  return out;
}

}  // namespace

Report unique_plane_orbits(Context& ctx) {
  Report r = begin(ctx, "unique-plane-orbits",
                   "Planes meeting the nucleus plane in a line or a point, with no other points of rank <= 2");
  const Field& f = ctx.field();
  const auto& geo = ctx.geometry();
  const Q q = ctx.q();
  const auto& opts = ctx.options();
  const Dist sig16{0, q + 1, 0, q * q}, sig18{0, 1, 0, q * q + q};
  const Dist od4_16{q + 1, 0, 0, q * q}, od4_18{1, 0, 0, q * q + q};
  const std::uint64_t full_planes = pg::gaussian_binomial(6, 3, ctx.q());
  const bool have_full = full_planes <= opts.budget;

  // Planes with q+1 nucleus points meet the nucleus plane in a line.
  {
    const std::string anchor = "planes with OD0 [0,q+1,0,q^2]";
    const auto lines = nucleus_lines(ctx);
    const auto cand = planes_through(ctx, lines);
    const std::uint64_t through_line = pg::gaussian_binomial(4, 1, ctx.q());
    r.checks.push_back(exact("sigma16/candidates", "planes through a line of the nucleus plane",
                             str(static_cast<std::uint64_t>(lines.size()) * through_line - (lines.size() - 1)),
                             str(cand.size())));
    const auto s = survey::run_list(geo, cand, opts.jobs);
    r.sizes.emplace_back("sigma16 candidates", s.visited);
    std::uint64_t n = 0;
    std::set<Dist> od4s;
    for (const auto& [key, cell] : s.cells)
      if (key.first == sig16) {
        n += cell.count;
        od4s.insert(key.second);
      }
    const std::uint64_t orbit = ctx.orbit_size(atlas::sigma16_plane(f));
    r.checks.push_back(exact("sigma16/single-orbit", anchor, str(orbit), str(n)));
    r.checks.push_back(exact("sigma16/od4", anchor, str(std::set<Dist>{od4_16}), str(od4s)));
    if (have_full) {
      const auto& all = ctx.subspaces(2);
      r.checks.push_back(exact("sigma16/restriction", "restricted count equals the count over all planes", str(n),
                               str(all.count_if([&](const survey::Key& k) { return k.first == sig16; }))));
    }
    const Dist od0_010 = geo.od0(atlas::pi_abc(f, 0, 1, 0));
    r.checks.push_back(exact("pi_010/excluded", "pi_{0,1,0} meets the Veronese surface", "true",
                             od0_010[0] > 0 && od0_010 != sig16 ? "true" : "false"));
  }

  // Planes with one nucleus point: enumerate through all nucleus points when
  // the family fits the budget, else the slice through one point.
  {
    const std::string anchor = "planes with OD0 [0,1,0,q^2+q]";
    const auto s18 = atlas::sigma18_plane(geo);
    const std::uint64_t orbit = ctx.orbit_size(s18.plane);
    const std::uint64_t through_point = pg::gaussian_binomial(5, 2, ctx.q());
    const std::uint64_t npts = static_cast<std::uint64_t>(q * q + q + 1);
    const auto pts = nucleus_points(ctx);
    r.checks.push_back(exact("sigma18/representative-od4", anchor, str(od4_18), str(geo.od4(s18.plane))));

    if (npts * through_point <= opts.budget) {
      const auto cand = planes_through(ctx, pts);
      const auto s = survey::run_list(geo, cand, opts.jobs);
      r.sizes.emplace_back("sigma18 candidates", s.visited);
      std::uint64_t n = 0;
      std::set<Dist> od4s;
      for (const auto& [key, cell] : s.cells)
        if (key.first == sig18) {
          n += cell.count;
          od4s.insert(key.second);
        }
      r.checks.push_back(exact("sigma18/single-orbit", anchor, str(orbit), str(n)));
      r.checks.push_back(exact("sigma18/od4", anchor, str(std::set<Dist>{od4_18}), str(od4s)));
      if (have_full) {
        const auto& all = ctx.subspaces(2);
        r.checks.push_back(exact("sigma18/restriction", "restricted count equals the count over all planes", str(n),
                                 str(all.count_if([&](const survey::Key& k) { return k.first == sig18; }))));
      }
    } else {
      const Vec p0{0, 0, 0, 0, 1, 0};
      std::array<Vec, 1> g{p0};
      const Subspace point = pg::canonicalize(f, 5, g);
      const auto cand = pg::subspaces_through(ctx.field_ptr(), point, 2, opts.budget);
      const auto s = survey::run_list(geo, cand, opts.jobs);
      r.sizes.emplace_back("sigma18 slice through one nucleus point", s.visited);
      r.notes.push_back("sigma18: slice through (0,0,0,0,1,0); K is transitive on nucleus points and each such "
                        "plane has exactly one, so the orbit splits evenly over the " + str(npts) + " points");
      std::uint64_t n = 0;
      std::set<Dist> od4s;
      const survey::Cell* first = nullptr;
      for (const auto& [key, cell] : s.cells)
        if (key.first == sig18) {
          n += cell.count;
          od4s.insert(key.second);
          if (!first || cell.first < first->first) first = &cell;
        }
      r.checks.push_back(sampled("sigma18/slice-count", anchor, str(orbit / npts), str(n)));
      r.checks.push_back(sampled("sigma18/od4", anchor, str(std::set<Dist>{od4_18}), str(od4s)));
      if (first) {
        const Subspace w = cand[first->first];
        const auto gens = inv::nucleus_point_stabilizer_generators(f);
        const auto kp = inv::orbit_of(f, w, gens, opts.budget);
        r.checks.push_back(sampled("sigma18/slice-single-stabilizer-orbit", anchor, str(n), str(kp.size())));
        const auto k = inv::orbit_of(f, s18.plane, opts.budget);
        r.checks.push_back(sampled("sigma18/slice-in-orbit", anchor, "true", k.count(w) ? "true" : "false"));
      }
    }
  }

  // The stabilizer of a nucleus point.
  {
    const auto gens = inv::nucleus_point_stabilizer_generators(f);
    const Vec p{0, 0, 0, 0, 1, 0};
    bool fixes = true;
    for (const auto& g : gens) fixes = fixes && pg::normalized(f, veronese::k_action(f, g, p)) == p;
    r.checks.push_back(exact("stabilizer/fixes-point", "stabilizer of a nucleus point", "true", fixes ? "true" : "false"));
    const std::uint64_t uq = ctx.q();
    r.checks.push_back(exact("stabilizer/order", "stabilizer of a nucleus point: q^2 |GL(2,q)|",
                             str(uq * uq * (uq * uq - 1) * (uq * uq - uq)), str(inv::generated_group_order(f, gens, opts.budget))));
  }

  // The Sigma_11 representative is not contained in the double-line
  // hyperplane through the conic of its nucleus point.
  {
    const Subspace s11 = atlas::sigma11_plane(f);
    r.checks.push_back(exact("sigma11/od0", "Sigma_11 representative", str(Dist{1, 1, q - 1, q * q}), str(geo.od0(s11))));
    std::optional<Vec> q2;
    pg::for_each_point(f, s11, [&](const Vec& y) {
      if (inv::classify_point(f, y) == inv::PointClass::P2n) q2 = y;
    });
    std::string dual = "none", contained = "none";
    if (q2) {
      const Vec h = pg::normalized(f, veronese::delta(veronese::double_line(f, veronese::conic_plane_of(f, *q2).line)));
      dual = "(" + std::to_string(h[0]);
      for (int i = 1; i < 6; ++i) dual += "," + std::to_string(h[static_cast<std::size_t>(i)]);
      dual += ")";
      bool inside = true;
      for (const Vec& row : s11.rows()) inside = inside && pg::dot(f, h, row) == 0;
      contained = inside ? "true" : "false";
    }
    r.checks.push_back(exact("sigma11/hyperplane", "double-line hyperplane through the conic of the nucleus point",
                             "(0,0,0,0,0,1)", dual));
    r.checks.push_back(exact("sigma11/not-contained", "Sigma_11 plane leaves that hyperplane", "false", contained));
  }
  return r;
}

Report r2n_equals_h1(Context& ctx) {
  Report r = begin(ctx, "r2n-equals-h1", "Nucleus points of a plane equal its double-line hyperplanes");
  const Q q = ctx.q();
  const std::string anchor = "r_{2,n}(pi) = h_1(pi) for planes";
  auto run = [&](const survey::Survey& s, const std::string& tag) {
    add_size(r, "planes (" + tag + ")", s);
    reconcile(r, s, tag);
    std::uint64_t agree = 0;
    std::set<Q> values;
    for (const auto& [key, cell] : s.cells) {
      if (key.first[1] == key.second[0]) agree += cell.count;
      values.insert(key.first[1]);
    }
    r.checks.push_back(check(s.sampled, tag + "/agree", anchor, str(s.visited), str(agree)));
    std::string got;
    for (Q v : values) got += (got.empty() ? "" : " ") + std::to_string(v);
    std::set<Q> allowed{0, 1, q + 1, q * q + q + 1};
    bool subset = std::includes(allowed.begin(), allowed.end(), values.begin(), values.end());
    Check c = check(s.sampled, tag + "/values", "r_{2,n} takes the values 0, 1, q+1, q^2+q+1", "true",
                    subset ? "true" : "false");
    c.note = "observed " + got;
    r.checks.push_back(std::move(c));
  };
  const auto& full = ctx.subspaces(2);
  if (!full.sampled) run(full, "all");
  run(ctx.sampled_subspaces(2), "sample");

  const auto& geo = ctx.geometry();
  const Subspace pn = veronese::nucleus_plane(ctx.field());
  r.checks.push_back(exact("nucleus-plane", anchor, str(Dist{0, q * q + q + 1, 0, 0}) + " h1=" + std::to_string(q * q + q + 1),
                           str(geo.od0(pn)) + " h1=" + std::to_string(geo.od4(pn)[0])));
  if (q >= 4) {
    const Subspace s18 = atlas::sigma18_plane(geo).plane;
    r.checks.push_back(exact("sigma18", anchor, "1 1", std::to_string(geo.od0(s18)[1]) + " " + std::to_string(geo.od4(s18)[0])));
  }
  return r;
}

Report completeness(Context& ctx) {
  Report r = begin(ctx, "completeness", "Completeness of lines and planes of minimum rank 2");
  const Field& f = ctx.field();
  const auto& geo = ctx.geometry();
  const Q q = ctx.q();
  const auto& opts = ctx.options();

  // Lines.
  {
    const auto& s = ctx.subspaces(1);
    add_size(r, "lines", s);
    reconcile(r, s, "lines");
    std::uint64_t n = 0, complete = 0, min_unc = std::numeric_limits<std::uint64_t>::max();
    std::uint64_t cells = 0, in_solid = 0;
    const auto solid_sigs = min_rank2_solid_od0(ctx);
    for (const auto& [key, cell] : s.cells) {
      if (!min_rank2(key)) continue;
      n += cell.count;
      complete += cell.complete;
      min_unc = std::min(min_unc, cell.min_uncovered);
      ++cells;
      const Subspace l = member(ctx, s, cell);
      for (const Subspace& sol : pg::subspaces_through(ctx.field_ptr(), l, 3, opts.budget))
        if (solid_sigs.count(geo.od0(sol))) {
          ++in_solid;
          break;
        }
    }
    r.sizes.emplace_back("lines of minimum rank 2", n);
    r.checks.push_back(check(s.sampled, "lines/none-complete", "no complete line of minimum rank 2", "0", str(complete)));
    const std::uint64_t q3 = ctx.q() * ctx.q() * ctx.q();
    Check c = check(s.sampled, "lines/planes-of-min-rank-2",
                    "a line of minimum rank 2 lies in at least q^3 planes of minimum rank 2", "true",
                    n > 0 && min_unc >= q3 ? "true" : "false");
    c.note = "least count observed " + str(min_unc);
    r.checks.push_back(std::move(c));
    Check d = check(s.sampled, "lines/extend-to-solid",
                    "a line of minimum rank 2 extends to one of the three solid orbits", str(cells), str(in_solid));
    d.note = "one line per (OD0, OD4) class";
    r.checks.push_back(std::move(d));
  }

  // Planes.
  {
    const auto& s = ctx.subspaces(2);
    add_size(r, "planes", s);
    reconcile(r, s, "planes");
    const auto sigs = complete_plane_od0(q);
    std::uint64_t n = 0, complete = 0, mismatched = 0;
    for (const auto& [key, cell] : s.cells) {
      if (!min_rank2(key)) continue;
      n += cell.count;
      complete += cell.complete;
      const bool want = ctx.even() && sigs.count(key.first);
      if (cell.complete != (want ? cell.count : 0)) mismatched += cell.count;
    }
    r.sizes.emplace_back("planes of minimum rank 2", n);
    if (!ctx.even()) {
      r.checks.push_back(check(s.sampled, "planes/none-complete", "no complete plane of minimum rank 2, q odd", "0",
                               str(complete)));
    } else {
      r.checks.push_back(check(s.sampled, "planes/complete-iff-rank2-in-nucleus-plane",
                               "complete iff the rank-2 points lie in the nucleus plane, q even", "0", str(mismatched)));
      if (q >= 4 && !s.sampled) {
        const std::uint64_t expect = 1 + ctx.orbit_size(atlas::sigma16_plane(f)) + ctx.orbit_size(atlas::sigma18_plane(geo).plane);
        Check c = exact("planes/complete-orbits", "complete planes are the nucleus plane, Sigma_16 and Sigma_18",
                        str(expect), str(complete));
        c.note = "1 + |Sigma_16| + |Sigma_18| by orbit enumeration";
        r.checks.push_back(std::move(c));
      }
    }
  }

  if (ctx.even()) {
    const atlas::RepSpec& spec = atlas::find_spec("Omega_7", atlas::Parity::Even);
    const atlas::Params p = atlas::default_params(f);
    const Subspace s7 = atlas::representative(f, spec, p);
    const Subspace l = atlas::line_in_omega7(f, p);
    const std::string anchor = "the line (0,y,0,t) of the Omega_7 representative";
    r.checks.push_back(exact("omega7-line/od0", anchor, str(Dist{0, 1, 0, q}), str(geo.od0(l))));
    r.checks.push_back(exact("omega7-line/inside", anchor, "true", pg::contains(f, s7, l) ? "true" : "false"));
    r.checks.push_back(exact("omega7-line/solid-complete", anchor, "true",
                             codes::CompletenessTester(f, 2).complete(s7) && geo.min_rank(s7) == 2 ? "true" : "false"));
  }
  return r;
}

}  // namespace srd::verify
