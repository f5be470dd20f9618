#include <algorithm>

#include "verify_internal.hpp"

namespace srd::verify {

using namespace detail;

namespace {

const char* yes(bool b) { return b ? "true" : "false"; }

// One complete signature class of minimum rank 2.
struct ClassInfo {
  int dim = 0;
  std::uint64_t complete = 0;
  Subspace rep;
  std::uint64_t first = std::numeric_limits<std::uint64_t>::max();
};

void collect_classes(Context& ctx, const survey::Survey& s, std::map<inv::RankDist, ClassInfo>& out) {
  for (const auto& [key, cell] : s.cells) {
    if (!min_rank2(key) || cell.complete == 0) continue;
    ClassInfo& c = out[survey::rank_distribution(key.first)];
    c.dim = s.projdim + 1;
    c.complete += cell.complete;
    if (cell.first < c.first) {
      c.first = cell.first;
      c.rep = member(ctx, s, cell);
    }
  }
}

}  // namespace

Report class_counts(Context& ctx) {
  Report r = begin(ctx, "class-counts", "Equivalence classes of complete codes");
  const Field& f = ctx.field();
  const Q q = ctx.q();
  const auto& solids = ctx.subspaces(3);
  const auto& planes = ctx.subspaces(2);
  const bool samp = solids.sampled || planes.sampled;
  add_size(r, "solids", solids);
  add_size(r, "planes", planes);

  // d = 2.
  {
    std::map<inv::RankDist, ClassInfo> classes;
    collect_classes(ctx, solids, classes);
    collect_classes(ctx, planes, classes);
    int msrd = 0;
    std::set<std::string> labels;
    std::uint64_t single_orbit = 0;
    for (const auto& [rd, c] : classes) {
      if (c.dim == 4) ++msrd;
      labels.insert(codes::to_string(codes::classify(f, c.rep)));
      if (!samp && ctx.orbit_size(c.rep) == c.complete) ++single_orbit;
    }
    const std::string anchor = "complete codes with d = 2";
    Check n = count_check(samp, "d2/classes", anchor, ctx.even() ? 6 : 3, classes.size());
    if (q == 2) n.note = "q = 2 lies outside the hypothesis q >= 4; three classes of planes occur under K";
    r.checks.push_back(std::move(n));
    r.checks.push_back(count_check(samp, "d2/msrd-classes", "classes of dimension 4 (MSRD)", 3, std::uint64_t(msrd)));
    std::string label_list;
    for (const auto& l : labels) label_list += (label_list.empty() ? "" : " ") + l;
    Check lc = check(samp, "d2/distinct-labels", anchor, str(classes.size()), str(labels.size()));
    lc.note = label_list;
    r.checks.push_back(std::move(lc));
    if (!samp)
      r.checks.push_back(exact("d2/single-orbits", "the complete codes of each class form one K-orbit", str(classes.size()), str(single_orbit)));
  }

  // d = 3: constant-rank-3 planes.
  {
    const std::string anchor = "complete codes with d = 3";
    std::uint64_t n3 = 0, complete = 0;
    std::set<Dist> od4s;
    for (const auto& [key, cell] : planes.cells)
      if (constant_rank3(key)) {
        n3 += cell.count;
        complete += cell.complete;
        od4s.insert(key.second);
      }
    r.sizes.emplace_back("constant-rank-3 planes", n3);
    r.checks.push_back(check(planes.sampled, "d3/all-complete", anchor, str(n3), str(complete)));
    r.checks.push_back(set_check(planes.sampled, "d3/no-singular-conics", "nets of constant rank 3 have no singular conics",
                                 std::set<Dist>{{0, 0, 0, q * q + q + 1}}, od4s));

    const Subspace gfp = atlas::sigma_gf_plane(f);
    const std::uint64_t r1_gf = atlas::rank_one_points_over_cubic(f, gfp);
    r.checks.push_back(exact("d3/gf-rank-one-over-cubic", "Sigma_GF over GF(q^3)", "3", str(r1_gf)));
    std::uint64_t orbits_total = ctx.orbit_size(gfp);
    inv::Orbit known = planes.sampled ? inv::orbit_of(f, gfp, ctx.options().budget) : inv::Orbit{};
    std::set<std::uint64_t> scalar_classes{r1_gf};
    if (!ctx.even()) {
      const Subspace tfp = atlas::sigma_tf_plane(f);
      const std::uint64_t r1_tf = atlas::rank_one_points_over_cubic(f, tfp);
      scalar_classes.insert(r1_tf);
      r.checks.push_back(exact("d3/tf-rank-one-over-cubic", "Sigma_TF over GF(q^3)", "0", str(r1_tf)));
      const auto gf_orbit = inv::orbit_of(f, gfp, ctx.options().budget);
      r.checks.push_back(exact("d3/disjoint-orbits", "Sigma_TF lies outside the orbit of Sigma_GF", "false",
                               yes(gf_orbit.count(tfp) > 0)));
      orbits_total += ctx.orbit_size(tfp);
      if (planes.sampled) {
        const auto tf_orbit = inv::orbit_of(f, tfp, ctx.options().budget);
        known.insert(tf_orbit.begin(), tf_orbit.end());
      }
    }
    r.checks.push_back(exact("d3/scalar-extension-classes", anchor, ctx.even() ? "1" : "2", str(scalar_classes.size())));
    const std::string cover = "constant-rank-3 planes are Sigma_GF and Sigma_TF";
    if (!planes.sampled) {
      Check c = exact("d3/orbits-cover", cover, str(orbits_total), str(n3));
      c.note = ctx.even() ? "one orbit" : "two orbits";
      r.checks.push_back(std::move(c));
    } else {
      // Each observed cell representative must lie in one of the orbits.
      std::uint64_t reps = 0, inside = 0;
      for (const auto& [key, cell] : planes.cells)
        if (constant_rank3(key)) {
          ++reps;
          inside += known.count(member(ctx, planes, cell));
        }
      Check c = sampled("d3/orbits-cover", cover, str(reps), str(inside));
      c.note = "cell representatives inside orbits of total size " + str(orbits_total);
      r.checks.push_back(std::move(c));
    }
  }
  return r;
}

Report net_corollaries(Context& ctx) {
  Report r = begin(ctx, "net-corollaries", "Pencils, nets and webs of conics");
  const Field& f = ctx.field();
  const auto& geo = ctx.geometry();
  const Q q = ctx.q();

  // Pencils: hyperplanes through a solid of minimum rank 2.
  {
    const auto& s = ctx.subspaces(3);
    add_size(r, "solids", s);
    std::set<Dist> got;
    for (const auto& [key, cell] : s.cells)
      if (r1_zero(key)) got.insert(key.second);
    r.checks.push_back(set_check(s.sampled, "pencils/conic-distributions",
                                 "pencils with an empty base: conic distributions", min_rank2_solid_od4(ctx), got));
  }

  // Nets: planes with no rank-1 point containing a real or imaginary line pair.
  {
    const auto& s = ctx.subspaces(2);
    add_size(r, "planes", s);
    const auto solid_sigs = min_rank2_solid_od0(ctx);
    std::uint64_t n = 0, complete = 0, cells = 0, extended = 0;
    std::set<Dist> complete_od4;
    for (const auto& [key, cell] : s.cells) {
      if (!r1_zero(key)) continue;
      if (min_rank2(key) && cell.complete > 0) complete_od4.insert(key.second);
      if (key.second[1] + key.second[2] == 0) continue;
      n += cell.count;
      complete += cell.complete;
      ++cells;
      const Subspace e = codes::extend_to_complete(f, member(ctx, s, cell));
      if (e.rank() == 4 && solid_sigs.count(geo.od0(e))) ++extended;
    }
    r.sizes.emplace_back("nets with an empty base and a singular conic", n);
    r.checks.push_back(check(s.sampled, "nets/singular-not-complete",
                             "nets with an empty base and a line pair are not complete", "0", str(complete)));
    Check c = check(s.sampled, "nets/extend-to-solid", "such a net lies in a web of the three solid orbits", str(cells),
                    str(extended));
    c.note = "one plane per (OD0, OD4) class, extended greedily";
    r.checks.push_back(std::move(c));
    if (ctx.even())
      r.checks.push_back(set_check(s.sampled, "nets/complete-conic-distributions",
                                   "complete nets of minimum rank 2, q even", complete_plane_od4(q), complete_od4));
  }

  // Webs: hyperplanes through a line, q odd. A web "of rank one" is read as
  // one containing a double line.
  if (!ctx.even()) {
    const auto& s = ctx.subspaces(1);
    add_size(r, "lines", s);
    std::set<Dist> want;
    for (const char* id : {"o_8,2", "o_14,2", "o_15,2"}) want.insert(atlas::find_spec(id, atlas::Parity::Odd).od4(q));
    std::set<Dist> got;
    for (const auto& [key, cell] : s.cells)
      if (key.second[0] == 0) got.insert(key.second);
    Check c = set_check(s.sampled, "webs/without-double-lines", "webs without a double line", want, got);
    c.note = "webs of rank one are read as webs containing a double line";
    r.checks.push_back(std::move(c));
  }

  if (ctx.even() && q >= 4)
    r.checks.push_back(exact("sigma16/conic-distribution", "the net of Sigma_16", str(Dist{q + 1, 0, 0, q * q}),
                             str(geo.od4(atlas::sigma16_plane(f)))));
  r.checks.push_back(exact("sigma_gf/conic-distribution", "the net of Sigma_GF", str(Dist{0, 0, 0, q * q + q + 1}),
                           str(geo.od4(atlas::sigma_gf_plane(f)))));
  return r;
}

Report trace_form_code(Context& ctx) {
  Report r = begin(ctx, "trace-form-code", "The trace-form code has the parameters of Y(0,3,q)");
  const Field& f = ctx.field();
  const std::uint64_t q = ctx.q();
  auto add = [&](const std::string& tag, const Subspace& w, codes::ClassLabel label) {
    const auto c = codes::SrdCode::from_subspace(ctx.field_ptr(), w);
    const auto dist = codes::codeword_rank_distribution(c);
    const std::string anchor = tag + " code";
    r.checks.push_back(exact(tag + "/dim", anchor, "3", str(std::uint64_t(c.dim()))));
    r.checks.push_back(exact(tag + "/d", anchor, "3", str(std::uint64_t(codes::min_distance(c)))));
    r.checks.push_back(exact(tag + "/size", anchor, str(q * q * q), str(dist[0] + dist[1] + dist[2] + dist[3])));
    r.checks.push_back(exact(tag + "/rank-distribution", anchor, "[1,0,0," + std::to_string(q * q * q - 1) + "]",
                             "[" + std::to_string(dist[0]) + "," + std::to_string(dist[1]) + "," +
                                 std::to_string(dist[2]) + "," + std::to_string(dist[3]) + "]"));
    r.checks.push_back(exact(tag + "/msrd", anchor, "true", yes(codes::is_msrd(c))));
    r.checks.push_back(exact(tag + "/complete", anchor, "true", yes(codes::is_complete(c))));
    r.checks.push_back(exact(tag + "/class", anchor, codes::to_string(label), codes::to_string(codes::classify(c))));
  };
  add("sigma_gf", atlas::sigma_gf_plane(f), codes::ClassLabel::GFType);
  if (!ctx.even()) add("sigma_tf", atlas::sigma_tf_plane(f), codes::ClassLabel::TFType);
  return r;
}

Report constant_rank3(Context& ctx) {
  Report r = begin(ctx, "constant-rank-3", "Hyperplane distribution of constant-rank-3 planes");
  const Field& f = ctx.field();
  const auto& geo = ctx.geometry();
  const Q q = ctx.q();
  auto add = [&](const std::string& tag, const Subspace& w) {
    const Dist od4 = geo.od4(w);
    r.checks.push_back(exact(tag + "/od0", "constant rank 3", str(Dist{0, 0, 0, q * q + q + 1}), str(geo.od0(w))));
    r.checks.push_back(exact(tag + "/od4", "constant rank 3: every hyperplane through the plane is H3",
                             str(Dist{0, 0, 0, q * q + q + 1}), str(od4)));
    Check c = exact(tag + "/od4-as-stated", "constant rank 3: OD4 as stated in the theorem", str(Dist{0, 0, 0, q + 1}),
                    str(od4), Status::PaperDiscrepancy);
    c.note = "a plane lies in q^2+q+1 hyperplanes, so the stated q+1 cannot hold";
    r.checks.push_back(std::move(c));
  };
  add("sigma_gf", atlas::sigma_gf_plane(f));
  if (!ctx.even()) add("sigma_tf", atlas::sigma_tf_plane(f));
  return r;
}

Report properties(Context& ctx) {
  Report r = begin(ctx, "properties", "Property suites");
  const Field& f = ctx.field();
  const auto& geo = ctx.geometry();
  const Q q = ctx.q();
  std::mt19937_64 rng(ctx.options().seed);

  std::vector<Vec> plane_pts;  // PG(2,q)
  {
    std::array<Vec, 3> id{Vec{1, 0, 0, 0, 0, 0}, Vec{0, 1, 0, 0, 0, 0}, Vec{0, 0, 1, 0, 0, 0}};
    pg::for_each_point(f, pg::canonicalize(f, 2, id), [&](const Vec& u) { plane_pts.push_back(u); });
  }
  auto v3 = [](const Vec& u) { return veronese::Vec3{u[0], u[1], u[2]}; };

  // K-action functoriality and Veronese equivariance.
  {
    std::uint64_t tried = 0, ok = 0;
    for (int t = 0; t < 40; ++t) {
      const auto a = random_invertible(f, rng), b = random_invertible(f, rng);
      const auto ab = veronese::mul3(f, a, b);
      for (int k = 0; k < 10; ++k) {
        Vec y{};
        do {
          for (int i = 0; i < 6; ++i) y[static_cast<std::size_t>(i)] = static_cast<gf::elem_t>(rng() % f.q());
        } while (pg::is_zero(y));
        ++tried;
        if (pg::normalized(f, veronese::k_action(f, ab, y)) ==
            pg::normalized(f, veronese::k_action(f, a, veronese::k_action(f, b, y))))
          ++ok;
      }
      for (const Vec& u : plane_pts) {
        ++tried;
        const auto au = veronese::apply3(f, a, v3(u));
        if (pg::normalized(f, veronese::k_action(f, a, veronese::veronese(f, v3(u)))) ==
            pg::normalized(f, veronese::veronese(f, au)))
          ++ok;
      }
    }
    r.checks.push_back(exact("k-action/functorial", "(AB).y = A.(B.y) and A.nu(u) = nu(Au)", str(tried), str(ok)));
  }

  // Incidence of conics and hyperplanes under delta, over all conics.
  {
    std::array<Vec, 6> id{};
    for (std::size_t i = 0; i < 6; ++i) id[i][i] = 1;
    const Subspace all = pg::canonicalize(f, 5, id);
    std::uint64_t tried = 0, ok = 0;
    pg::for_each_point(f, all, [&](const Vec& c) {
      const veronese::ConicForm form{c[0], c[1], c[2], c[3], c[4], c[5]};
      const Vec h = veronese::delta(form);
      for (const Vec& u : plane_pts) {
        ++tried;
        const bool on_conic = veronese::eval_conic(f, form, v3(u)) == 0;
        const bool on_hyperplane = pg::dot(f, h, veronese::veronese(f, v3(u))) == 0;
        if (on_conic == on_hyperplane) ++ok;
      }
    });
    r.checks.push_back(exact("delta/incidence", "u on the conic iff nu(u) on delta(conic), all conics", str(tried), str(ok)));
    std::uint64_t h1 = 0;
    for (const Vec& k : plane_pts)
      if (inv::classify_hyperplane(f, veronese::delta(veronese::double_line(f, v3(k)))) == inv::HyperplaneClass::H1) ++h1;
    r.checks.push_back(exact("delta/double-lines", "double lines map to H1", str(plane_pts.size()), str(h1)));
  }

  // The polarity rho, q odd.
  if (!ctx.even()) {
    std::uint64_t tried = 0, ok = 0;
    for (int pd = 0; pd <= 4; ++pd) {
      const pg::SubspaceEnumerator en(ctx.field_ptr(), 5, pd);
      std::uniform_int_distribution<std::uint64_t> pick(0, en.count() - 1);
      for (int t = 0; t < 40; ++t) {
        const Subspace w = en.at(pick(rng));
        const Subspace p = veronese::polarity_rho(f, w);
        ++tried;
        if (p.rank() == 6 - w.rank() && veronese::polarity_rho(f, p) == w) ++ok;
      }
    }
    r.checks.push_back(exact("rho/involution", "rho(rho(W)) = W", str(tried), str(ok)));

    std::uint64_t tangent = 0;
    for (const Vec& k : plane_pts) {
      const auto cp = veronese::conic_plane_of_line(f, v3(k));
      std::array<Vec, 3> g{};
      for (std::size_t i = 0; i < 3; ++i) {
        veronese::Mat3 m{};
        for (std::size_t a = 0; a < 3; ++a) {
          m[a][i] = f.add(m[a][i], k[a]);
          m[i][a] = f.add(m[i][a], k[a]);
        }
        g[i] = veronese::from_matrix(m);
      }
      const Subspace tp = pg::canonicalize(f, 5, g);
      if (veronese::polarity_rho(f, cp.plane) == tp) ++tangent;
    }
    Check c = exact("rho/conic-to-tangent-plane", "rho maps the conic plane of a line to the tangent plane at its pole",
                    str(plane_pts.size()), str(tangent));
    c.note = "tangent plane at nu(k) spanned by k e_i^T + e_i k^T";
    r.checks.push_back(std::move(c));
  }

  // Algebraic against geometric classification of rank-2 points.
  {
    std::uint64_t n = 0, ok = 0;
    for (int i = 0; i < geo.space().size(); ++i) {
      if (geo.rank_of(i) != 2) continue;
      const Vec& y = geo.space().point(i);
      ++n;
      if (inv::classify_point(f, y) == inv::classify_point_geometric(f, y)) ++ok;
    }
    r.checks.push_back(exact("points/algebraic-vs-tangent-count",
                             ctx.even() ? "nucleus points by tangent count" : "exterior and interior points by tangent count",
                             str(n), str(ok)));
  }

  // Atlas codes: MSRD implies complete, codeword counts, classify under K.
  std::vector<std::pair<std::string, Subspace>> complete_codes;
  {
    const atlas::Params p = atlas::default_params(f);
    std::uint64_t msrd = 0, msrd_complete = 0, sums = 0, specs = 0;
    for (const atlas::RepSpec* spec : atlas::specs_for(ctx.parity())) {
      const Subspace w = atlas::representative(f, *spec, p);
      const auto c = codes::SrdCode::from_subspace(ctx.field_ptr(), w);
      const auto dist = codes::codeword_rank_distribution(c);
      std::uint64_t qk = 1;
      for (int i = 0; i < c.dim(); ++i) qk *= ctx.q();
      ++specs;
      if (dist[0] + dist[1] + dist[2] + dist[3] == qk) ++sums;
      if (codes::min_distance(c) >= 2 && codes::is_msrd(c)) {
        ++msrd;
        if (codes::is_complete(c)) ++msrd_complete;
      }
      if (codes::is_complete(c) && codes::min_distance(c) >= 2) complete_codes.emplace_back(spec->id, w);
    }
    r.checks.push_back(exact("codes/size", "codeword counts sum to q^k", str(specs), str(sums)));
    r.checks.push_back(exact("codes/msrd-complete", "MSRD codes are complete", str(msrd), str(msrd_complete)));
    complete_codes.emplace_back("sigma_gf", atlas::sigma_gf_plane(f));
    if (!ctx.even()) complete_codes.emplace_back("sigma_tf", atlas::sigma_tf_plane(f));
    if (ctx.even()) complete_codes.emplace_back("nucleus-plane", veronese::nucleus_plane(f));
    if (ctx.even() && q >= 4) {
      complete_codes.emplace_back("sigma16", atlas::sigma16_plane(f));
      complete_codes.emplace_back("sigma18", atlas::sigma18_plane(geo).plane);
    }
    std::uint64_t tried = 0, ok = 0;
    for (const auto& [id, w] : complete_codes) {
      const auto label = codes::classify(f, w);
      for (int t = 0; t < 5; ++t) {
        ++tried;
        if (codes::classify(f, veronese::k_action(f, random_invertible(f, rng), w)) == label) ++ok;
      }
    }
    r.checks.push_back(exact("classify/k-invariant", "classify(A.C) = classify(C) on complete atlas codes", str(tried), str(ok)));
  }

  // Greedy extension: monotone, idempotent, complete.
  {
    std::uint64_t tried = 0, ok = 0, msrd = 0, d2 = 0;
    for (int pd : {0, 1, 2}) {
      const pg::SubspaceEnumerator en(ctx.field_ptr(), 5, pd);
      std::uniform_int_distribution<std::uint64_t> pick(0, en.count() - 1);
      int found = 0;
      for (int guard = 0; found < 8 && guard < 4000; ++guard) {
        const Subspace w = en.at(pick(rng));
        if (geo.min_rank(w) < 2) continue;
        ++found;
        ++tried;
        const Subspace e = codes::extend_to_complete(f, w);
        const int d = geo.min_rank(w);
        if (pg::contains(f, e, w) && codes::extend_to_complete(f, e) == e && geo.min_rank(e) == d &&
            codes::is_complete(f, e, d))
          ++ok;
        if (d == 2) {
          ++d2;
          if (e.rank() == 4) ++msrd;
        }
      }
    }
    r.checks.push_back(exact("extend/monotone-idempotent", "extend_to_complete contains its input and is idempotent",
                             str(tried), str(ok)));
    if (!ctx.even())
      r.checks.push_back(exact("extend/q-odd-msrd", "q odd: d = 2 codes extend to dimension 4", str(d2), str(msrd)));
  }

  // OD0 and OD4 are constant on every orbit computed in this context.
  {
    const atlas::Params p = atlas::default_params(f);
    if (q <= 4)
      for (const atlas::RepSpec* spec : atlas::specs_for(ctx.parity())) ctx.orbit_size(atlas::representative(f, *spec, p));
    for (const auto& [id, w] : complete_codes) ctx.orbit_size(w);
    const auto& t = ctx.orbit_tally();
    Check c = exact("orbits/od-invariant", "OD0 and OD4 are constant on K-orbits", "0", str(t.violations));
    c.note = str(t.orbits) + " orbits, " + str(t.members) + " members";
    r.checks.push_back(std::move(c));
  }
  return r;
}

}  // namespace srd::verify
