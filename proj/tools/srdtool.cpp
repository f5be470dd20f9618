#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "srd/atlas.hpp"
#include "srd/codes.hpp"
#include "srd/survey.hpp"
#include "srd/verify.hpp"

using namespace srd;
using nlohmann::ordered_json;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

verify::Format parse_format(const std::string& s) {
  if (s == "json") return verify::Format::Json;
  if (s == "md") return verify::Format::Markdown;
  if (s == "csv") return verify::Format::Csv;
  throw UsageError("unknown format " + s);
}

void write_out(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw UsageError("cannot write " + path);
  out << text;
}

std::string matrix_string(const veronese::Mat3& m) {
  std::string s = "[";
  for (std::size_t i = 0; i < 3; ++i) {
    s += i ? ",[" : "[";
    for (std::size_t j = 0; j < 3; ++j) s += (j ? "," : "") + std::to_string(m[i][j]);
    s += "]";
  }
  return s + "]";
}

// Named planes beyond the tables.
std::vector<std::pair<std::string, pg::Subspace>> named_planes(const inv::Geometry& geo, const std::string& only) {
  const gf::Field& f = geo.field();
  std::vector<std::pair<std::string, pg::Subspace>> out;
  auto want = [&](const std::string& id) { return only.empty() || only == id; };
  auto need_even = [&](const std::string& id, unsigned min_q) {
    if (!f.even() || f.q() < min_q)
      throw UsageError(id + " requires q even" + (min_q > 2 ? " and q >= " + std::to_string(min_q) : ""));
  };
  if (want("nucleus-plane") && (f.even() || !only.empty())) {
    need_even("nucleus-plane", 2);
    out.emplace_back("nucleus-plane", veronese::nucleus_plane(f));
  }
  if (want("sigma16") && ((f.even() && f.q() >= 4) || !only.empty())) {
    need_even("sigma16", 4);
    out.emplace_back("sigma16", atlas::sigma16_plane(f));
  }
  if (want("sigma18") && ((f.even() && f.q() >= 4) || !only.empty())) {
    need_even("sigma18", 4);
    out.emplace_back("sigma18", atlas::sigma18_plane(geo).plane);
  }
  if (want("sigma11") && ((f.even() && f.q() >= 4) || !only.empty())) {
    need_even("sigma11", 4);
    out.emplace_back("sigma11", atlas::sigma11_plane(f));
  }
  if (want("sigma_gf")) out.emplace_back("sigma_gf", atlas::sigma_gf_plane(f));
  if (want("sigma_tf") && (!f.even() || !only.empty())) {
    if (f.even()) throw UsageError("sigma_tf requires q odd");
    out.emplace_back("sigma_tf", atlas::sigma_tf_plane(f));
  }
  return out;
}

int atlas_emit(const std::string& field, const std::string& format, const std::string& only, const std::string& out) {
  const auto f = gf::parse_field_spec(field);
  if (f->q() > 16) throw UsageError("atlas emit supports q <= 16");
  const inv::Geometry geo(f);
  const atlas::Params params = atlas::default_params(*f);
  const auto q = static_cast<std::int64_t>(f->q());

  struct Row {
    std::string id, table;
    int projdim;
    std::string params;
    std::vector<veronese::Mat3> basis;
    inv::Dist od0, od4;
    std::optional<inv::Dist> e0, e4;
  };
  std::vector<Row> rows;
  bool matched = false;
  for (const atlas::RepSpec* spec : atlas::specs_for(atlas::parity_of(*f))) {
    if (!only.empty() && spec->id != only) continue;
    matched = true;
    Row r{spec->id, spec->table, spec->projdim, "", {}, {}, {}, spec->od0(q), spec->od4(q)};
    for (atlas::Condition c : spec->conditions)
      for (const auto& [name, value] : atlas::find_params(*f, c))
        r.params += (r.params.empty() ? "" : " ") + name + "=" + std::to_string(value);
    const auto w = atlas::representative(*f, *spec, params);
    for (const auto& v : w.rows()) r.basis.push_back(veronese::to_matrix(v));
    r.od0 = geo.od0(w);
    r.od4 = geo.od4(w);
    rows.push_back(std::move(r));
  }
  bool other_parity = false;
  for (const auto& s : atlas::all_specs()) other_parity = other_parity || (!matched && s.id == only);
  if (other_parity) throw UsageError(only + " is not defined for q " + (f->even() ? "even" : "odd"));
  if (only.empty() || !matched) {
    for (auto& [id, w] : named_planes(geo, only)) {
      Row r{id, "planes", 2, "", {}, geo.od0(w), geo.od4(w), std::nullopt, std::nullopt};
      for (const auto& v : w.rows()) r.basis.push_back(veronese::to_matrix(v));
      rows.push_back(std::move(r));
    }
  }
  if (rows.empty()) throw UsageError("no representative named " + only);

  std::ostringstream o;
  const auto fmt = parse_format(format);
  if (fmt == verify::Format::Json) {
    ordered_json j;
    j["field"] = f->spec();
    ordered_json list = ordered_json::array();
    for (const Row& r : rows) {
      ordered_json rj;
      rj["id"] = r.id;
      rj["table"] = r.table;
      rj["projdim"] = r.projdim;
      rj["parameters"] = r.params;
      ordered_json b = ordered_json::array();
      for (const auto& m : r.basis) b.push_back(m);
      rj["basis"] = b;
      rj["od0"] = r.od0;
      rj["od4"] = r.od4;
      if (r.e0) {
        rj["expected_od0"] = *r.e0;
        rj["expected_od4"] = *r.e4;
      }
      list.push_back(rj);
    }
    j["representatives"] = list;
    o << j.dump(2) << "\n";
  } else if (fmt == verify::Format::Markdown) {
    o << "Representatives over GF(" << f->spec() << ")\n\n";
    o << "| id | table | dim | parameters | basis | OD0 | OD4 | matches table |\n|---|---|---|---|---|---|---|---|\n";
    for (const Row& r : rows) {
      std::string b;
      for (const auto& m : r.basis) b += (b.empty() ? "" : " ") + matrix_string(m);
      const std::string ok = r.e0 ? (*r.e0 == r.od0 && *r.e4 == r.od4 ? "yes" : "no") : "";
      o << "| " << r.id << " | " << r.table << " | " << r.projdim << " | " << r.params << " | " << b << " | "
        << inv::format_dist(r.od0) << " | " << inv::format_dist(r.od4) << " | " << ok << " |\n";
    }
  } else {
    o << "id,table,projdim,parameters,od0,od4\n";
    for (const Row& r : rows)
      o << r.id << "," << r.table << "," << r.projdim << ",\"" << r.params << "\",\"" << inv::format_dist(r.od0)
        << "\",\"" << inv::format_dist(r.od4) << "\"\n";
  }
  write_out(out, o.str());
  for (const Row& r : rows)
    if (r.e0 && (*r.e0 != r.od0 || *r.e4 != r.od4)) return 1;
  return 0;
}

int classify_code(const std::string& input, const std::string& format, bool by_orbit, const std::string& out) {
  std::ifstream in(input);
  if (!in) throw UsageError("cannot read " + input);
  std::stringstream buf;
  buf << in.rdbuf();
  const auto code = codes::parse_code(buf.str());
  const auto dist = codes::codeword_rank_distribution(code);
  const int d = codes::min_distance(code);
  const bool complete = codes::is_complete(code);
  auto label = codes::classify(code);
  if (by_orbit && d == 3 && code.dim() == 3) label = codes::classify_constant_rank3_by_orbit(code.field(), code.subspace());

  ordered_json j;
  j["field"] = code.field().spec();
  j["dim"] = code.dim();
  j["d"] = d;
  j["rank_distribution"] = dist;
  j["is_msrd"] = codes::is_msrd(code);
  j["is_complete"] = complete;
  j["label"] = codes::to_string(label);

  std::ostringstream table;
  const auto row = [&](const std::string& k, const std::string& v) {
    table << std::left << std::setw(18) << k << v << "\n";
  };
  row("field", code.field().spec());
  row("dim", std::to_string(code.dim()));
  row("d", std::to_string(d));
  row("rank distribution", "[" + std::to_string(dist[0]) + "," + std::to_string(dist[1]) + "," +
                               std::to_string(dist[2]) + "," + std::to_string(dist[3]) + "]");
  row("is_msrd", codes::is_msrd(code) ? "true" : "false");
  row("is_complete", complete ? "true" : "false");
  row("label", codes::to_string(label));

  std::string text;
  if (format.empty()) text = j.dump(2) + "\n\n" + table.str();
  else if (format == "json") text = j.dump(2) + "\n";
  else if (format == "md" || format == "text") text = table.str();
  else throw UsageError("classify supports --format json|md");
  write_out(out, text);
  return 0;
}

int run_verify(const std::string& field, const std::string& theorem, const verify::Options& opts,
               const std::string& format, bool timings, const std::string& out) {
  verify::Context ctx(gf::parse_field_spec(field), opts);
  if (ctx.q() > 16) throw UsageError("verify supports q <= 16");
  std::vector<verify::Report> reports;
  if (theorem.empty()) {
    for (const auto& d : verify::drivers())
      if (d.applies(ctx.field())) reports.push_back(verify::run_driver(d, ctx));
  } else {
    const verify::Driver* d = verify::find_driver(theorem);
    if (!d) {
      std::string ids;
      for (const auto& x : verify::drivers()) ids += " " + x.id;
      throw UsageError("unknown check " + theorem + "; known:" + ids);
    }
    if (!d->applies(ctx.field())) throw UsageError(theorem + " does not apply over GF(" + ctx.field().spec() + ")");
    reports.push_back(verify::run_driver(*d, ctx));
  }
  write_out(out, verify::render(reports, parse_format(format), timings));
  for (const auto& r : reports)
    if (r.status() == verify::Status::Fail) return 1;
  return 0;
}

int run_acceptance(const std::vector<std::string>& fields, const verify::Options& opts, const std::string& format,
                   bool timings, const std::string& out) {
  for (const auto& s : fields) {
    const auto f = gf::parse_field_spec(s);
    if (f->q() > 16) throw UsageError("acceptance supports q <= 16");
  }
  const auto results = verify::acceptance(fields, opts);
  bool failed = false;
  for (const auto& r : results) {
    std::cout << r.summary() << "\n";
    failed = failed || r.status == verify::Status::Fail;
  }
  if (!format.empty() || !out.empty()) write_out(out, verify::render(results, parse_format(format.empty() ? "json" : format), timings));
  return failed ? 1 : 0;
}

int run_enumerate(const std::string& field, int projdim, const verify::Options& opts, const std::string& format,
                  const std::string& out) {
  if (projdim < 0 || projdim > 4) throw UsageError("--dim must lie in 0..4");
  const auto f = gf::parse_field_spec(field);
  if (f->q() > 16) throw UsageError("enumerate supports q <= 16");
  const inv::Geometry geo(f);
  const auto s = survey::run(geo, projdim, opts.jobs, opts.budget, opts.sample, opts.seed);
  std::ostringstream o;
  const auto fmt = parse_format(format);
  if (fmt == verify::Format::Json) {
    ordered_json j;
    j["field"] = f->spec();
    j["projdim"] = projdim;
    j["total"] = s.total;
    j["visited"] = s.visited;
    j["sampled"] = s.sampled;
    ordered_json cells = ordered_json::array();
    for (const auto& [key, c] : s.cells) {
      ordered_json cj;
      cj["od0"] = key.first;
      cj["od4"] = key.second;
      cj["count"] = c.count;
      if (key.first[0] == 0) cj["complete"] = c.complete;
      cells.push_back(cj);
    }
    j["cells"] = cells;
    o << j.dump(2) << "\n";
  } else if (fmt == verify::Format::Markdown) {
    o << "Subspaces of projective dimension " << projdim << " in PG(5," << f->q() << "): " << s.visited
      << (s.sampled ? " seeded draws of " + std::to_string(s.total) : " of " + std::to_string(s.total)) << "\n\n";
    o << "| OD0 | OD4 | count | complete |\n|---|---|---|---|\n";
    for (const auto& [key, c] : s.cells)
      o << "| " << inv::format_dist(key.first) << " | " << inv::format_dist(key.second) << " | " << c.count << " | "
        << (key.first[0] == 0 ? std::to_string(c.complete) : "") << " |\n";
  } else {
    o << "od0,od4,count,complete\n";
    for (const auto& [key, c] : s.cells)
      o << "\"" << inv::format_dist(key.first) << "\",\"" << inv::format_dist(key.second) << "\"," << c.count << ","
        << (key.first[0] == 0 ? std::to_string(c.complete) : "") << "\n";
  }
  write_out(out, o.str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Symmetric rank-distance codes in 3x3 matrices and the Veronese surface"};
  app.require_subcommand(1);

  std::string field = "4", format = "md", out, input, theorem, only, fields_csv;
  verify::Options opts;
  bool timings = false, by_orbit = false;
  int projdim = 2;

  auto add_common = [&](CLI::App* c) {
    c->add_option("--jobs", opts.jobs, "Worker threads")->check(CLI::PositiveNumber);
    c->add_option("--budget", opts.budget, "Largest exact enumeration before sampling");
    c->add_option("--sample", opts.sample, "Draws in sampled mode");
    c->add_option("--seed", opts.seed, "Seed for sampled mode");
    c->add_option("--out", out, "Write the report to this file");
  };

  auto* atlas_cmd = app.add_subcommand("atlas", "Representatives of the tabulated orbits");
  atlas_cmd->require_subcommand(1);
  auto* emit = atlas_cmd->add_subcommand("emit", "Emit representatives with bases, OD0 and OD4");
  emit->add_option("--field", field, "Field: p^h or p^h/c_{h-1}...c_0")->required();
  emit->add_option("--format", format, "json, md or csv");
  emit->add_option("--id", only, "Only this representative (also nucleus-plane, sigma11, sigma16, sigma18, sigma_gf, sigma_tf)");
  emit->add_option("--out", out, "Write to this file");

  auto* classify_cmd = app.add_subcommand("classify", "Classify codes");
  classify_cmd->require_subcommand(1);
  auto* code_cmd = classify_cmd->add_subcommand("code", "Classify a code given as JSON");
  code_cmd->add_option("--input", input, "JSON file {\"field\":..., \"basis\":[...]}")->required();
  std::string classify_format;
  code_cmd->add_option("--format", classify_format, "json or md (default: both)");
  code_cmd->add_flag("--by-orbit", by_orbit, "Separate constant-rank-3 planes by orbit membership");
  code_cmd->add_option("--out", out, "Write to this file");

  auto* verify_cmd = app.add_subcommand("verify", "Run verification drivers over one field");
  verify_cmd->add_option("--field", field, "Field: p^h or p^h/c_{h-1}...c_0")->required();
  verify_cmd->add_option("--theorem", theorem, "Driver id (default: all applicable)");
  verify_cmd->add_option("--format", format, "json, md or csv");
  verify_cmd->add_flag("--timings", timings, "Include run times");
  add_common(verify_cmd);

  auto* acc = app.add_subcommand("acceptance", "Run the acceptance criteria");
  acc->add_option("--fields", fields_csv, "Comma-separated fields (default: per-criterion defaults)");
  std::string acc_format;
  acc->add_option("--format", acc_format, "Detailed report format: json, md or csv");
  acc->add_flag("--timings", timings, "Include run times");
  add_common(acc);

  auto* en = app.add_subcommand("enumerate", "Histogram of (OD0, OD4) over all subspaces of one dimension");
  en->add_option("--field", field, "Field")->required();
  en->add_option("--dim", projdim, "Projective dimension 0..4");
  en->add_option("--format", format, "json, md or csv");
  add_common(en);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (emit->parsed()) return atlas_emit(field, format, only, out);
    if (code_cmd->parsed()) return classify_code(input, classify_format, by_orbit, out);
    if (verify_cmd->parsed()) return run_verify(field, theorem, opts, format, timings, out);
    if (acc->parsed()) {
      std::vector<std::string> fields;
      std::stringstream ss(fields_csv);
      for (std::string item; std::getline(ss, item, ',');)
        if (!item.empty()) fields.push_back(item);
      return run_acceptance(fields, opts, acc_format, timings, out);
    }
    if (en->parsed()) return run_enumerate(field, projdim, opts, format, out);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const gf::FieldError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const codes::CodeFormatError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
