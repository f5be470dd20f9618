#include <chrono>
#include <sstream>

#include <json.hpp>

#include "verify_internal.hpp"

namespace srd::verify {

namespace {

bool any_field(const Field&) { return true; }
bool even_field(const Field& f) { return f.even(); }
bool odd_field(const Field& f) { return !f.even(); }
bool even_from_4(const Field& f) { return f.even() && f.q() >= 4; }

}  // namespace

const std::vector<Driver>& drivers() {
  static const std::vector<Driver> all{
      {"tables", "Table reproduction", tables, any_field},
      {"census", "Point and hyperplane censuses", census, any_field},
      {"solids", "Solids of minimum rank 2", solids, any_field},
      {"unique-plane-orbits", "Unique plane orbits through the nucleus plane", unique_plane_orbits, even_from_4},
      {"r2n-equals-h1", "Nucleus points against double-line hyperplanes", r2n_equals_h1, even_field},
      {"completeness", "Completeness dichotomy", completeness, any_field},
      {"class-counts", "Equivalence-class counts", class_counts, any_field},
      {"net-corollaries", "Pencils, nets and webs of conics", net_corollaries, any_field},
      {"trace-form-code", "Trace-form code parameters", trace_form_code, any_field},
      {"constant-rank-3", "Constant-rank-3 hyperplane distribution", constant_rank3, any_field},
      {"properties", "Property suites", properties, any_field},
  };
  return all;
}

const Driver* find_driver(std::string_view id) {
  for (const Driver& d : drivers())
    if (d.id == id) return &d;
  return nullptr;
}

Report run_driver(const Driver& d, Context& ctx) {
  if (!d.applies(ctx.field())) {
    Report r = detail::begin(ctx, d.id, d.title);
    r.notes.push_back("not applicable over GF(" + std::to_string(ctx.q()) + ")");
    return r;
  }
  const auto t0 = std::chrono::steady_clock::now();
  Report r = d.run(ctx);
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> all{
      {1, "Table reproduction, q even", {"tables"}, {4, 8}, even_field},
      {2, "Table reproduction, q odd", {"tables"}, {3, 5}, odd_field},
      {3, "Point and hyperplane censuses", {"census"}, {2, 3, 4, 5}, any_field},
      {4, "Unique plane orbits with q+1 or 1 nucleus points", {"unique-plane-orbits"}, {4, 8}, even_field},
      {5, "Nucleus points equal double-line hyperplanes", {"r2n-equals-h1"}, {4, 8}, even_field},
      {6, "Solid classification", {"solids"}, {2, 3, 4, 5}, any_field},
      {7, "Completeness dichotomy", {"completeness"}, {3, 4}, any_field},
      {8, "Equivalence-class counts", {"class-counts", "net-corollaries"}, {3, 4, 5}, any_field},
      {9, "Trace-form code parameters", {"trace-form-code"}, {2, 3, 4, 5}, any_field},
      {10, "Constant-rank-3 discrepancy detection", {"constant-rank-3"}, {3, 4}, any_field},
      {11, "Property suites", {"properties"}, {3, 4, 5}, any_field},
  };
  return all;
}

namespace {

Status combine(const std::vector<Report>& reports) {
  Status s = Status::Skipped;
  for (const Report& r : reports) {
    const Status t = r.status();
    if (t == Status::Fail) return Status::Fail;
    if (t == Status::Sampled) s = Status::Sampled;
    else if (t == Status::Pass && s == Status::Skipped) s = Status::Pass;
  }
  return s;
}

}  // namespace

std::string CriterionResult::summary() const {
  std::string fields;
  for (const Report& r : reports)
    if (r.status() != Status::Skipped && fields.find("GF(" + r.field + ")") == std::string::npos)
      fields += (fields.empty() ? "" : ", ") + std::string("GF(") + r.field + ")";
  std::string s = "C" + std::to_string(number) + " " + (status == Status::Fail ? "FAIL" : status == Status::Skipped ? "SKIP" : "PASS") +
                  "  " + title;
  if (!fields.empty()) s += " [" + fields + "]";
  if (status == Status::Sampled) s += " (some checks consistent (sampled))";
  return s;
}

std::vector<CriterionResult> acceptance(const std::vector<std::string>& fields, const Options& opts) {
  std::map<std::string, std::unique_ptr<Context>> contexts;
  auto context = [&](const std::string& spec) -> Context& {
    auto it = contexts.find(spec);
    if (it == contexts.end())
      it = contexts.emplace(spec, std::make_unique<Context>(gf::parse_field_spec(spec), opts)).first;
    return *it->second;
  };
  std::vector<CriterionResult> out;
  for (const Criterion& c : criteria()) {
    CriterionResult res;
    res.number = c.number;
    res.title = c.title;
    std::vector<std::string> list = fields;
    if (list.empty())
      for (unsigned q : c.default_fields) list.push_back(std::to_string(q));
    for (const std::string& spec : list) {
      Context& ctx = context(spec);
      if (!c.accepts(ctx.field())) continue;
      for (const std::string& id : c.drivers) res.reports.push_back(run_driver(*find_driver(id), ctx));
    }
    res.status = combine(res.reports);
    out.push_back(std::move(res));
  }
  return out;
}

namespace {

using nlohmann::ordered_json;

std::string seconds(double s) {
  std::ostringstream o;
  o.setf(std::ios::fixed);
  o.precision(3);
  o << s;
  return o.str();
}

ordered_json to_json(const Report& r, bool timings) {
  ordered_json j;
  j["driver"] = r.driver;
  j["title"] = r.title;
  j["field"] = r.field;
  j["status"] = to_string(r.status());
  ordered_json sizes = ordered_json::object();
  for (const auto& [k, v] : r.sizes) sizes[k] = v;
  j["sizes"] = sizes;
  j["notes"] = r.notes;
  ordered_json checks = ordered_json::array();
  for (const Check& c : r.checks) {
    ordered_json cj;
    cj["id"] = c.id;
    cj["anchor"] = c.anchor;
    cj["expected"] = c.expected;
    cj["computed"] = c.computed;
    cj["status"] = to_string(c.status);
    if (!c.note.empty()) cj["note"] = c.note;
    checks.push_back(cj);
  }
  j["checks"] = checks;
  if (timings) j["seconds"] = r.seconds;
  return j;
}

std::string md_cell(std::string s) {
  for (std::size_t i = 0; (i = s.find('|', i)) != std::string::npos; i += 2) s.replace(i, 1, "\\|");
  return s;
}

void markdown(std::ostringstream& o, const Report& r, bool timings) {
  o << "### " << r.driver << ", GF(" << r.field << "): " << to_string(r.status()) << "\n\n";
  o << r.title << "\n\n";
  if (!r.sizes.empty()) {
    o << "Enumerated:";
    for (const auto& [k, v] : r.sizes) o << " " << k << " " << v << ";";
    o << "\n\n";
  }
  for (const auto& n : r.notes) o << "- " << n << "\n";
  if (!r.notes.empty()) o << "\n";
  if (r.checks.empty()) return;
  o << "| id | checks | expected | computed | status | note |\n|---|---|---|---|---|---|\n";
  for (const Check& c : r.checks)
    o << "| " << md_cell(c.id) << " | " << md_cell(c.anchor) << " | " << md_cell(c.expected) << " | "
      << md_cell(c.computed) << " | " << to_string(c.status) << " | " << md_cell(c.note) << " |\n";
  if (timings) o << "\nTime: " << seconds(r.seconds) << " s\n";
  o << "\n";
}

std::string csv_cell(const std::string& s) {
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

void csv(std::ostringstream& o, const Report& r, const std::string& prefix, bool timings) {
  for (const Check& c : r.checks)
    o << csv_cell(prefix + r.driver + "/" + c.id) << "," << csv_cell(r.field) << "," << csv_cell(c.expected) << ","
      << csv_cell(c.computed) << "," << csv_cell(to_string(c.status)) << "," << (timings ? seconds(r.seconds) : "")
      << "\n";
}

}  // namespace

std::string render(const std::vector<Report>& reports, Format fmt, bool timings) {
  std::ostringstream o;
  if (fmt == Format::Json) {
    ordered_json j = ordered_json::array();
    for (const Report& r : reports) j.push_back(to_json(r, timings));
    o << j.dump(2) << "\n";
  } else if (fmt == Format::Markdown) {
    for (const Report& r : reports) markdown(o, r, timings);
  } else {
    o << "id,field,expected,computed,status,seconds\n";
    for (const Report& r : reports) csv(o, r, "", timings);
  }
  return o.str();
}

std::string render(const std::vector<CriterionResult>& results, Format fmt, bool timings) {
  std::ostringstream o;
  if (fmt == Format::Json) {
    ordered_json j;
    ordered_json list = ordered_json::array();
    bool failed = false;
    for (const auto& c : results) {
      ordered_json cj;
      cj["criterion"] = c.number;
      cj["title"] = c.title;
      cj["status"] = to_string(c.status);
      ordered_json reps = ordered_json::array();
      for (const Report& r : c.reports) reps.push_back(to_json(r, timings));
      cj["reports"] = reps;
      list.push_back(cj);
      failed = failed || c.status == Status::Fail;
    }
    j["status"] = failed ? "fail" : "pass";
    j["criteria"] = list;
    o << j.dump(2) << "\n";
  } else if (fmt == Format::Markdown) {
    o << "# Acceptance\n\n| criterion | title | status |\n|---|---|---|\n";
    for (const auto& c : results) o << "| " << c.number << " | " << c.title << " | " << to_string(c.status) << " |\n";
    o << "\n";
    for (const auto& c : results) {
      o << "## Criterion " << c.number << ": " << c.title << "\n\n";
      for (const Report& r : c.reports) markdown(o, r, timings);
    }
  } else {
    o << "id,field,expected,computed,status,seconds\n";
    for (const auto& c : results)
      for (const Report& r : c.reports) csv(o, r, "C" + std::to_string(c.number) + "/", timings);
  }
  return o.str();
}

}  // namespace srd::verify
