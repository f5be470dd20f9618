#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "srd/atlas.hpp"
#include "srd/codes.hpp"
#include "srd/survey.hpp"

namespace srd::verify {

using gf::Field;
using gf::FieldPtr;
using inv::Dist;
using pg::Subspace;
using pg::Vec;

enum class Status { Pass, Fail, PaperDiscrepancy, Sampled, Skipped };

/// "pass", "fail", "paper-discrepancy", "consistent (sampled)", "skipped".
const char* to_string(Status s);

struct Check {
  std::string id;
  std::string anchor;  // the table row or result being checked
  std::string expected;
  std::string computed;
  Status status = Status::Pass;
  std::string note;
};

struct Report {
  std::string driver;
  std::string title;
  std::string field;
  std::vector<Check> checks;
  /// Enumeration sizes, e.g. {"planes", 376805}.
  std::vector<std::pair<std::string, std::uint64_t>> sizes;
  std::vector<std::string> notes;
  double seconds = 0;

  /// Fail if any check failed, else Sampled if any check is sampled, else
  /// Pass; Skipped when there are no checks.
  Status status() const;
};

struct Options {
  unsigned jobs = 1;
  /// Largest exact enumeration; bigger families are sampled.
  std::uint64_t budget = pg::kDefaultBudget;
  std::uint64_t sample = 100000;
  std::uint64_t seed = 20240607;
};

/// Per-field state shared by the drivers: lookup tables, surveys and orbit
/// sizes are computed once.
class Context {
 public:
  Context(FieldPtr field, Options opts);

  const Field& field() const { return *field_; }
  const FieldPtr& field_ptr() const { return field_; }
  const Options& options() const { return opts_; }
  unsigned q() const { return field_->q(); }
  bool even() const { return field_->even(); }
  atlas::Parity parity() const { return even() ? atlas::Parity::Even : atlas::Parity::Odd; }

  const inv::Geometry& geometry();
  /// Survey of all subspaces of the given dimension (sampled past the budget).
  const survey::Survey& subspaces(int projdim);
  /// `sample` seeded draws regardless of the budget.
  const survey::Survey& sampled_subspaces(int projdim);
  /// Orbit size by BFS, cached. Every member's OD0 and OD4 is compared
  /// with the representative's and mismatches are tallied.
  std::uint64_t orbit_size(const Subspace& w);

  struct OrbitTally {
    std::uint64_t orbits = 0, members = 0, violations = 0;
  };
  const OrbitTally& orbit_tally() const { return tally_; }

 private:
  FieldPtr field_;
  Options opts_;
  std::unique_ptr<inv::Geometry> geo_;
  std::map<int, survey::Survey> full_, sampled_;
  std::unordered_map<Subspace, std::uint64_t, pg::SubspaceHash> orbit_sizes_;
  OrbitTally tally_;
};

Report tables(Context& ctx);
Report census(Context& ctx);
Report solids(Context& ctx);
Report unique_plane_orbits(Context& ctx);
Report r2n_equals_h1(Context& ctx);
Report completeness(Context& ctx);
Report class_counts(Context& ctx);
Report net_corollaries(Context& ctx);
Report trace_form_code(Context& ctx);
Report constant_rank3(Context& ctx);
Report properties(Context& ctx);

struct Driver {
  std::string id;
  std::string title;
  Report (*run)(Context&);
  /// Whether the driver has anything to check over this field.
  bool (*applies)(const Field&);
};

const std::vector<Driver>& drivers();
const Driver* find_driver(std::string_view id);

/// Runs the driver, or returns a Skipped report when it does not apply.
Report run_driver(const Driver& d, Context& ctx);

struct CriterionResult {
  int number = 0;
  std::string title;
  Status status = Status::Skipped;
  std::vector<Report> reports;
  std::string summary() const;
};

struct Criterion {
  int number;
  std::string title;
  std::vector<std::string> drivers;
  std::vector<unsigned> default_fields;
  /// Restricts the fields a criterion runs on (e.g. parity).
  bool (*accepts)(const Field&);
};

const std::vector<Criterion>& criteria();

/// Runs every criterion over `fields` (or each criterion's defaults when
/// empty), sharing one Context per field.
std::vector<CriterionResult> acceptance(const std::vector<std::string>& fields, const Options& opts);

enum class Format { Json, Markdown, Csv };

std::string render(const std::vector<Report>& reports, Format fmt, bool timings);
std::string render(const std::vector<CriterionResult>& results, Format fmt, bool timings);

}  // namespace srd::verify
