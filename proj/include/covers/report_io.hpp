#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "covers/classifier.hpp"
#include "covers/dimension.hpp"
#include "covers/pel_exclusion.hpp"

namespace covers {

// All JSON output uses insertion-ordered objects with fixed key order and
// integer values only, so parse + dump is byte-identical.
using OrderedJson = nlohmann::ordered_json;

OrderedJson to_json(const SpecialityReport& report);
OrderedJson to_json(const ExclusionReport& report);
OrderedJson to_json(const ClassificationTable& table);
OrderedJson to_json(const DecompositionReport& report);

std::string dump_json(const OrderedJson& j);  // 2-space indent, trailing \n

// Human-readable renderings.
std::string render_text(const SpecialityReport& report);
std::string summary_line(const SpecialityReport& report);
std::string render_text(const ExclusionReport& report);
std::string render_text(const DecompositionReport& report);
std::string render_table(const ClassificationTable& table, int verbosity = 0);

// CSV renderings, header row included, LF line endings.
std::string render_csv(const SpecialityReport& report);
std::string render_csv(const ExclusionReport& report);
std::string render_csv(const DecompositionReport& report);
std::string render_csv(const ClassificationTable& table);

// A row of a golden table file (CSV with header index,genus,group,N,a).
struct GoldenRow {
  std::int64_t index = 0;
  std::int64_t genus = 0;
  std::string group;
  std::int64_t n_branch = 0;
  std::string a;
};

std::vector<GoldenRow> read_golden_csv(const std::string& path);

// Result of comparing a produced table against a golden file, up to
// equivalence of data. A missing golden row is a failure; produced rows
// absent from the golden file are only reported.
struct DiffResult {
  std::vector<std::string> missing;  // golden rows with no equivalent produced row
  std::vector<std::string> extra;    // produced rows not in the golden file
  std::vector<std::string> errors;   // malformed golden rows, genus mismatches

  bool ok() const { return missing.empty() && errors.empty(); }
  std::string summary(std::int64_t golden_total) const;
};

DiffResult diff_against(const ClassificationTable& table,
                        const std::string& golden_path);

}  // namespace covers
