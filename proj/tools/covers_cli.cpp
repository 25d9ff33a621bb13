#include <cstdlib>
#include <iostream>
#include <string>
#include <thread>
#include <variant>

#include <CLI11.hpp>

#include "covers/classifier.hpp"
#include "covers/datum_parse.hpp"
#include "covers/dimension.hpp"
#include "covers/pel_exclusion.hpp"
#include "covers/report_io.hpp"

namespace {

int default_jobs() {
  if (const char* env = std::getenv("COVERS_JOBS")) {
    int v = std::atoi(env);
    if (v > 0) return v;
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? static_cast<int>(hw) : 1;
}

std::vector<std::pair<std::int64_t, std::int64_t>> parse_groups(
    const std::string& arg) {
  std::vector<std::pair<std::int64_t, std::int64_t>> groups;
  std::size_t pos = 0;
  while (pos < arg.size()) {
    std::size_t comma = arg.find(',', pos);
    std::string item = arg.substr(
        pos, comma == std::string::npos ? std::string::npos : comma - pos);
    std::size_t x = item.find('x');
    if (x == std::string::npos)
      throw covers::ParseError(pos, "group must look like 2x6, got '" +
                                        item + "'");
    groups.emplace_back(std::stoll(item.substr(0, x)),
                        std::stoll(item.substr(x + 1)));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  if (groups.empty())
    throw covers::ParseError(0, "empty group list");
  return groups;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "exact-arithmetic tool for families of abelian covers of the "
      "projective line: genus, eigenspace multiplicities, PEL special "
      "subvariety dimension, and the classification of special families"};
  app.require_subcommand(1);

  std::string format = "table";
  std::string datum_text;
  int verbosity = 0;

  auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"table", "csv", "json"}))
        ->capture_default_str();
  };

  CLI::App* analyze_cmd = app.add_subcommand(
      "analyze", "report genus, multiplicities, dim S and the speciality "
                 "verdict for one datum");
  analyze_cmd->add_option("datum", datum_text,
                          "e.g. \"m=5 N=4 a=1,1,1,2\" or "
                          "\"A=2x6 N=4 a=(1,0),(1,1),(0,2),(0,3)\"")
      ->required();
  add_format(analyze_cmd);

  CLI::App* classify_cmd = app.add_subcommand(
      "classify", "enumerate equivalence classes in a search window and "
                  "list every special family");
  bool abelian = false;
  std::int64_t m_max = 24, n_max = 8;
  std::int64_t genus_max = -1;
  std::string groups_spec = "2x2,2x4,2x6,3x3";
  std::string diff_path;
  int jobs = default_jobs();
  classify_cmd->add_flag("--abelian", abelian,
                         "sweep rank-2 abelian groups instead of cyclic ones");
  classify_cmd->add_option("--m-max", m_max, "largest cyclic group order")
      ->capture_default_str();
  classify_cmd->add_option("--n-max", n_max, "largest branch point count")
      ->capture_default_str();
  classify_cmd->add_option("--groups", groups_spec,
                           "abelian groups to sweep, e.g. 2x2,2x4")
      ->capture_default_str();
  classify_cmd->add_option("--genus-max", genus_max,
                           "drop candidates above this genus (off by default)");
  classify_cmd->add_option("--jobs", jobs,
                           "parallel workers (default: COVERS_JOBS or all "
                           "hardware threads)");
  classify_cmd->add_option("--diff-against", diff_path,
                           "compare against a golden CSV table and exit "
                           "nonzero on mismatch");
  classify_cmd->add_flag("-v,--verbose", verbosity,
                         "also print the wall-clock stamp");
  add_format(classify_cmd);

  CLI::App* exclude_cmd = app.add_subcommand(
      "exclude", "Albert type I/II exclusion arithmetic for one genus");
  std::string albert_type;
  std::int64_t exclusion_genus = 0;
  exclude_cmd->add_option("--type", albert_type, "Albert type, I or II")
      ->check(CLI::IsMember({"I", "II"}))
      ->required();
  exclude_cmd->add_option("--g", exclusion_genus, "genus")->required();
  add_format(exclude_cmd);

  CLI::App* decompose_cmd = app.add_subcommand(
      "decompose", "character-orbit decomposition of the family of "
                   "Jacobians for one datum");
  decompose_cmd->add_option("datum", datum_text, "datum text, as for analyze")
      ->required();
  add_format(decompose_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (*analyze_cmd) {
      auto datum = covers::parse_datum(datum_text);
      covers::SpecialityReport report = std::visit(
          [](const auto& d) { return covers::analyze(d); }, datum);
      if (format == "json")
        std::cout << covers::dump_json(covers::to_json(report));
      else if (format == "csv")
        std::cout << covers::render_csv(report);
      else
        std::cout << covers::render_text(report)
                  << covers::summary_line(report) << "\n";
      return 0;
    }

    if (*classify_cmd) {
      covers::SearchBounds bounds;
      bounds.m_max = m_max;
      bounds.n_max = n_max;
      if (genus_max >= 0) bounds.genus_max = genus_max;
      if (abelian) bounds.groups = parse_groups(groups_spec);
      covers::ClassificationTable table =
          abelian ? covers::classify_abelian(bounds, jobs)
                  : covers::classify_cyclic(bounds, jobs);
      if (!diff_path.empty()) {
        covers::DiffResult diff = covers::diff_against(table, diff_path);
        std::int64_t golden_total = static_cast<std::int64_t>(
            covers::read_golden_csv(diff_path).size());
        std::cout << diff.summary(golden_total);
        return diff.ok() ? 0 : 2;
      }
      if (format == "json")
        std::cout << covers::dump_json(covers::to_json(table));
      else if (format == "csv")
        std::cout << covers::render_csv(table);
      else
        std::cout << covers::render_table(table, verbosity);
      return 0;
    }

    if (*exclude_cmd) {
      covers::ExclusionReport report =
          albert_type == "I" ? covers::exclude_type_I(exclusion_genus)
                             : covers::exclude_type_II(exclusion_genus);
      if (format == "json")
        std::cout << covers::dump_json(covers::to_json(report));
      else if (format == "csv")
        std::cout << covers::render_csv(report);
      else
        std::cout << covers::render_text(report);
      return 0;
    }

    if (*decompose_cmd) {
      auto datum = covers::parse_datum(datum_text);
      covers::DecompositionReport report = std::visit(
          [](const auto& d) { return covers::decompose_new_parts(d); }, datum);
      if (format == "json")
        std::cout << covers::dump_json(covers::to_json(report));
      else if (format == "csv")
        std::cout << covers::render_csv(report);
      else
        std::cout << covers::render_text(report);
      return 0;
    }
  } catch (const covers::InternalInvariantError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  } catch (const covers::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const covers::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
