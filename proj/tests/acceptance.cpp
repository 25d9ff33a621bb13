// Acceptance suite: runs every acceptance criterion end to end (driving the
// CLI binary where the criterion is about the CLI) and prints one PASS/FAIL
// line per criterion.
//
// usage: acceptance <path-to-covers-cli> <golden-dir>

#include <sys/wait.h>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "covers/classifier.hpp"
#include "covers/datum_parse.hpp"
#include "covers/pel_exclusion.hpp"
#include "covers/report_io.hpp"
#include "test_support.hpp"

using namespace covers;
namespace ts = covers::testsupport;

namespace {

std::string g_cli;
std::string g_golden;
int g_failures = 0;

struct CliResult {
  int exit_code = -1;
  std::string output;
};

CliResult run_cli(const std::string& args) {
  std::string cmd = "\"" + g_cli + "\" " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) throw std::runtime_error("popen failed for: " + cmd);
  CliResult r;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.output.append(buf, got);
  int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

void criterion(int number, const std::string& label,
               const std::function<std::string()>& body) {
  auto t0 = std::chrono::steady_clock::now();
  std::string detail;
  bool ok = true;
  try {
    detail = body();
  } catch (const std::exception& e) {
    ok = false;
    detail = e.what();
  }
  double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  std::printf("%s  criterion %d: %s (%s%s%.1fs)\n", ok ? "PASS" : "FAIL",
              number, label.c_str(), detail.c_str(),
              detail.empty() ? "" : ", ", secs);
  if (!ok) ++g_failures;
}

void require(bool cond, const std::string& msg) {
  if (!cond) throw std::runtime_error(msg);
}

std::vector<GoldenRow> parse_csv_rows(const std::string& csv) {
  // write to a temp file and reuse the golden reader
  std::string path = "acceptance_tmp.csv";
  {
    FILE* f = std::fopen(path.c_str(), "w");
    require(f != nullptr, "cannot write temp csv");
    std::fwrite(csv.data(), 1, csv.size(), f);
    std::fclose(f);
  }
  auto rows = read_golden_csv(path);
  std::remove(path.c_str());
  return rows;
}

// ------------------------------------------------------------ criteria --

std::string criterion_1_table1() {
  auto t0 = std::chrono::steady_clock::now();
  CliResult csv = run_cli("classify --m-max 24 --n-max 8 --jobs 4 --format csv");
  double elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  require(csv.exit_code == 0, "classify exited with code " +
                                  std::to_string(csv.exit_code));
  auto rows = parse_csv_rows(csv.output);
  require(rows.size() == 20,
          "expected exactly 20 rows, got " + std::to_string(rows.size()));

  std::multiset<std::int64_t> genera;
  for (const auto& r : rows) genera.insert(r.genus);
  std::multiset<std::int64_t> expected = {1, 2, 2, 2, 2, 3, 3, 3, 3, 4,
                                          4, 4, 4, 4, 5, 6, 6, 6, 7, 7};
  require(genera == expected, "genus multiset differs from the table");

  CliResult diff =
      run_cli("classify --diff-against \"" + g_golden + "/table1.csv\"");
  require(diff.exit_code == 0, "diff-against table1.csv: exit " +
                                   std::to_string(diff.exit_code) + "\n" +
                                   diff.output);

  // worker count must not change a single byte
  CliResult one = run_cli("classify --m-max 24 --n-max 8 --jobs 1 --format csv");
  require(one.output == csv.output, "--jobs 1 and --jobs 4 CSV bytes differ");
  CliResult j1 = run_cli("classify --m-max 24 --n-max 8 --jobs 1 --format json");
  CliResult j4 = run_cli("classify --m-max 24 --n-max 8 --jobs 4 --format json");
  require(j1.output == j4.output, "--jobs 1 and --jobs 4 JSON bytes differ");

  require(elapsed < 60.0, "sweep took too long");
  char buf[64];
  std::snprintf(buf, sizeof buf, "20 rows, diff ok, sweep %.1fs", elapsed);
  return buf;
}

std::string criterion_2_table2() {
  auto t0 = std::chrono::steady_clock::now();
  CliResult diff = run_cli(
      "classify --abelian --groups 2x2,2x4,2x6,3x3 --n-max 6 "
      "--diff-against \"" +
      g_golden + "/table2.csv\"");
  double elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  require(diff.exit_code == 0, "diff-against table2.csv: exit " +
                                   std::to_string(diff.exit_code) + "\n" +
                                   diff.output);
  require(elapsed < 60.0, "sweep took too long");

  // and directly: all 7 reference rows appear in the produced table
  SearchBounds b;
  b.n_max = 6;
  ClassificationTable t = classify_abelian(b, 2);
  std::set<AbelianCoverDatum> produced;
  for (const auto& row : t.rows)
    produced.insert(std::get<AbelianCoverDatum>(row.report.datum));
  for (const auto& ref : reference_special_abelian())
    require(produced.count(ref) == 1, "missing known family " + to_text(ref));
  char buf[64];
  std::snprintf(buf, sizeof buf, "7/7 rows present, sweep %.1fs", elapsed);
  return buf;
}

std::string criterion_3_worked_examples() {
  SpecialityReport r5 = analyze(validate_cyclic(5, 4, {1, 1, 1, 2}));
  require(r5.genus == 4, "g != 4");
  const auto& mv = std::get<MultiplicityVector>(r5.multiplicities);
  require(mv.at(1) == 2 && mv.at(2) == 1 && mv.at(3) == 1 && mv.at(4) == 0,
          "d != (2,1,1,0)");
  require(r5.dim_special == 1 && r5.is_special, "not special of dim 1");

  SpecialityReport r9 = analyze(validate_cyclic(9, 4, {1, 1, 1, 6}));
  require(r9.genus == 7 && r9.dim_special == 1 && r9.is_special,
          "(9,4,(1,1,1,6)) report wrong");

  AbelianCoverDatum ex24 =
      validate_abelian(2, 6, 4, {{1, 0}, {1, 1}, {0, 2}, {0, 3}});
  SpecialityReport r24 = analyze(ex24);
  require(r24.genus == 4 && r24.dim_special == 1 && r24.is_special,
          "abelian 2x6 report wrong");

  DecompositionReport dec = decompose_new_parts(ex24);
  require(dec.zero_pairs == 5 && dec.isotrivial_cm_pairs == 2 &&
              dec.moving_pairs == 1,
          "decomposition counts wrong");
  for (const auto& p : dec.pairs)
    if (p.real)
      require(p.cls == PairClass::Zero, "a real character pair is nonzero");

  // the same through the CLI, as JSON
  CliResult json = run_cli("analyze \"m=5 N=4 a=1,1,1,2\" --format json");
  require(json.exit_code == 0, "analyze exit code");
  OrderedJson j = OrderedJson::parse(json.output);
  require(j["dim_S"] == 1 && j["is_special"] == true && j["genus"] == 4,
          "CLI JSON fields wrong");
  return "";
}

std::string criterion_4_non_special() {
  SpecialityReport r = analyze(validate_cyclic(11, 4, {1, 1, 1, 8}));
  require(!r.is_special, "(11,4,(1,1,1,8)) must not be special");
  require(r.dim_special > 1, "dim S must exceed N-3 = 1");
  CliResult cli = run_cli("analyze \"m=11 N=4 a=1,1,1,8\"");
  require(cli.exit_code == 0, "analyze exit code");
  require(cli.output.find("not special") != std::string::npos,
          "CLI verdict missing");
  return "";
}

std::string criterion_5_property_suite() {
  auto rng = ts::make_rng(505);
  int checked = 0;
  for (int i = 0; i < 1000; ++i) {
    CyclicCoverDatum d = ts::random_cyclic_datum(rng, 60, 10);
    std::int64_t g = genus_cyclic(d);
    MultiplicityVector mv = chevalley_weil_cyclic(d);
    require(mv.total() == g, "sum d_n != g");

    for (std::int64_t n = 1; n < d.m; ++n) {
      std::int64_t moved = 0;
      for (std::int64_t x : d.a)
        if ((n * x) % d.m != 0) ++moved;
      require(mv.at(n) + mv.at(d.m - n) == moved - 2, "pairing identity");
    }

    std::int64_t dim = dim_special_cyclic(mv);
    require(d.branch_count() - 3 <= dim, "N-3 > dim S");

    std::int64_t delta_sum = 0;
    for (const auto& f : adjoint_decomposition(mv)) delta_sum += f.delta();
    require(dim == delta_sum, "dim != sum of deltas");

    CyclicCoverDatum e = ts::apply_unit_and_shuffle(rng, d);
    MultiplicityVector mve = chevalley_weil_cyclic(e);
    require(genus_cyclic(e) == g, "genus not invariant");
    require(dim_special_cyclic(mve) == dim, "dim not invariant");
    std::multiset<std::pair<std::int64_t, std::int64_t>> pd, pe;
    for (std::int64_t n = 1; n <= d.m / 2; ++n) {
      auto norm = [](std::int64_t a, std::int64_t b) {
        return a <= b ? std::make_pair(a, b) : std::make_pair(b, a);
      };
      pd.insert(norm(mv.at(n), mv.at(d.m - n)));
      pe.insert(norm(mve.at(n), mve.at(d.m - n)));
    }
    require(pd == pe, "pair multiset not invariant");
    ++checked;
  }
  return std::to_string(checked) + " data, zero violations";
}

std::string criterion_6_oracles() {
  for (std::int64_t m = 2; m <= 6; ++m)
    for (std::int64_t n = 4; n <= 5; ++n) {
      std::set<std::vector<std::int64_t>> expected =
          ts::brute_force_class_keys(m, n);
      SearchBounds b;
      b.m_max = m;
      b.n_max = n;
      std::set<std::vector<std::int64_t>> got;
      enumerate_cyclic(b, [&](const CyclicCoverDatum& d) {
        if (d.m == m && d.branch_count() == n) got.insert(d.a);
      });
      require(got == expected,
              "class sets differ at m=" + std::to_string(m) +
                  " N=" + std::to_string(n));
    }

  auto rng = ts::make_rng(606);
  for (int i = 0; i < 500; ++i) {
    CyclicCoverDatum d = ts::random_cyclic_datum(rng);
    require(genus_cyclic(d) == ts::rh_genus_oracle_cyclic(d),
            "cyclic genus oracle mismatch");
  }
  for (int i = 0; i < 500; ++i) {
    AbelianCoverDatum d = ts::random_abelian_datum(rng);
    require(genus_abelian(d) == ts::rh_genus_oracle_abelian(d),
            "abelian genus oracle mismatch");
  }
  return "";
}

std::string criterion_7_exclusion() {
  for (std::int64_t g = 5; g <= 40; ++g)
    require(exclude_type_I(g).all_excluded,
            "type I not all-excluded at g = " + std::to_string(g));
  for (std::int64_t g = 10; g <= 40; g += 2) {
    ExclusionReport r = exclude_type_II(g);
    require(r.all_excluded,
            "type II not all-excluded at g = " + std::to_string(g));
    for (const auto& c : r.cases)
      require(!c.check_failed, "CHECK-FAILED at g = " + std::to_string(g));
  }

  ExclusionReport g4 = exclude_type_I(4);
  bool some_open = false;
  for (const auto& c : g4.cases)
    if (c.verdict == CaseVerdict::NotExcludedByTheseArguments)
      some_open = true;
  require(some_open && !g4.all_excluded,
          "type I g=4 must not be fully excluded");

  ExclusionReport g8 = exclude_type_II(8);
  require(!g8.all_excluded, "type II g=8 must not be fully excluded");

  CliResult cli = run_cli("exclude --type I --g 6");
  require(cli.exit_code == 0 &&
              cli.output.find("every case excluded") != std::string::npos,
          "CLI exclusion trace wrong");
  return "";
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 3) {
    std::fprintf(stderr, "usage: acceptance <covers-cli> <golden-dir>\n");
    return 2;
  }
  g_cli = argv[1];
  g_golden = argv[2];

  criterion(1, "cyclic classification reproduces the 20-row table",
            criterion_1_table1);
  criterion(2, "abelian classification reproduces the 7 known rows",
            criterion_2_table2);
  criterion(3, "worked examples (analyze + decompose)",
            criterion_3_worked_examples);
  criterion(4, "non-special family (11,4,(1,1,1,8))", criterion_4_non_special);
  criterion(5, "randomized property suite", criterion_5_property_suite);
  criterion(6, "oracle equivalence on small windows", criterion_6_oracles);
  criterion(7, "Albert type I/II exclusion sweeps", criterion_7_exclusion);

  if (g_failures) {
    std::printf("%d criterion(s) FAILED\n", g_failures);
    return 1;
  }
  std::printf("all acceptance criteria passed\n");
  return 0;
}
