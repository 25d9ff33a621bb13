// Compares the serial reference classifier with the cell-parallel kernel,
// checks that they produce identical rows, and reports timings.

#include <chrono>
#include <cstdio>
#include <string>
#include <thread>

#include <CLI11.hpp>

#include "covers/classifier.hpp"
#include "covers/datum_parse.hpp"

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

bool same_rows(const covers::ClassificationTable& a,
               const covers::ClassificationTable& b) {
  if (a.rows.size() != b.rows.size()) return false;
  for (std::size_t i = 0; i < a.rows.size(); ++i)
    if (a.rows[i].report.datum != b.rows[i].report.datum) return false;
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"benchmark: serial reference vs cell-parallel classifier"};
  std::int64_t m_max = 24, n_max = 8;
  int repeats = 1;
  app.add_option("--m-max", m_max)->capture_default_str();
  app.add_option("--n-max", n_max)->capture_default_str();
  app.add_option("--repeats", repeats)->capture_default_str();
  CLI11_PARSE(app, argc, argv);

  covers::SearchBounds bounds;
  bounds.m_max = m_max;
  bounds.n_max = n_max;

  const int hw = static_cast<int>(std::thread::hardware_concurrency());
  std::printf("bounds: m <= %lld, 4 <= N <= %lld; hardware threads: %d\n",
              static_cast<long long>(m_max), static_cast<long long>(n_max),
              hw);

  covers::ClassificationTable reference;
  double t_reference = 0;
  for (int r = 0; r < repeats; ++r) {
    auto t0 = std::chrono::steady_clock::now();
    reference = covers::classify_cyclic_reference(bounds);
    t_reference += seconds_since(t0);
  }
  t_reference /= repeats;
  std::printf("%-28s %8.3fs   (%zu rows)\n", "serial reference", t_reference,
              reference.rows.size());

  for (int jobs : {1, 2, hw}) {
    if (jobs <= 0) continue;
    covers::ClassificationTable table;
    double t = 0;
    for (int r = 0; r < repeats; ++r) {
      auto t0 = std::chrono::steady_clock::now();
      table = covers::classify_cyclic(bounds, jobs);
      t += seconds_since(t0);
    }
    t /= repeats;
    std::string label = "parallel, jobs = " + std::to_string(jobs);
    std::printf("%-28s %8.3fs   speedup vs reference: %5.2fx   %s\n",
                label.c_str(), t, t_reference / t,
                same_rows(reference, table) ? "rows match"
                                            : "ROWS DIFFER (BUG)");
    if (!same_rows(reference, table)) return 1;
  }
  return 0;
}
