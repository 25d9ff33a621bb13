#include "covers/classifier.hpp"

#include <algorithm>
#include <chrono>
#include <ctime>
#include <numeric>
#include <stdexcept>

#if defined(_OPENMP)
#include <omp.h>
#endif

#include "covers/modular.hpp"

namespace covers {

namespace {

std::string iso_timestamp_utc() {
  std::time_t t =
      std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  char buf[32];
  std::tm tm_utc{};
  gmtime_r(&t, &tm_utc);
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm_utc);
  return buf;
}

int resolve_jobs(int jobs) {
#if defined(_OPENMP)
  return jobs > 0 ? jobs : omp_get_max_threads();
#else
  (void)jobs;
  return 1;
#endif
}

void check_bounds(const SearchBounds& b) {
  if (b.m_max < 2) throw std::invalid_argument("m_max must be >= 2");
  if (b.n_max < 4) throw std::invalid_argument("n_max must be >= 4");
}

// ---------------------------------------------------------------- cyclic --

struct CyclicTables {
  std::int64_t m = 0;
  std::vector<std::int64_t> units;
  // neg[v][n] = (-(n v)) mod m; adding these per chosen entry accumulates
  // the Chevalley-Weil fractional sums scaled by m.
  std::vector<std::vector<std::int64_t>> neg;
};

CyclicTables make_cyclic_tables(std::int64_t m) {
  CyclicTables t;
  t.m = m;
  t.units = units_mod(m);
  t.neg.assign(m, std::vector<std::int64_t>(m, 0));
  for (std::int64_t v = 0; v < m; ++v)
    for (std::int64_t n = 0; n < m; ++n)
      t.neg[v][n] = (m - (n * v) % m) % m;
  return t;
}

// True iff the sorted tuple is the least element of its orbit under unit
// multiplication followed by sorting.
bool is_canonical_sorted(const std::vector<std::int64_t>& a,
                         const CyclicTables& t,
                         std::vector<std::int64_t>& scratch) {
  scratch.resize(a.size());
  for (std::int64_t u : t.units) {
    if (u == 1) continue;
    for (std::size_t i = 0; i < a.size(); ++i)
      scratch[i] = (u * a[i]) % t.m;
    std::sort(scratch.begin(), scratch.end());
    if (scratch < a) return false;
  }
  return true;
}

// Scans the nondecreasing monodromy tuples of one (m, N, a_1) cell, closing
// the last entry from the running sum, and hands every valid completion to
// the leaf callback together with its multiplicity vector, genus and dim S.
template <typename Leaf>
class CyclicCellScan {
 public:
  CyclicCellScan(const CyclicTables& t, std::int64_t n_branch, bool prune,
                 std::optional<std::int64_t> genus_max, Leaf& leaf)
      : t_(t),
        m_(t.m),
        n_(n_branch),
        prune_(prune),
        genus_max_(genus_max),
        leaf_(leaf),
        frac_(t.m, 0),
        d_(t.m, 0) {
    a_.reserve(n_branch);
    gcd_stack_.reserve(n_branch);
  }

  std::int64_t run(std::int64_t a1) {
    candidates_ = 0;
    push(a1);
    rec();
    pop(a1);
    return candidates_;
  }

 private:
  void push(std::int64_t v) {
    a_.push_back(v);
    const auto& row = t_.neg[v];
    for (std::int64_t n = 1; n < m_; ++n) frac_[n] += row[n];
    sum_ = (sum_ + v) % m_;
    std::int64_t g = std::gcd(v, m_);
    gcd_stack_.push_back(gcd_all_);
    gcd_all_ = std::gcd(gcd_all_, g);
    gcd_sum_ += g;
  }

  void pop(std::int64_t v) {
    a_.pop_back();
    const auto& row = t_.neg[v];
    for (std::int64_t n = 1; n < m_; ++n) frac_[n] -= row[n];
    sum_ = mod_floor(sum_ - v, m_);
    gcd_all_ = gcd_stack_.back();
    gcd_stack_.pop_back();
    gcd_sum_ -= std::gcd(v, m_);
  }

  // Every completion only adds nonnegative fractional parts, so
  // ceil(frac/m) - 1 bounds each d_n from below and the pair products bound
  // dim S. Subtrees whose bound already exceeds N - 3 cannot contain a
  // special tuple.
  std::int64_t dim_lower_bound() const {
    auto lb = [&](std::int64_t n) {
      std::int64_t v = (frac_[n] + m_ - 1) / m_ - 1;
      return v > 0 ? v : std::int64_t{0};
    };
    std::int64_t dim = 0;
    for (std::int64_t n = 1; n <= (m_ - 1) / 2; ++n) dim += lb(n) * lb(m_ - n);
    if (m_ % 2 == 0) {
      std::int64_t k = lb(m_ / 2);
      dim += k * (k + 1) / 2;
    }
    return dim;
  }

  void rec() {
    if (static_cast<std::int64_t>(a_.size()) == n_ - 1) {
      close();
      return;
    }
    for (std::int64_t v = a_.back(); v < m_; ++v) {
      push(v);
      if (!prune_ || dim_lower_bound() <= n_ - 3) rec();
      pop(v);
    }
  }

  void close() {
    const std::int64_t last = (m_ - sum_) % m_;
    if (last == 0 || last < a_.back()) return;
    if (std::gcd(gcd_all_, std::gcd(last, m_)) != 1) return;
    ++candidates_;
    const std::int64_t genus =
        1 + ((n_ - 2) * m_ - (gcd_sum_ + std::gcd(last, m_))) / 2;
    if (genus_max_ && genus > *genus_max_) return;
    const auto& row = t_.neg[last];
    for (std::int64_t n = 1; n < m_; ++n)
      d_[n] = (frac_[n] + row[n]) / m_ - 1;
    std::int64_t dim = 0;
    for (std::int64_t n = 1; n <= (m_ - 1) / 2; ++n) dim += d_[n] * d_[m_ - n];
    if (m_ % 2 == 0) dim += d_[m_ / 2] * (d_[m_ / 2] + 1) / 2;
    a_.push_back(last);
    leaf_(a_, d_, genus, dim);
    a_.pop_back();
  }

  const CyclicTables& t_;
  const std::int64_t m_, n_;
  const bool prune_;
  const std::optional<std::int64_t> genus_max_;
  Leaf& leaf_;
  std::vector<std::int64_t> a_;
  std::vector<std::int64_t> frac_;
  std::vector<std::int64_t> d_;
  std::vector<std::int64_t> gcd_stack_;
  std::int64_t sum_ = 0, gcd_sum_ = 0;
  std::int64_t gcd_all_ = 0;
  std::int64_t candidates_ = 0;
};

struct CyclicCell {
  std::int64_t m, n_branch, a1;
};

std::vector<CyclicCell> cyclic_cells(const SearchBounds& b) {
  std::vector<CyclicCell> cells;
  for (std::int64_t m = 2; m <= b.m_max; ++m)
    for (std::int64_t n = 4; n <= b.n_max; ++n)
      for (std::int64_t a1 = 1; a1 < m; ++a1)
        cells.push_back(CyclicCell{m, n, a1});
  return cells;
}

// ------------------------------------------------------------ row merging --

struct RowKey {
  std::int64_t genus = 0, g1 = 0, g2 = 0, n = 0;
  std::vector<std::int64_t> a;

  friend auto operator<=>(const RowKey&, const RowKey&) = default;
};

RowKey key_of(const SpecialityReport& r) {
  RowKey k;
  k.genus = r.genus;
  if (const auto* c = std::get_if<CyclicCoverDatum>(&r.datum)) {
    k.g1 = c->m;
    k.n = c->branch_count();
    k.a = c->a;
  } else {
    const auto& ab = std::get<AbelianCoverDatum>(r.datum);
    k.g1 = ab.m1;
    k.g2 = ab.m2;
    k.n = ab.branch_count();
    for (const auto& p : ab.a) k.a.push_back(p.first * ab.m2 + p.second);
  }
  return k;
}

ClassificationTable assemble_table(
    bool abelian, const SearchBounds& bounds, std::vector<TableRow> rows,
    std::int64_t candidates,
    std::chrono::steady_clock::time_point started_at) {
  std::sort(rows.begin(), rows.end(), [](const TableRow& x, const TableRow& y) {
    return key_of(x.report) < key_of(y.report);
  });
  for (std::size_t i = 0; i < rows.size(); ++i)
    rows[i].index = static_cast<std::int64_t>(i) + 1;

  ClassificationTable table;
  table.abelian = abelian;
  table.rows = std::move(rows);
  table.bounds = bounds;
  table.candidates_examined = candidates;
  table.generated_at = iso_timestamp_utc();
  table.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                    started_at)
          .count();
  return table;
}

std::vector<std::string> cyclic_row_notes(const CyclicCoverDatum& canonical) {
  std::vector<std::string> notes;
  const auto& ref = reference_special_cyclic();
  if (canonical == ref[6] || canonical == ref[11])
    notes.push_back("also a Teichmuller curve");
  return notes;
}

std::vector<std::string> abelian_row_notes(const AbelianCoverDatum& canonical) {
  std::vector<std::string> notes;
  const auto& ref = reference_special_abelian();
  if (std::find(ref.begin(), ref.end(), canonical) == ref.end())
    notes.push_back("not in the reference table of known special families");
  return notes;
}

// --------------------------------------------------------------- abelian --

struct AbelianTables {
  std::int64_t m1 = 0, m2 = 0, order = 0;
  std::vector<std::int64_t> elem_order;  // order of the element with code i
  std::vector<std::int64_t> conj;        // code of the conjugate character
  // neg_exp[v][chi] = (-(pairing exponent of chi at element v)) mod m2
  std::vector<std::vector<std::int64_t>> neg_exp;
  std::vector<GroupAutomorphism> auts;
};

AbelianTables make_abelian_tables(std::int64_t m1, std::int64_t m2,
                                  std::int64_t aut_bound) {
  AbelianTables t;
  t.m1 = m1;
  t.m2 = m2;
  t.order = m1 * m2;
  t.elem_order.resize(t.order);
  t.conj.resize(t.order);
  t.neg_exp.assign(t.order, std::vector<std::int64_t>(t.order, 0));
  const std::int64_t scale = m2 / m1;
  for (std::int64_t x1 = 0; x1 < m1; ++x1)
    for (std::int64_t x2 = 0; x2 < m2; ++x2) {
      std::int64_t v = x1 * m2 + x2;
      t.elem_order[v] = pair_order(m1, m2, {x1, x2});
      t.conj[v] = mod_floor(-x1, m1) * m2 + mod_floor(-x2, m2);
      for (std::int64_t c1 = 0; c1 < m1; ++c1)
        for (std::int64_t c2 = 0; c2 < m2; ++c2) {
          std::int64_t e = mod_floor(c1 * x1 * scale + c2 * x2, m2);
          t.neg_exp[v][c1 * m2 + c2] = (m2 - e) % m2;
        }
    }
  t.auts = automorphisms(m1, m2, aut_bound);
  return t;
}

bool is_canonical_codes(const std::vector<std::int64_t>& codes,
                        const AbelianTables& t,
                        std::vector<std::int64_t>& scratch) {
  scratch.resize(codes.size());
  for (const auto& phi : t.auts) {
    for (std::size_t i = 0; i < codes.size(); ++i)
      scratch[i] = phi.code_map[codes[i]];
    std::sort(scratch.begin(), scratch.end());
    if (scratch < codes) return false;
  }
  return true;
}

// Membership table of the subgroup generated by the subgroup `base` plus one
// element: the union of the translates of `base` by multiples of the element.
std::vector<char> closure_with(const AbelianTables& t, std::vector<char> s,
                               std::int64_t code) {
  const std::int64_t m1 = t.m1, m2 = t.m2;
  std::vector<std::int64_t> members;
  for (std::int64_t c = 0; c < t.order; ++c)
    if (s[c]) members.push_back(c);
  const std::int64_t x1 = code / m2, x2 = code % m2;
  std::int64_t y1 = 0, y2 = 0;
  for (std::int64_t k = 1; k < t.elem_order[code]; ++k) {
    y1 = (y1 + x1) % m1;
    y2 = (y2 + x2) % m2;
    for (std::int64_t c : members) {
      std::int64_t cc = ((c / m2 + y1) % m1) * m2 + ((c % m2 + y2) % m2);
      s[cc] = 1;
    }
  }
  return s;
}

bool closure_is_full(const AbelianTables& t, const std::vector<char>& s) {
  return std::count(s.begin(), s.end(), 1) ==
         static_cast<std::ptrdiff_t>(t.order);
}

template <typename Leaf>
class AbelianCellScan {
 public:
  AbelianCellScan(const AbelianTables& t, std::int64_t n_branch,
                  std::optional<std::int64_t> genus_max, Leaf& leaf)
      : t_(t), n_(n_branch), genus_max_(genus_max), leaf_(leaf),
        frac_(t.order, 0), d_(t.order, 0) {
    codes_.reserve(n_branch);
    std::vector<char> trivial(t.order, 0);
    trivial[0] = 1;
    closure_stack_.push_back(std::move(trivial));
  }

  std::int64_t run(std::int64_t a1) {
    candidates_ = 0;
    push(a1);
    rec();
    pop(a1);
    return candidates_;
  }

 private:
  void push(std::int64_t v) {
    codes_.push_back(v);
    const auto& row = t_.neg_exp[v];
    for (std::int64_t chi = 1; chi < t_.order; ++chi) frac_[chi] += row[chi];
    s1_ = (s1_ + v / t_.m2) % t_.m1;
    s2_ = (s2_ + v % t_.m2) % t_.m2;
    std::int64_t e = t_.elem_order[v];
    ram_ += (t_.order / e) * (e - 1);
    closure_stack_.push_back(closure_with(t_, closure_stack_.back(), v));
  }

  void pop(std::int64_t v) {
    codes_.pop_back();
    const auto& row = t_.neg_exp[v];
    for (std::int64_t chi = 1; chi < t_.order; ++chi) frac_[chi] -= row[chi];
    s1_ = mod_floor(s1_ - v / t_.m2, t_.m1);
    s2_ = mod_floor(s2_ - v % t_.m2, t_.m2);
    std::int64_t e = t_.elem_order[v];
    ram_ -= (t_.order / e) * (e - 1);
    closure_stack_.pop_back();
  }

  void rec() {
    if (static_cast<std::int64_t>(codes_.size()) == n_ - 1) {
      close();
      return;
    }
    for (std::int64_t v = codes_.back(); v < t_.order; ++v) {
      push(v);
      rec();
      pop(v);
    }
  }

  void close() {
    const std::int64_t l1 = mod_floor(-s1_, t_.m1);
    const std::int64_t l2 = mod_floor(-s2_, t_.m2);
    const std::int64_t last = l1 * t_.m2 + l2;
    if (last == 0 || last < codes_.back()) return;
    auto full = closure_with(t_, closure_stack_.back(), last);
    if (!closure_is_full(t_, full)) return;
    ++candidates_;
    std::int64_t e = t_.elem_order[last];
    std::int64_t twice = ram_ + (t_.order / e) * (e - 1) - 2 * t_.order;
    std::int64_t genus = 1 + twice / 2;
    if (genus_max_ && genus > *genus_max_) return;
    const auto& row = t_.neg_exp[last];
    for (std::int64_t chi = 1; chi < t_.order; ++chi)
      d_[chi] = (frac_[chi] + row[chi]) / t_.m2 - 1;
    std::int64_t dim = 0;
    for (std::int64_t chi = 1; chi < t_.order; ++chi) {
      std::int64_t cc = t_.conj[chi];
      if (cc == chi)
        dim += d_[chi] * (d_[chi] + 1) / 2;
      else if (chi < cc)
        dim += d_[chi] * d_[cc];
    }
    codes_.push_back(last);
    leaf_(codes_, d_, genus, dim);
    codes_.pop_back();
  }

  const AbelianTables& t_;
  const std::int64_t n_;
  const std::optional<std::int64_t> genus_max_;
  Leaf& leaf_;
  std::vector<std::int64_t> codes_;
  std::vector<std::int64_t> frac_;
  std::vector<std::int64_t> d_;
  std::vector<std::vector<char>> closure_stack_;
  std::int64_t s1_ = 0, s2_ = 0, ram_ = 0;
  std::int64_t candidates_ = 0;
};

AbelianCoverDatum datum_from_codes(std::int64_t m1, std::int64_t m2,
                                   const std::vector<std::int64_t>& codes) {
  AbelianCoverDatum d;
  d.m1 = m1;
  d.m2 = m2;
  d.a.reserve(codes.size());
  for (std::int64_t c : codes) d.a.emplace_back(c / m2, c % m2);
  return d;
}

struct AbelianCell {
  std::size_t group;
  std::int64_t n_branch, a1;
};

}  // namespace

// ------------------------------------------------------------ public API --

void enumerate_cyclic(
    const SearchBounds& bounds,
    const std::function<void(const CyclicCoverDatum&)>& sink) {
  check_bounds(bounds);
  std::vector<std::int64_t> scratch;
  for (std::int64_t m = 2; m <= bounds.m_max; ++m) {
    CyclicTables tables = make_cyclic_tables(m);
    for (std::int64_t n = 4; n <= bounds.n_max; ++n) {
      auto leaf = [&](const std::vector<std::int64_t>& a,
                      const std::vector<std::int64_t>&, std::int64_t,
                      std::int64_t) {
        if (is_canonical_sorted(a, tables, scratch))
          sink(CyclicCoverDatum{m, a});
      };
      CyclicCellScan scan(tables, n, /*prune=*/false, bounds.genus_max, leaf);
      for (std::int64_t a1 = 1; a1 < m; ++a1) scan.run(a1);
    }
  }
}

std::vector<CyclicCoverDatum> enumerate_cyclic(const SearchBounds& bounds) {
  std::vector<CyclicCoverDatum> out;
  enumerate_cyclic(bounds, [&](const CyclicCoverDatum& d) { out.push_back(d); });
  return out;
}

ClassificationTable classify_cyclic(const SearchBounds& bounds, int jobs) {
  check_bounds(bounds);
  const auto started = std::chrono::steady_clock::now();
  const std::vector<CyclicCell> cells = cyclic_cells(bounds);

  std::vector<CyclicTables> tables(bounds.m_max + 1);
  for (std::int64_t m = 2; m <= bounds.m_max; ++m)
    tables[m] = make_cyclic_tables(m);

  std::vector<std::vector<TableRow>> cell_rows(cells.size());
  std::vector<std::int64_t> cell_candidates(cells.size(), 0);

  const int threads = resolve_jobs(jobs);
  (void)threads;
#if defined(_OPENMP)
#pragma omp parallel for schedule(dynamic) num_threads(threads)
#endif
  for (std::int64_t ci = 0; ci < static_cast<std::int64_t>(cells.size());
       ++ci) {
    const CyclicCell& cell = cells[ci];
    const CyclicTables& t = tables[cell.m];
    std::vector<std::int64_t> scratch;
    auto leaf = [&](const std::vector<std::int64_t>& a,
                    const std::vector<std::int64_t>&, std::int64_t,
                    std::int64_t dim) {
      if (dim != cell.n_branch - 3) return;
      if (!is_canonical_sorted(a, t, scratch)) return;
      TableRow row;
      row.report = analyze(CyclicCoverDatum{cell.m, a});
      row.notes = cyclic_row_notes(std::get<CyclicCoverDatum>(row.report.datum));
      cell_rows[ci].push_back(std::move(row));
    };
    CyclicCellScan scan(t, cell.n_branch, /*prune=*/true, bounds.genus_max,
                        leaf);
    cell_candidates[ci] = scan.run(cell.a1);
  }

  std::vector<TableRow> rows;
  std::int64_t candidates = 0;
  for (std::size_t ci = 0; ci < cells.size(); ++ci) {
    candidates += cell_candidates[ci];
    for (auto& r : cell_rows[ci]) rows.push_back(std::move(r));
  }
  return assemble_table(/*abelian=*/false, bounds, std::move(rows), candidates,
                        started);
}

ClassificationTable classify_cyclic_reference(const SearchBounds& bounds) {
  check_bounds(bounds);
  const auto started = std::chrono::steady_clock::now();
  std::vector<TableRow> rows;
  std::int64_t classes = 0;
  enumerate_cyclic(bounds, [&](const CyclicCoverDatum& d) {
    ++classes;
    SpecialityReport report = analyze(d);
    if (!report.is_special) return;
    TableRow row;
    row.notes = cyclic_row_notes(std::get<CyclicCoverDatum>(report.datum));
    row.report = std::move(report);
    rows.push_back(std::move(row));
  });
  return assemble_table(/*abelian=*/false, bounds, std::move(rows), classes,
                        started);
}

ClassificationTable classify_abelian(const SearchBounds& bounds, int jobs) {
  if (bounds.n_max < 4) throw std::invalid_argument("n_max must be >= 4");
  const auto started = std::chrono::steady_clock::now();

  std::vector<AbelianTables> tables;
  tables.reserve(bounds.groups.size());
  std::vector<AbelianCell> cells;
  for (std::size_t gi = 0; gi < bounds.groups.size(); ++gi) {
    auto [m1, m2] = bounds.groups[gi];
    if (m1 < 2 || m2 < m1 || m2 % m1 != 0)
      throw ValidationError(ValidationError::Code::RejectModulus,
                            "bad group " + std::to_string(m1) + "x" +
                                std::to_string(m2) + " in group list");
    tables.push_back(make_abelian_tables(m1, m2, bounds.aut_bound));
    for (std::int64_t n = 4; n <= bounds.n_max; ++n)
      for (std::int64_t a1 = 1; a1 < m1 * m2; ++a1)
        cells.push_back(AbelianCell{gi, n, a1});
  }

  std::vector<std::vector<TableRow>> cell_rows(cells.size());
  std::vector<std::int64_t> cell_candidates(cells.size(), 0);

  const int threads = resolve_jobs(jobs);
  (void)threads;
#if defined(_OPENMP)
#pragma omp parallel for schedule(dynamic) num_threads(threads)
#endif
  for (std::int64_t ci = 0; ci < static_cast<std::int64_t>(cells.size());
       ++ci) {
    const AbelianCell& cell = cells[ci];
    const AbelianTables& t = tables[cell.group];
    std::vector<std::int64_t> scratch;
    auto leaf = [&](const std::vector<std::int64_t>& codes,
                    const std::vector<std::int64_t>&, std::int64_t,
                    std::int64_t dim) {
      if (dim != cell.n_branch - 3) return;
      if (!is_canonical_codes(codes, t, scratch)) return;
      TableRow row;
      row.report = analyze(datum_from_codes(t.m1, t.m2, codes));
      row.notes =
          abelian_row_notes(std::get<AbelianCoverDatum>(row.report.datum));
      cell_rows[ci].push_back(std::move(row));
    };
    AbelianCellScan scan(t, cell.n_branch, bounds.genus_max, leaf);
    cell_candidates[ci] = scan.run(cell.a1);
  }

  std::vector<TableRow> rows;
  std::int64_t candidates = 0;
  for (std::size_t ci = 0; ci < cells.size(); ++ci) {
    candidates += cell_candidates[ci];
    for (auto& r : cell_rows[ci]) rows.push_back(std::move(r));
  }
  return assemble_table(/*abelian=*/true, bounds, std::move(rows), candidates,
                        started);
}

ClassificationTable classify_abelian_reference(const SearchBounds& bounds) {
  if (bounds.n_max < 4) throw std::invalid_argument("n_max must be >= 4");
  const auto started = std::chrono::steady_clock::now();
  std::vector<TableRow> rows;
  std::int64_t candidates = 0;
  for (auto [m1, m2] : bounds.groups) {
    AbelianTables t = make_abelian_tables(m1, m2, bounds.aut_bound);
    std::vector<std::int64_t> scratch;
    for (std::int64_t n = 4; n <= bounds.n_max; ++n) {
      auto leaf = [&](const std::vector<std::int64_t>& codes,
                      const std::vector<std::int64_t>&, std::int64_t,
                      std::int64_t) {
        if (!is_canonical_codes(codes, t, scratch)) return;
        SpecialityReport report = analyze(datum_from_codes(m1, m2, codes));
        if (!report.is_special) return;
        TableRow row;
        row.notes =
            abelian_row_notes(std::get<AbelianCoverDatum>(report.datum));
        row.report = std::move(report);
        rows.push_back(std::move(row));
      };
      AbelianCellScan scan(t, n, bounds.genus_max, leaf);
      for (std::int64_t a1 = 1; a1 < m1 * m2; ++a1)
        candidates += scan.run(a1);
    }
  }
  return assemble_table(/*abelian=*/true, bounds, std::move(rows), candidates,
                        started);
}

const std::vector<CyclicCoverDatum>& reference_special_cyclic() {
  static const std::vector<CyclicCoverDatum> rows = [] {
    const std::vector<std::pair<std::int64_t, std::vector<std::int64_t>>>
        raw = {{2, {1, 1, 1, 1}},
               {2, {1, 1, 1, 1, 1, 1}},
               {3, {1, 1, 2, 2}},
               {4, {1, 2, 2, 3}},
               {6, {2, 3, 3, 4}},
               {3, {1, 1, 1, 1, 2}},
               {4, {1, 1, 1, 1}},
               {4, {1, 1, 2, 2, 2}},
               {6, {1, 3, 4, 4}},
               {3, {1, 1, 1, 1, 1, 1}},
               {5, {1, 3, 3, 3}},
               {6, {1, 1, 1, 3}},
               {6, {1, 1, 2, 2}},
               {6, {2, 2, 2, 3, 3}},
               {8, {2, 4, 5, 5}},
               {5, {2, 2, 2, 2, 2}},
               {7, {2, 4, 4, 4}},
               {10, {3, 5, 6, 6}},
               {9, {3, 5, 5, 5}},
               {12, {4, 6, 7, 7}}};
    std::vector<CyclicCoverDatum> out;
    out.reserve(raw.size());
    for (const auto& [m, a] : raw)
      out.push_back(canonical_form_cyclic(
          validate_cyclic(m, static_cast<std::int64_t>(a.size()), a)));
    return out;
  }();
  return rows;
}

const std::vector<AbelianCoverDatum>& reference_special_abelian() {
  static const std::vector<AbelianCoverDatum> rows = [] {
    struct Raw {
      std::int64_t m1, m2;
      std::vector<MonodromyPair> a;
    };
    const std::vector<Raw> raw = {
        {2, 2, {{1, 0}, {1, 0}, {0, 1}, {0, 1}}},
        {2, 4, {{1, 0}, {1, 1}, {0, 1}, {0, 2}}},
        {2, 4, {{1, 0}, {1, 2}, {0, 1}, {0, 1}}},
        {2, 6, {{1, 0}, {1, 1}, {0, 2}, {0, 3}}},
        {3, 3, {{1, 0}, {1, 0}, {1, 2}, {0, 1}}},
        {2, 2, {{1, 0}, {1, 0}, {1, 0}, {1, 1}, {0, 1}}},
        {2, 2, {{1, 0}, {1, 0}, {1, 1}, {1, 1}, {0, 1}, {0, 1}}}};
    std::vector<AbelianCoverDatum> out;
    out.reserve(raw.size());
    for (const auto& r : raw)
      out.push_back(canonical_form_abelian(validate_abelian(
          r.m1, r.m2, static_cast<std::int64_t>(r.a.size()), r.a)));
    return out;
  }();
  return rows;
}

// --------------------------------------------------------- decomposition --

const char* pair_class_name(PairClass c) {
  switch (c) {
    case PairClass::Zero: return "zero";
    case PairClass::IsotrivialCm: return "isotrivial-cm";
    case PairClass::Moving: return "moving";
  }
  return "?";
}

namespace {

PairClass classify_pair(std::int64_t d, std::int64_t d_conj, bool real) {
  if (real) return d > 0 ? PairClass::Moving : PairClass::Zero;
  if (d == 0 && d_conj == 0) return PairClass::Zero;
  if (d == 0 || d_conj == 0) return PairClass::IsotrivialCm;
  return PairClass::Moving;
}

void count_pairs(DecompositionReport& rep) {
  for (const auto& p : rep.pairs) {
    switch (p.cls) {
      case PairClass::Zero: ++rep.zero_pairs; break;
      case PairClass::IsotrivialCm: ++rep.isotrivial_cm_pairs; break;
      case PairClass::Moving: ++rep.moving_pairs; break;
    }
  }
}

}  // namespace

DecompositionReport decompose_new_parts(const CyclicCoverDatum& d) {
  DecompositionReport rep;
  rep.datum = d;
  const MultiplicityVector mv = chevalley_weil_cyclic(d);
  const std::int64_t m = d.m;
  for (std::int64_t n = 1; n <= m / 2; ++n) {
    CharacterPairRow row;
    row.chi = {n};
    row.chi_conj = {m - n};
    row.real = (n == m - n);
    const std::int64_t g0 = std::gcd(n, m);
    row.order = m / g0;
    const std::int64_t np = n / g0;
    for (std::int64_t x : d.a) {
      std::int64_t b = (np * x) % row.order;
      if (b != 0) row.induced_a.push_back(b);
    }
    row.d = mv.at(n);
    row.d_conj = mv.at(m - n);
    row.cls = classify_pair(row.d, row.d_conj, row.real);
    rep.pairs.push_back(std::move(row));
  }
  count_pairs(rep);
  return rep;
}

DecompositionReport decompose_new_parts(const AbelianCoverDatum& d) {
  DecompositionReport rep;
  rep.datum = d;
  const std::int64_t m1 = d.m1, m2 = d.m2;
  const std::int64_t scale = m2 / m1;
  for (std::int64_t c1 = 0; c1 < m1; ++c1)
    for (std::int64_t c2 = 0; c2 < m2; ++c2) {
      Character chi{c1, c2};
      Character conj = conjugate_character(m1, m2, chi);
      // one row per conjugate pair, keyed by the lexicographically smaller
      // member; the trivial pair is listed so the counts match the
      // group-ring factor bookkeeping
      if (std::make_pair(conj.c1, conj.c2) < std::make_pair(c1, c2)) continue;
      CharacterPairRow row;
      row.chi = {chi.c1, chi.c2};
      row.chi_conj = {conj.c1, conj.c2};
      row.real = (chi == conj);
      row.order = character_order(m1, m2, chi);
      std::vector<std::int64_t> exps;
      std::int64_t g0 = m2;
      for (const auto& x : d.a) {
        std::int64_t e = mod_floor(c1 * x.first * scale + c2 * x.second, m2);
        exps.push_back(e);
        g0 = std::gcd(g0, e);
      }
      for (std::int64_t e : exps)
        if (e != 0) row.induced_a.push_back(e / g0);
      const bool trivial = is_trivial_character(m1, m2, chi);
      row.d = trivial ? 0 : character_multiplicity(d, chi);
      row.d_conj = trivial ? 0 : character_multiplicity(d, conj);
      row.cls = classify_pair(row.d, row.d_conj, row.real);
      rep.pairs.push_back(std::move(row));
    }
  count_pairs(rep);
  return rep;
}

}  // namespace covers
