#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "covers/classifier.hpp"
#include "covers/datum_parse.hpp"
#include "test_support.hpp"

using namespace covers;
namespace ts = covers::testsupport;

namespace {

SearchBounds cyclic_bounds(std::int64_t m_max, std::int64_t n_max) {
  SearchBounds b;
  b.m_max = m_max;
  b.n_max = n_max;
  return b;
}

std::set<CyclicCoverDatum> row_data(const ClassificationTable& t) {
  std::set<CyclicCoverDatum> out;
  for (const auto& row : t.rows)
    out.insert(std::get<CyclicCoverDatum>(row.report.datum));
  return out;
}

std::set<AbelianCoverDatum> abelian_row_data(const ClassificationTable& t) {
  std::set<AbelianCoverDatum> out;
  for (const auto& row : t.rows)
    out.insert(std::get<AbelianCoverDatum>(row.report.datum));
  return out;
}

}  // namespace

TEST_CASE("the smallest window has exactly one class") {
  auto classes = enumerate_cyclic(cyclic_bounds(2, 4));
  REQUIRE(classes.size() == 1);
  CHECK(classes[0] == CyclicCoverDatum{2, {1, 1, 1, 1}});
}

TEST_CASE("enumeration matches brute-force bucketing for small windows") {
  for (std::int64_t m = 2; m <= 6; ++m)
    for (std::int64_t n = 4; n <= 5; ++n) {
      std::set<std::vector<std::int64_t>> expected =
          ts::brute_force_class_keys(m, n);
      std::set<std::vector<std::int64_t>> got;
      SearchBounds b = cyclic_bounds(m, n);
      enumerate_cyclic(b, [&](const CyclicCoverDatum& d) {
        if (d.m == m && d.branch_count() == n) {
          CHECK(canonical_form_cyclic(d) == d);  // yields canonical forms only
          got.insert(d.a);
        }
      });
      CHECK(got == expected);
    }
}

TEST_CASE("classify with m <= 5, N = 4") {
  ClassificationTable t = classify_cyclic(cyclic_bounds(5, 4));
  std::set<CyclicCoverDatum> expected;
  for (auto [m, a] :
       std::vector<std::pair<std::int64_t, std::vector<std::int64_t>>>{
           {2, {1, 1, 1, 1}},
           {3, {1, 1, 2, 2}},
           {4, {1, 2, 2, 3}},
           {4, {1, 1, 1, 1}},
           {5, {1, 3, 3, 3}}})
    expected.insert(canonical_form_cyclic(
        validate_cyclic(m, static_cast<std::int64_t>(a.size()), a)));
  CHECK(row_data(t) == expected);
}

TEST_CASE("the twenty special families, and nothing else") {
  ClassificationTable t = classify_cyclic(cyclic_bounds(12, 6), 2);
  REQUIRE(t.rows.size() == 20);
  std::set<CyclicCoverDatum> expected(reference_special_cyclic().begin(),
                                      reference_special_cyclic().end());
  CHECK(row_data(t) == expected);

  // rows are sorted by (genus, m, N, a) and indexed from 1
  for (std::size_t i = 0; i < t.rows.size(); ++i)
    CHECK(t.rows[i].index == static_cast<std::int64_t>(i) + 1);
  for (std::size_t i = 1; i < t.rows.size(); ++i)
    CHECK(t.rows[i - 1].report.genus <= t.rows[i].report.genus);
}

TEST_CASE("pruned kernel output equals the unpruned reference") {
  SearchBounds b = cyclic_bounds(10, 6);
  ClassificationTable fast = classify_cyclic(b, 2);
  ClassificationTable slow = classify_cyclic_reference(b);
  CHECK(row_data(fast) == row_data(slow));
}

TEST_CASE("classify output does not depend on the worker count") {
  SearchBounds b = cyclic_bounds(14, 6);
  ClassificationTable one = classify_cyclic(b, 1);
  ClassificationTable four = classify_cyclic(b, 4);
  REQUIRE(one.rows.size() == four.rows.size());
  for (std::size_t i = 0; i < one.rows.size(); ++i) {
    CHECK(one.rows[i].index == four.rows[i].index);
    CHECK(one.rows[i].report.datum == four.rows[i].report.datum);
  }
  CHECK(one.candidates_examined == four.candidates_examined);
}

TEST_CASE("enlarging the bounds never removes a row") {
  ClassificationTable small = classify_cyclic(cyclic_bounds(6, 5));
  ClassificationTable large = classify_cyclic(cyclic_bounds(9, 6));
  auto small_rows = row_data(small);
  auto large_rows = row_data(large);
  for (const auto& d : small_rows) CHECK(large_rows.count(d) == 1);
}

TEST_CASE("every emitted row is special with N - 3 = dim S >= 1") {
  ClassificationTable t = classify_cyclic(cyclic_bounds(12, 6));
  for (const auto& row : t.rows) {
    CHECK(row.report.is_special);
    CHECK(row.report.family_dim >= 1);
    CHECK(row.report.family_dim == row.report.dim_special);
  }
}

TEST_CASE("genus cap filters candidates") {
  SearchBounds b = cyclic_bounds(12, 6);
  b.genus_max = 3;
  ClassificationTable t = classify_cyclic(b);
  for (const auto& row : t.rows) CHECK(row.report.genus <= 3);
  CHECK(t.rows.size() == 9);  // table rows with genus <= 3
}

TEST_CASE("abelian classification finds the known families") {
  SearchBounds b;
  b.n_max = 6;
  b.groups = {{2, 2}};
  ClassificationTable t = classify_abelian(b, 2);
  auto rows = abelian_row_data(t);
  const auto& ref = reference_special_abelian();
  CHECK(rows.count(ref[0]) == 1);  // N = 4
  CHECK(rows.count(ref[5]) == 1);  // N = 5
  CHECK(rows.count(ref[6]) == 1);  // N = 6

  SearchBounds b33;
  b33.n_max = 4;
  b33.groups = {{3, 3}};
  auto rows33 = abelian_row_data(classify_abelian(b33));
  CHECK(rows33.count(ref[4]) == 1);

  SearchBounds b26;
  b26.n_max = 4;
  b26.groups = {{2, 6}};
  ClassificationTable t26 = classify_abelian(b26);
  CHECK(abelian_row_data(t26).count(ref[3]) == 1);
  for (const auto& row : t26.rows) CHECK(row.report.is_special);
}

TEST_CASE("abelian kernel matches its serial reference") {
  SearchBounds b;
  b.n_max = 5;
  b.groups = {{2, 2}, {2, 4}, {3, 3}};
  ClassificationTable fast = classify_abelian(b, 2);
  ClassificationTable slow = classify_abelian_reference(b);
  CHECK(abelian_row_data(fast) == abelian_row_data(slow));
}

TEST_CASE("known families carry no extra-row flag") {
  // (2,2) with N = 4..6 yields exactly the three known families; none of
  // them may be flagged as outside the reference table.
  SearchBounds b;
  b.n_max = 6;
  b.groups = {{2, 2}};
  ClassificationTable t = classify_abelian(b);
  CHECK(t.rows.size() == 3);
  for (const auto& row : t.rows) CHECK(row.notes.empty());
}

TEST_CASE("decompose on a prime-order family") {
  DecompositionReport r =
      decompose_new_parts(validate_cyclic(5, 4, {1, 1, 1, 2}));
  CHECK(r.pairs.size() == 2);
  CHECK(r.zero_pairs == 0);
  for (const auto& p : r.pairs) CHECK(p.order == 5);  // all faithful
  CHECK(r.isotrivial_cm_pairs == 1);                  // the (2,0) pair
  CHECK(r.moving_pairs == 1);                         // the (1,1) pair
}

TEST_CASE("decompose identifies the isotrivial CM part") {
  DecompositionReport r =
      decompose_new_parts(validate_cyclic(9, 4, {1, 1, 1, 6}));
  REQUIRE(r.pairs.size() == 4);
  bool found = false;
  for (const auto& p : r.pairs) {
    if (p.chi == std::vector<std::int64_t>{3}) {
      found = true;
      CHECK(p.chi_conj == std::vector<std::int64_t>{6});
      CHECK(p.order == 3);
      CHECK(p.d == 1);
      CHECK(p.d_conj == 0);
      CHECK(p.cls == PairClass::IsotrivialCm);
      // the induced degree-3 cover is unramified above the fourth point
      CHECK(p.induced_a == std::vector<std::int64_t>{1, 1, 1});
    } else {
      CHECK(p.order == 9);
    }
  }
  CHECK(found);
  CHECK(r.zero_pairs == 0);
  CHECK(r.isotrivial_cm_pairs == 3);
  CHECK(r.moving_pairs == 1);
}

TEST_CASE("decompose on the 2x6 family matches the factor bookkeeping") {
  DecompositionReport r = decompose_new_parts(
      validate_abelian(2, 6, 4, {{1, 0}, {1, 1}, {0, 2}, {0, 3}}));
  CHECK(r.pairs.size() == 8);  // 4 real (incl. trivial) + 4 complex pairs
  CHECK(r.zero_pairs == 5);
  CHECK(r.isotrivial_cm_pairs == 2);
  CHECK(r.moving_pairs == 1);

  std::int64_t real_count = 0;
  for (const auto& p : r.pairs)
    if (p.real) ++real_count;
  CHECK(real_count == 4);
}

TEST_CASE("bad bounds are rejected") {
  CHECK_THROWS_AS(classify_cyclic(cyclic_bounds(1, 6)),
                  std::invalid_argument);
  CHECK_THROWS_AS(classify_cyclic(cyclic_bounds(6, 3)),
                  std::invalid_argument);
  SearchBounds bad;
  bad.groups = {{2, 3}};  // m1 does not divide m2
  CHECK_THROWS_AS(classify_abelian(bad), ValidationError);
}
