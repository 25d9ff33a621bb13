#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <set>
#include <string>

#include "covers/dimension.hpp"
#include "test_support.hpp"

using namespace covers;
namespace ts = covers::testsupport;

namespace {

CyclicCoverDatum cyc(std::int64_t m, std::vector<std::int64_t> a) {
  return validate_cyclic(m, static_cast<std::int64_t>(a.size()), a);
}

std::multiset<std::string> factor_labels(const std::vector<AdjointFactor>& fs) {
  std::multiset<std::string> out;
  for (const auto& f : fs) out.insert(f.label());
  return out;
}

}  // namespace

TEST_CASE("dim S, worked cyclic values") {
  CHECK(dim_special_cyclic(chevalley_weil_cyclic(cyc(5, {1, 1, 1, 2}))) == 1);
  CHECK(dim_special_cyclic(chevalley_weil_cyclic(cyc(9, {1, 1, 1, 6}))) == 1);
  CHECK(dim_special_cyclic(chevalley_weil_cyclic(cyc(4, {1, 1, 1, 1}))) == 1);
  CHECK(dim_special_cyclic(chevalley_weil_cyclic(cyc(6, {2, 2, 2, 3, 3}))) ==
        2);
}

TEST_CASE("adjoint decompositions, worked values") {
  CHECK(factor_labels(adjoint_decomposition(
            chevalley_weil_cyclic(cyc(5, {1, 1, 1, 2})))) ==
        std::multiset<std::string>{"SU(2,0)", "SU(1,1)"});
  CHECK(factor_labels(adjoint_decomposition(
            chevalley_weil_cyclic(cyc(9, {1, 1, 1, 6})))) ==
        std::multiset<std::string>{"SU(2,0)", "SU(2,0)", "SU(1,1)",
                                   "SU(1,0)"});
  CHECK(factor_labels(adjoint_decomposition(
            chevalley_weil_cyclic(cyc(4, {1, 1, 1, 1})))) ==
        std::multiset<std::string>{"SU(2,0)", "Sp(2)"});
}

TEST_CASE("dim S equals the sum of factor deltas") {
  auto rng = ts::make_rng(20);
  for (int i = 0; i < 400; ++i) {
    CyclicCoverDatum d = ts::random_cyclic_datum(rng);
    MultiplicityVector mv = chevalley_weil_cyclic(d);
    std::int64_t delta_sum = 0;
    for (const auto& f : adjoint_decomposition(mv)) delta_sum += f.delta();
    CHECK(dim_special_cyclic(mv) == delta_sum);
  }
  for (int i = 0; i < 200; ++i) {
    AbelianCoverDatum d = ts::random_abelian_datum(rng);
    AbelianMultiplicityVector mv = multiplicity_vector_abelian(d);
    std::int64_t delta_sum = 0;
    for (const auto& f : adjoint_decomposition(mv)) delta_sum += f.delta();
    CHECK(dim_special_abelian(mv) == delta_sum);
  }
}

TEST_CASE("analyze on the worked examples") {
  SpecialityReport r = analyze(cyc(5, {1, 1, 1, 2}));
  CHECK(r.genus == 4);
  CHECK(r.dim_special == 1);
  CHECK(r.family_dim == 1);
  CHECK(r.is_special);

  SpecialityReport r2 = analyze(cyc(9, {1, 1, 1, 6}));
  CHECK(r2.genus == 7);
  CHECK(r2.dim_special == 1);
  CHECK(r2.is_special);

  SpecialityReport r3 = analyze(cyc(6, {2, 2, 2, 3, 3}));
  CHECK(r3.genus == 4);
  CHECK(r3.dim_special == 2);
  CHECK(r3.is_special);
}

TEST_CASE("analyze flags non-special families") {
  SpecialityReport r = analyze(cyc(11, {1, 1, 1, 8}));
  CHECK(!r.is_special);
  CHECK(r.dim_special > r.family_dim);
  CHECK(r.dim_special == 2);
  CHECK(r.genus == 10);
}

TEST_CASE("analyze on abelian data") {
  SpecialityReport r = analyze(
      validate_abelian(2, 6, 4, {{1, 0}, {1, 1}, {0, 2}, {0, 3}}));
  CHECK(r.genus == 4);
  CHECK(r.dim_special == 1);
  CHECK(r.is_special);

  SpecialityReport r21 = analyze(
      validate_abelian(2, 2, 4, {{1, 0}, {1, 0}, {0, 1}, {0, 1}}));
  CHECK(r21.genus == 1);
  CHECK(r21.dim_special == 1);
  CHECK(r21.is_special);

  SpecialityReport r27 = analyze(validate_abelian(
      2, 2, 6, {{1, 0}, {1, 0}, {1, 1}, {1, 1}, {0, 1}, {0, 1}}));
  CHECK(r27.dim_special == 3);
  CHECK(r27.family_dim == 3);
  CHECK(r27.is_special);
}

TEST_CASE("N - 3 never exceeds dim S") {
  auto rng = ts::make_rng(21);
  for (int i = 0; i < 500; ++i) {
    CyclicCoverDatum d = ts::random_cyclic_datum(rng);
    SpecialityReport r = analyze(d);  // throws on violation
    CHECK(r.family_dim <= r.dim_special);
  }
}

TEST_CASE("dim S and genus are equivalence invariants") {
  auto rng = ts::make_rng(22);
  for (int i = 0; i < 200; ++i) {
    CyclicCoverDatum d = ts::random_cyclic_datum(rng, 40, 8);
    CyclicCoverDatum e = ts::apply_unit_and_shuffle(rng, d);
    SpecialityReport rd = analyze(d), re = analyze(e);
    CHECK(rd.genus == re.genus);
    CHECK(rd.dim_special == re.dim_special);
    CHECK(std::get<CyclicCoverDatum>(rd.datum) ==
          std::get<CyclicCoverDatum>(re.datum));
  }
}

TEST_CASE("three-branch-point families are zero-dimensional") {
  // every valid triple with m <= 50
  for (std::int64_t m = 2; m <= 50; ++m) {
    for (std::int64_t a1 = 1; a1 < m; ++a1)
      for (std::int64_t a2 = a1; a2 < m; ++a2) {
        std::int64_t a3 = mod_floor(-(a1 + a2), m);
        if (a3 == 0 || a3 < a2) continue;
        if (std::gcd(std::gcd(a1, a2), std::gcd(a3, m)) != 1) continue;
        CyclicCoverDatum d{m, {a1, a2, a3}};
        SpecialityReport r = analyze(d);
        CHECK(r.dim_special == 0);
        CHECK(r.is_special);  // family dim 0 == dim S
      }
  }
}
