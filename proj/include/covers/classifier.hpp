#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "covers/cover_data.hpp"
#include "covers/dimension.hpp"

namespace covers {

// Search window for the classifier. The defaults are wide enough that the
// cyclic sweep provably sees every special family there is.
struct SearchBounds {
  std::int64_t m_max = 24;
  std::int64_t n_max = 8;
  std::vector<std::pair<std::int64_t, std::int64_t>> groups = {
      {2, 2}, {2, 4}, {2, 6}, {3, 3}};
  std::optional<std::int64_t> genus_max;
  std::int64_t aut_bound = 1000000;
};

struct TableRow {
  std::int64_t index = 0;  // 1-based position after the deterministic sort
  SpecialityReport report;
  std::vector<std::string> notes;
};

struct ClassificationTable {
  bool abelian = false;
  std::vector<TableRow> rows;  // sorted by (genus, group, N, a)
  SearchBounds bounds;
  std::int64_t candidates_examined = 0;
  std::string generated_at;  // wall-clock stamp, shown only in verbose output
  double elapsed_seconds = 0.0;
};

// Streams exactly one representative per equivalence class with m <= m_max
// and 4 <= N <= n_max: nondecreasing tuples, keeping a tuple iff it equals
// its own canonical form. Serial; the parallel kernels live in classify_*.
void enumerate_cyclic(const SearchBounds& bounds,
                      const std::function<void(const CyclicCoverDatum&)>& sink);
std::vector<CyclicCoverDatum> enumerate_cyclic(const SearchBounds& bounds);

// All equivalence classes in the window whose family is special, i.e. with
// N - 3 equal to the PEL dimension. The scan is partitioned into
// (m, N, a_1) cells and runs on `jobs` workers; output is merged by sort
// and does not depend on the worker count. jobs <= 0 means all hardware
// threads.
ClassificationTable classify_cyclic(const SearchBounds& bounds, int jobs = 1);
ClassificationTable classify_abelian(const SearchBounds& bounds, int jobs = 1);

// Serial reference implementations, kept for testing and benchmarking: a
// plain enumerate-then-analyze pass with no pruning and no cells. Must
// produce exactly the rows of the parallel kernels.
ClassificationTable classify_cyclic_reference(const SearchBounds& bounds);
ClassificationTable classify_abelian_reference(const SearchBounds& bounds);

// The twenty special cyclic families and the seven known special abelian
// families, in canonical form. Used to annotate classifier output and by
// the regression tests.
const std::vector<CyclicCoverDatum>& reference_special_cyclic();
const std::vector<AbelianCoverDatum>& reference_special_abelian();

// --- Character-orbit decomposition -------------------------------------

enum class PairClass { Zero, IsotrivialCm, Moving };

const char* pair_class_name(PairClass c);

// One conjugate pair of characters {chi, conj chi}, the branch data of the
// induced cyclic cover, and the multiplicity pair (d, d_conj) that decides
// how the corresponding isogeny factor of the Jacobian behaves.
struct CharacterPairRow {
  std::vector<std::int64_t> chi;       // {n} cyclic, {c1, c2} abelian
  std::vector<std::int64_t> chi_conj;
  bool real = false;                   // chi == conj chi
  std::int64_t order = 1;              // order of chi = degree of the induced cover
  std::vector<std::int64_t> induced_a; // nonzero branch exponents mod `order`
  std::int64_t d = 0, d_conj = 0;
  PairClass cls = PairClass::Zero;
};

struct DecompositionReport {
  std::variant<CyclicCoverDatum, AbelianCoverDatum> datum;
  std::vector<CharacterPairRow> pairs;
  std::int64_t zero_pairs = 0;
  std::int64_t isotrivial_cm_pairs = 0;
  std::int64_t moving_pairs = 0;
};

// Per conjugate pair: "zero" when both multiplicities vanish, "isotrivial
// CM" when exactly one side vanishes (the factor is rigid), "moving"
// otherwise. For abelian data the trivial pair is listed too, matching how
// the group-ring factors of the Jacobian are counted; for cyclic data only
// the nontrivial pairs appear.
DecompositionReport decompose_new_parts(const CyclicCoverDatum& d);
DecompositionReport decompose_new_parts(const AbelianCoverDatum& d);

}  // namespace covers
