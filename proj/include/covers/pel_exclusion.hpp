#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace covers {

enum class AlbertType { I, II };

enum class CaseVerdict { Excluded, NotExcludedByTheseArguments };

// One admissible field degree e for the given genus, with the dimension of
// the corresponding PEL special subvariety and the trace of the rules that
// were applied to it.
struct ExclusionCase {
  std::int64_t e = 0;      // degree of the totally real field
  std::int64_t h = 0;      // g / e (Type I) or g / 2e (Type II)
  std::int64_t dim_s = 0;  // e * h(h+1)/2
  CaseVerdict verdict = CaseVerdict::NotExcludedByTheseArguments;
  // genus within the claimed threshold (g > 4 resp. g > 8) yet the rules
  // did not exclude the case
  bool check_failed = false;
  std::vector<std::string> rule_trace;
};

struct ExclusionReport {
  std::int64_t g = 0;
  AlbertType albert_type = AlbertType::I;
  std::vector<ExclusionCase> cases;
  bool all_excluded = false;
  std::vector<std::string> notes;
};

// Type I (totally real field of degree e | g): every case is excluded
// exactly when g > 4. Rules, in order: the 2g-2 dimension bound for
// subvarieties with extra endomorphisms, the Hilbert modular case e = g for
// g >= 4, and the hyperelliptic-divisor contradiction at e = g/2 for g > 4.
// For g <= 3 the Torelli locus is all of A_g and nothing can be excluded.
ExclusionReport exclude_type_I(std::int64_t g);

// Type II (totally indefinite quaternion algebra, 2e | g): a case is
// excluded when the boundary codimension g/2 exceeds 2 and both families of
// decomposable loci have codimension > 2. The product family X_1 x X_2 is
// empty for h = 1 and the subfield family is empty for e = 1; with those
// two observations every even g > 8 is excluded. Any case in range that the
// rules fail to exclude is flagged CHECK-FAILED in its trace rather than
// forced.
ExclusionReport exclude_type_II(std::int64_t g);

}  // namespace covers
