#pragma once

#include <compare>
#include <cstdint>
#include <utility>
#include <vector>

#include "covers/errors.hpp"

namespace covers {

// Monodromy datum for a cyclic cover of the line: the group Z/mZ acts on
// y^m = prod_i (x - t_i)^{a_i}, with residue a_i recording the local
// monodromy about the branch point t_i. Valid data have every a_i nonzero,
// sum of the a_i divisible by m, and gcd(a_1, ..., a_N, m) = 1.
struct CyclicCoverDatum {
  std::int64_t m = 0;            // group order, >= 2
  std::vector<std::int64_t> a;   // local monodromies, reduced to [1, m)

  std::int64_t branch_count() const {
    return static_cast<std::int64_t>(a.size());
  }

  friend bool operator==(const CyclicCoverDatum&,
                         const CyclicCoverDatum&) = default;
  friend auto operator<=>(const CyclicCoverDatum&,
                          const CyclicCoverDatum&) = default;
};

using MonodromyPair = std::pair<std::int64_t, std::int64_t>;

// Monodromy datum for a cover with group A = Z/m1 x Z/m2, m1 | m2.
// Entries are pairs of residues; the pairs must be nonzero, sum to zero
// componentwise, and generate A.
struct AbelianCoverDatum {
  std::int64_t m1 = 0;
  std::int64_t m2 = 0;
  std::vector<MonodromyPair> a;

  std::int64_t branch_count() const {
    return static_cast<std::int64_t>(a.size());
  }
  std::int64_t group_order() const { return m1 * m2; }

  friend bool operator==(const AbelianCoverDatum&,
                         const AbelianCoverDatum&) = default;
  friend auto operator<=>(const AbelianCoverDatum&,
                          const AbelianCoverDatum&) = default;
};

// Checks all datum invariants and reduces entries to least nonnegative
// representatives. Throws ValidationError with codes RejectModulus,
// RejectTooFewBranchPoints, RejectLengthMismatch, RejectZeroMonodromy,
// RejectSumNonzero, RejectNonGenerating.
CyclicCoverDatum validate_cyclic(std::int64_t m, std::int64_t n_branch,
                                 const std::vector<std::int64_t>& a);
AbelianCoverDatum validate_abelian(std::int64_t m1, std::int64_t m2,
                                   std::int64_t n_branch,
                                   const std::vector<MonodromyPair>& a);

// Genus of the covering curve, from the closed Riemann-Hurwitz form.
std::int64_t genus_cyclic(const CyclicCoverDatum& d);
std::int64_t genus_abelian(const AbelianCoverDatum& d);

// Order of (x1, x2) in Z/m1 x Z/m2.
std::int64_t pair_order(std::int64_t m1, std::int64_t m2,
                        const MonodromyPair& x);

// One automorphism of Z/m1 x Z/m2, as the matrix (alpha beta; gamma delta)
// acting by (x1, x2) -> (alpha x1 + beta x2 mod m1, gamma x1 + delta x2
// mod m2). code_map caches the action on elements encoded as x1*m2 + x2.
struct GroupAutomorphism {
  std::int64_t alpha = 1, beta = 0, gamma = 0, delta = 1;
  std::vector<std::int64_t> code_map;

  MonodromyPair apply(std::int64_t /*m1*/, std::int64_t m2,
                      const MonodromyPair& x) const {
    std::int64_t code = code_map[x.first * m2 + x.second];
    return {code / m2, code % m2};
  }
};

// All automorphisms of Z/m1 x Z/m2, found by filtering the candidate
// matrices to bijections. Throws AutGroupTooLarge when the candidate count
// m1^3 * m2 exceeds `aut_bound`.
std::vector<GroupAutomorphism> automorphisms(
    std::int64_t m1, std::int64_t m2, std::int64_t aut_bound = 1000000);

// Orbit representative under units (resp. Aut(A)) times index permutations:
// the lexicographically least tuple among all sorted images. Idempotent;
// two data are equivalent iff their canonical forms are equal.
CyclicCoverDatum canonical_form_cyclic(const CyclicCoverDatum& d);
AbelianCoverDatum canonical_form_abelian(const AbelianCoverDatum& d,
                                         std::int64_t aut_bound = 1000000);
AbelianCoverDatum canonical_form_abelian(
    const AbelianCoverDatum& d, const std::vector<GroupAutomorphism>& auts);

}  // namespace covers
