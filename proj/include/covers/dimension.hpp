#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "covers/cover_data.hpp"
#include "covers/multiplicities.hpp"

namespace covers {

// One simple factor of the real adjoint group attached to a multiplicity
// vector. Its holomorphic dimension contribution is p*q for SU(p,q)
// (normalized p >= q) and h(h+1)/2 for Sp(2h).
struct AdjointFactor {
  enum class Kind { SpecialUnitary, Symplectic };

  Kind kind = Kind::SpecialUnitary;
  std::int64_t p = 0, q = 0;  // SU(p, q)
  std::int64_t h = 0;         // Sp(2h)

  std::int64_t delta() const {
    return kind == Kind::SpecialUnitary ? p * q : h * (h + 1) / 2;
  }
  std::string label() const;

  friend bool operator==(const AdjointFactor&, const AdjointFactor&) = default;
};

// Everything the library can say about one datum: genus, multiplicities,
// the dimension of the containing PEL special subvariety, its adjoint
// factors, and whether the (N-3)-dimensional family fills that subvariety.
struct SpecialityReport {
  std::variant<CyclicCoverDatum, AbelianCoverDatum> datum;  // canonical form
  std::int64_t genus = 0;
  std::variant<MultiplicityVector, AbelianMultiplicityVector> multiplicities;
  std::int64_t family_dim = 0;   // N - 3
  std::int64_t dim_special = 0;  // dim of the PEL special subvariety
  std::vector<AdjointFactor> adjoint_factors;
  bool is_special = false;  // family_dim == dim_special
  std::vector<std::string> notes;

  bool cyclic() const {
    return std::holds_alternative<CyclicCoverDatum>(datum);
  }
};

// dim S = sum over pairs {n, -n} with 2n != 0 of d_n d_{-n}, plus
// d_k(d_k+1)/2 at k = m/2 when m is even.
std::int64_t dim_special_cyclic(const MultiplicityVector& mv);

// Abelian analogue: d_rho d_{conj rho} over complex-conjugate pairs plus
// d(d+1)/2 for each nontrivial real character.
std::int64_t dim_special_abelian(const AbelianMultiplicityVector& mv);

// One SU(d_n, d_{-n}) factor per pair with 2n != 0 and one Sp(2 d_k) factor
// when m is even. Factors with all multiplicities zero are omitted;
// anisotropic SU(d, 0) factors with d > 0 are kept.
std::vector<AdjointFactor> adjoint_decomposition(const MultiplicityVector& mv);
std::vector<AdjointFactor> adjoint_decomposition(
    const AbelianMultiplicityVector& mv);

// Assembles the full report for the canonical form of the datum. Checks the
// internal identities (entry sum = genus, dim = sum of factor deltas,
// N - 3 <= dim) and throws InternalInvariantError if any fails.
SpecialityReport analyze(const CyclicCoverDatum& d);
SpecialityReport analyze(const AbelianCoverDatum& d);

}  // namespace covers
