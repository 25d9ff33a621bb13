#include "covers/dimension.hpp"

#include <algorithm>
#include <string>

#include "covers/modular.hpp"

namespace covers {

std::string AdjointFactor::label() const {
  if (kind == Kind::SpecialUnitary)
    return "SU(" + std::to_string(p) + "," + std::to_string(q) + ")";
  return "Sp(" + std::to_string(2 * h) + ")";
}

std::int64_t dim_special_cyclic(const MultiplicityVector& mv) {
  const std::int64_t m = mv.modulus();
  std::int64_t dim = 0;
  // n runs over representatives of the pairs {n, -n} with 2n != 0 mod m;
  // for n < m/2 the condition holds automatically.
  for (std::int64_t n = 1; n <= (m - 1) / 2; ++n)
    dim += mv.at(n) * mv.at(m - n);
  if (m % 2 == 0) {
    std::int64_t dk = mv.at(m / 2);
    dim += dk * (dk + 1) / 2;
  }
  return dim;
}

std::vector<AdjointFactor> adjoint_decomposition(const MultiplicityVector& mv) {
  const std::int64_t m = mv.modulus();
  std::vector<AdjointFactor> factors;
  for (std::int64_t n = 1; n <= (m - 1) / 2; ++n) {
    std::int64_t p = mv.at(n), q = mv.at(m - n);
    if (p < q) std::swap(p, q);
    if (p == 0) continue;  // trivial factor
    factors.push_back(
        AdjointFactor{AdjointFactor::Kind::SpecialUnitary, p, q, 0});
  }
  if (m % 2 == 0) {
    std::int64_t dk = mv.at(m / 2);
    if (dk > 0)
      factors.push_back(
          AdjointFactor{AdjointFactor::Kind::Symplectic, 0, 0, dk});
  }
  return factors;
}

std::int64_t dim_special_abelian(const AbelianMultiplicityVector& mv) {
  const std::int64_t m1 = mv.m1(), m2 = mv.m2();
  std::int64_t dim = 0;
  for (std::int64_t c1 = 0; c1 < m1; ++c1)
    for (std::int64_t c2 = 0; c2 < m2; ++c2) {
      Character chi{c1, c2};
      if (is_trivial_character(m1, m2, chi)) continue;
      Character conj = conjugate_character(m1, m2, chi);
      if (chi == conj) {
        std::int64_t d = mv.at(chi);
        dim += d * (d + 1) / 2;
      } else if (chi < conj) {  // visit each complex pair once
        dim += mv.at(chi) * mv.at(conj);
      }
    }
  return dim;
}

std::vector<AdjointFactor> adjoint_decomposition(
    const AbelianMultiplicityVector& mv) {
  const std::int64_t m1 = mv.m1(), m2 = mv.m2();
  std::vector<AdjointFactor> factors;
  for (std::int64_t c1 = 0; c1 < m1; ++c1)
    for (std::int64_t c2 = 0; c2 < m2; ++c2) {
      Character chi{c1, c2};
      if (is_trivial_character(m1, m2, chi)) continue;
      Character conj = conjugate_character(m1, m2, chi);
      if (chi == conj) {
        std::int64_t d = mv.at(chi);
        if (d > 0)
          factors.push_back(
              AdjointFactor{AdjointFactor::Kind::Symplectic, 0, 0, d});
      } else if (chi < conj) {
        std::int64_t p = mv.at(chi), q = mv.at(conj);
        if (p < q) std::swap(p, q);
        if (p == 0) continue;
        factors.push_back(
            AdjointFactor{AdjointFactor::Kind::SpecialUnitary, p, q, 0});
      }
    }
  // Keep SU factors first, the symplectic ones last, matching the cyclic
  // presentation.
  std::stable_partition(factors.begin(), factors.end(), [](const auto& f) {
    return f.kind == AdjointFactor::Kind::SpecialUnitary;
  });
  return factors;
}

namespace {

void finish_report(SpecialityReport& r, std::int64_t n_branch, bool cyclic) {
  std::int64_t delta_sum = 0;
  for (const auto& f : r.adjoint_factors) delta_sum += f.delta();
  if (delta_sum != r.dim_special)
    throw InternalInvariantError(
        "factor deltas sum to " + std::to_string(delta_sum) +
        " but dim S = " + std::to_string(r.dim_special));
  r.family_dim = n_branch - 3;
  if (r.family_dim > r.dim_special)
    throw InternalInvariantError(
        "family dimension N-3 = " + std::to_string(r.family_dim) +
        " exceeds dim S = " + std::to_string(r.dim_special));
  r.is_special = r.family_dim == r.dim_special;

  if (n_branch == 3 && r.dim_special == 0)
    r.notes.push_back("CM family, zero-dimensional");
  if (cyclic) {
    if (!r.is_special)
      r.notes.push_back(
          "not special (by the classification of special cyclic families)");
  } else {
    r.notes.push_back(r.is_special
                          ? "special (PEL criterion)"
                          : "not special by the PEL criterion "
                            "(classification not claimed)");
  }
}

}  // namespace

SpecialityReport analyze(const CyclicCoverDatum& input) {
  CyclicCoverDatum d = canonical_form_cyclic(input);
  SpecialityReport r;
  r.genus = genus_cyclic(d);
  MultiplicityVector mv = chevalley_weil_cyclic(d);
  if (mv.total() != r.genus)
    throw InternalInvariantError("multiplicity total " +
                                 std::to_string(mv.total()) +
                                 " != genus " + std::to_string(r.genus));
  r.dim_special = dim_special_cyclic(mv);
  r.adjoint_factors = adjoint_decomposition(mv);
  r.multiplicities = std::move(mv);
  std::int64_t n_branch = d.branch_count();
  r.datum = std::move(d);
  finish_report(r, n_branch, /*cyclic=*/true);
  return r;
}

SpecialityReport analyze(const AbelianCoverDatum& input) {
  AbelianCoverDatum d = canonical_form_abelian(input);
  SpecialityReport r;
  r.genus = genus_abelian(d);
  AbelianMultiplicityVector mv = multiplicity_vector_abelian(d);
  if (mv.total() != r.genus)
    throw InternalInvariantError("multiplicity total " +
                                 std::to_string(mv.total()) +
                                 " != genus " + std::to_string(r.genus));
  r.dim_special = dim_special_abelian(mv);
  r.adjoint_factors = adjoint_decomposition(mv);
  r.multiplicities = std::move(mv);
  std::int64_t n_branch = d.branch_count();
  r.datum = std::move(d);
  finish_report(r, n_branch, /*cyclic=*/false);
  return r;
}

}  // namespace covers
