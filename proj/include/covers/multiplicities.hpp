#pragma once

#include <cstdint>
#include <vector>

#include "covers/cover_data.hpp"

namespace covers {

// Eigenspace dimensions d_n of the group action on holomorphic
// differentials, indexed by the nonzero residues n mod m. d_0 is
// identically zero and is not a stored entry; the stored entries sum to the
// genus of the datum.
class MultiplicityVector {
 public:
  MultiplicityVector() = default;
  MultiplicityVector(std::int64_t m, std::vector<std::int64_t> d)
      : m_(m), d_(std::move(d)) {}

  std::int64_t modulus() const { return m_; }

  // d_{n mod m}; zero at n = 0.
  std::int64_t at(std::int64_t n) const;

  // Sum of all entries; equals the genus for vectors built from valid data.
  std::int64_t total() const;

  friend bool operator==(const MultiplicityVector&,
                         const MultiplicityVector&) = default;

 private:
  std::int64_t m_ = 0;
  std::vector<std::int64_t> d_;  // size m, index n, d_[0] == 0
};

// A complex character of Z/m1 x Z/m2: (x1, x2) -> exp(2 pi i (c1 x1 / m1 +
// c2 x2 / m2)). Conjugation negates both components.
struct Character {
  std::int64_t c1 = 0;
  std::int64_t c2 = 0;

  friend bool operator==(const Character&, const Character&) = default;
  friend auto operator<=>(const Character&, const Character&) = default;
};

Character conjugate_character(std::int64_t m1, std::int64_t m2,
                              const Character& chi);
bool is_trivial_character(std::int64_t m1, std::int64_t m2,
                          const Character& chi);
bool is_real_character(std::int64_t m1, std::int64_t m2,
                       const Character& chi);
std::int64_t character_order(std::int64_t m1, std::int64_t m2,
                             const Character& chi);

// Per-character multiplicities d_rho for an abelian datum. Entries are
// indexed by the nontrivial characters; the trivial character has
// multiplicity zero and is not stored.
class AbelianMultiplicityVector {
 public:
  AbelianMultiplicityVector() = default;
  AbelianMultiplicityVector(std::int64_t m1, std::int64_t m2,
                            std::vector<std::int64_t> d)
      : m1_(m1), m2_(m2), d_(std::move(d)) {}

  std::int64_t m1() const { return m1_; }
  std::int64_t m2() const { return m2_; }

  std::int64_t at(const Character& chi) const;
  std::int64_t total() const;

  friend bool operator==(const AbelianMultiplicityVector&,
                         const AbelianMultiplicityVector&) = default;

 private:
  std::int64_t m1_ = 0, m2_ = 0;
  std::vector<std::int64_t> d_;  // size m1*m2, index c1*m2 + c2
};

// d_n = -1 + sum_i <-n a_i / m> for n != 0, evaluated as exact integer
// arithmetic with denominator m.
MultiplicityVector chevalley_weil_cyclic(const CyclicCoverDatum& d);

// Multiplicity of one nontrivial character, by reduction to the cyclic
// formula for the induced cover. Throws TrivialCharacter on the trivial one.
std::int64_t character_multiplicity(const AbelianCoverDatum& d,
                                    const Character& chi);

// All character multiplicities at once; entries sum to the genus.
AbelianMultiplicityVector multiplicity_vector_abelian(
    const AbelianCoverDatum& d);

}  // namespace covers
