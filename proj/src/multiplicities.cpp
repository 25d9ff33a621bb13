#include "covers/multiplicities.hpp"

#include <numeric>
#include <string>

#include "covers/modular.hpp"

namespace covers {

std::int64_t MultiplicityVector::at(std::int64_t n) const {
  return d_[mod_floor(n, m_)];
}

std::int64_t MultiplicityVector::total() const {
  std::int64_t t = 0;
  for (std::int64_t v : d_) t += v;
  return t;
}

Character conjugate_character(std::int64_t m1, std::int64_t m2,
                              const Character& chi) {
  return Character{mod_floor(-chi.c1, m1), mod_floor(-chi.c2, m2)};
}

bool is_trivial_character(std::int64_t m1, std::int64_t m2,
                          const Character& chi) {
  return mod_floor(chi.c1, m1) == 0 && mod_floor(chi.c2, m2) == 0;
}

bool is_real_character(std::int64_t m1, std::int64_t m2,
                       const Character& chi) {
  return conjugate_character(m1, m2, chi) ==
         Character{mod_floor(chi.c1, m1), mod_floor(chi.c2, m2)};
}

std::int64_t character_order(std::int64_t m1, std::int64_t m2,
                             const Character& chi) {
  return std::lcm(residue_order(chi.c1, m1), residue_order(chi.c2, m2));
}

std::int64_t AbelianMultiplicityVector::at(const Character& chi) const {
  return d_[mod_floor(chi.c1, m1_) * m2_ + mod_floor(chi.c2, m2_)];
}

std::int64_t AbelianMultiplicityVector::total() const {
  std::int64_t t = 0;
  for (std::int64_t v : d_) t += v;
  return t;
}

MultiplicityVector chevalley_weil_cyclic(const CyclicCoverDatum& d) {
  const std::int64_t m = d.m;
  std::vector<std::int64_t> dims(m, 0);
  for (std::int64_t n = 1; n < m; ++n) {
    // Exactly the fractional-part sum, cleared of denominators: each term
    // <-n a_i / m> is ((-n a_i) mod m) / m.
    std::int64_t s = 0;
    for (std::int64_t x : d.a) s += mod_floor(-n * x, m);
    if (s % m != 0)
      throw InternalInvariantError(
          "fractional-part sum not integral at n = " + std::to_string(n));
    dims[n] = s / m - 1;
    if (dims[n] < 0)
      throw InternalInvariantError("negative multiplicity at n = " +
                                   std::to_string(n));
  }
  return MultiplicityVector(m, std::move(dims));
}

std::int64_t character_multiplicity(const AbelianCoverDatum& d,
                                    const Character& chi) {
  if (is_trivial_character(d.m1, d.m2, chi))
    throw ValidationError(ValidationError::Code::TrivialCharacter,
                          "the trivial character has multiplicity 0 by "
                          "convention and is not accepted");
  // chi(a_i) = exp(2 pi i e_i / m2) with e_i on the common denominator m2.
  const std::int64_t scale = d.m2 / d.m1;
  std::int64_t s = 0;
  for (const auto& x : d.a) {
    std::int64_t e = mod_floor(chi.c1 * x.first * scale + chi.c2 * x.second,
                               d.m2);
    s += mod_floor(-e, d.m2);
  }
  if (s % d.m2 != 0)
    throw InternalInvariantError("fractional-part sum not integral for "
                                 "character");
  std::int64_t mult = s / d.m2 - 1;
  if (mult < 0)
    throw InternalInvariantError("negative character multiplicity");
  return mult;
}

AbelianMultiplicityVector multiplicity_vector_abelian(
    const AbelianCoverDatum& d) {
  std::vector<std::int64_t> dims(d.group_order(), 0);
  for (std::int64_t c1 = 0; c1 < d.m1; ++c1)
    for (std::int64_t c2 = 0; c2 < d.m2; ++c2) {
      if (c1 == 0 && c2 == 0) continue;
      dims[c1 * d.m2 + c2] = character_multiplicity(d, Character{c1, c2});
    }
  return AbelianMultiplicityVector(d.m1, d.m2, std::move(dims));
}

}  // namespace covers
