#include "covers/cover_data.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "covers/modular.hpp"

namespace covers {

namespace {

std::string tuple_string(const std::vector<std::int64_t>& a) {
  std::string s;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(a[i]);
  }
  return s;
}

// Subgroup of Z/m1 x Z/m2 generated by a set of elements, as a membership
// table over the codes x1*m2 + x2.
std::vector<char> subgroup_closure(std::int64_t m1, std::int64_t m2,
                                   const std::vector<MonodromyPair>& gens) {
  const std::int64_t order = m1 * m2;
  std::vector<char> in(order, 0);
  std::vector<std::int64_t> members;
  in[0] = 1;
  members.push_back(0);
  for (const auto& g : gens) {
    std::int64_t ord = pair_order(m1, m2, g);
    // Union of the cosets S + k*g for k = 0 .. ord(g)-1; the union of
    // cosets of a subgroup by powers of one element is again a subgroup.
    std::size_t base_size = members.size();
    std::int64_t x1 = 0, x2 = 0;
    for (std::int64_t k = 1; k < ord; ++k) {
      x1 = mod_floor(x1 + g.first, m1);
      x2 = mod_floor(x2 + g.second, m2);
      for (std::size_t i = 0; i < base_size; ++i) {
        std::int64_t s = members[i];
        std::int64_t code =
            mod_floor(s / m2 + x1, m1) * m2 + mod_floor(s % m2 + x2, m2);
        if (!in[code]) {
          in[code] = 1;
          members.push_back(code);
        }
      }
    }
  }
  return in;
}

}  // namespace

CyclicCoverDatum validate_cyclic(std::int64_t m, std::int64_t n_branch,
                                 const std::vector<std::int64_t>& a) {
  using Code = ValidationError::Code;
  if (m < 2)
    throw ValidationError(Code::RejectModulus,
                          "m = " + std::to_string(m) + ", need m >= 2");
  if (n_branch < 3)
    throw ValidationError(Code::RejectTooFewBranchPoints,
                          "N = " + std::to_string(n_branch) +
                              ", need N >= 3");
  if (static_cast<std::int64_t>(a.size()) != n_branch)
    throw ValidationError(Code::RejectLengthMismatch,
                          "N = " + std::to_string(n_branch) + " but a has " +
                              std::to_string(a.size()) + " entries");

  CyclicCoverDatum d;
  d.m = m;
  d.a.reserve(a.size());
  std::int64_t sum = 0;
  std::int64_t g = m;
  for (std::size_t i = 0; i < a.size(); ++i) {
    std::int64_t r = mod_floor(a[i], m);
    if (r == 0)
      throw ValidationError(Code::RejectZeroMonodromy,
                            "a_" + std::to_string(i + 1) +
                                " is divisible by m = " + std::to_string(m));
    d.a.push_back(r);
    sum = (sum + r) % m;
    g = std::gcd(g, r);
  }
  if (sum != 0)
    throw ValidationError(Code::RejectSumNonzero,
                          "sum of a = (" + tuple_string(d.a) +
                              ") is " + std::to_string(sum) + " mod " +
                              std::to_string(m));
  if (g != 1)
    throw ValidationError(Code::RejectNonGenerating,
                          "gcd(a_1, ..., a_N, m) = " + std::to_string(g));
  return d;
}

AbelianCoverDatum validate_abelian(std::int64_t m1, std::int64_t m2,
                                   std::int64_t n_branch,
                                   const std::vector<MonodromyPair>& a) {
  using Code = ValidationError::Code;
  if (m1 < 2 || m2 < m1 || m2 % m1 != 0)
    throw ValidationError(Code::RejectModulus,
                          "need 2 <= m1 and m1 | m2, got (" +
                              std::to_string(m1) + ", " + std::to_string(m2) +
                              ")");
  if (n_branch < 3)
    throw ValidationError(Code::RejectTooFewBranchPoints,
                          "N = " + std::to_string(n_branch) +
                              ", need N >= 3");
  if (static_cast<std::int64_t>(a.size()) != n_branch)
    throw ValidationError(Code::RejectLengthMismatch,
                          "N = " + std::to_string(n_branch) + " but a has " +
                              std::to_string(a.size()) + " entries");

  AbelianCoverDatum d;
  d.m1 = m1;
  d.m2 = m2;
  d.a.reserve(a.size());
  std::int64_t s1 = 0, s2 = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    MonodromyPair r{mod_floor(a[i].first, m1), mod_floor(a[i].second, m2)};
    if (r.first == 0 && r.second == 0)
      throw ValidationError(Code::RejectZeroMonodromy,
                            "a_" + std::to_string(i + 1) + " is (0,0)");
    d.a.push_back(r);
    s1 = (s1 + r.first) % m1;
    s2 = (s2 + r.second) % m2;
  }
  if (s1 != 0 || s2 != 0)
    throw ValidationError(Code::RejectSumNonzero,
                          "componentwise sum is (" + std::to_string(s1) +
                              ", " + std::to_string(s2) + ")");
  auto closure = subgroup_closure(m1, m2, d.a);
  if (std::count(closure.begin(), closure.end(), 1) != d.group_order())
    throw ValidationError(Code::RejectNonGenerating,
                          "the a_i generate a proper subgroup of Z/" +
                              std::to_string(m1) + " x Z/" +
                              std::to_string(m2));
  return d;
}

std::int64_t genus_cyclic(const CyclicCoverDatum& d) {
  std::int64_t gcd_sum = 0;
  for (std::int64_t x : d.a) gcd_sum += std::gcd(x, d.m);
  std::int64_t twice = (d.branch_count() - 2) * d.m - gcd_sum;  // 2g - 2
  if (twice % 2 != 0)
    throw InternalInvariantError("odd ramification total for cyclic datum");
  std::int64_t g = 1 + twice / 2;
  if (g < 0) throw InternalInvariantError("negative genus for cyclic datum");
  return g;
}

std::int64_t pair_order(std::int64_t m1, std::int64_t m2,
                        const MonodromyPair& x) {
  return std::lcm(residue_order(x.first, m1), residue_order(x.second, m2));
}

std::int64_t genus_abelian(const AbelianCoverDatum& d) {
  const std::int64_t order = d.group_order();
  std::int64_t ram = 0;  // sum over i of (#points above t_i) * (e_i - 1)
  for (const auto& x : d.a) {
    std::int64_t e = pair_order(d.m1, d.m2, x);
    ram += (order / e) * (e - 1);
  }
  std::int64_t twice = ram - 2 * order;  // 2g - 2
  if (twice % 2 != 0)
    throw InternalInvariantError("odd ramification total for abelian datum");
  std::int64_t g = 1 + twice / 2;
  if (g < 0) throw InternalInvariantError("negative genus for abelian datum");
  return g;
}

CyclicCoverDatum canonical_form_cyclic(const CyclicCoverDatum& d) {
  std::vector<std::int64_t> best(d.a);
  std::sort(best.begin(), best.end());
  std::vector<std::int64_t> cand(d.a.size());
  for (std::int64_t u : units_mod(d.m)) {
    if (u == 1) continue;
    for (std::size_t i = 0; i < d.a.size(); ++i)
      cand[i] = (u * d.a[i]) % d.m;
    std::sort(cand.begin(), cand.end());
    if (cand < best) best = cand;
  }
  return CyclicCoverDatum{d.m, std::move(best)};
}

std::vector<GroupAutomorphism> automorphisms(std::int64_t m1, std::int64_t m2,
                                             std::int64_t aut_bound) {
  const std::int64_t order = m1 * m2;
  const std::int64_t candidates = m1 * m1 * m1 * m2;
  if (candidates > aut_bound)
    throw ValidationError(
        ValidationError::Code::AutGroupTooLarge,
        "automorphism search for Z/" + std::to_string(m1) + " x Z/" +
            std::to_string(m2) + " needs " + std::to_string(candidates) +
            " candidates, bound is " + std::to_string(aut_bound));

  // gamma must be a multiple of m2/m1 so that the image of (1,0) is killed
  // by m1; with that constraint every matrix is a homomorphism and the
  // bijective ones are the automorphisms.
  const std::int64_t step = m2 / m1;
  std::vector<GroupAutomorphism> result;
  std::vector<char> seen(order);
  for (std::int64_t alpha = 0; alpha < m1; ++alpha)
    for (std::int64_t beta = 0; beta < m1; ++beta)
      for (std::int64_t gamma0 = 0; gamma0 < m1; ++gamma0)
        for (std::int64_t delta = 0; delta < m2; ++delta) {
          const std::int64_t gamma = gamma0 * step;
          std::fill(seen.begin(), seen.end(), 0);
          std::vector<std::int64_t> image(order);
          bool bijective = true;
          for (std::int64_t x1 = 0; x1 < m1 && bijective; ++x1)
            for (std::int64_t x2 = 0; x2 < m2; ++x2) {
              std::int64_t y1 = (alpha * x1 + beta * x2) % m1;
              std::int64_t y2 = (gamma * x1 + delta * x2) % m2;
              std::int64_t code = y1 * m2 + y2;
              image[x1 * m2 + x2] = code;
              if (seen[code]) {
                bijective = false;
                break;
              }
              seen[code] = 1;
            }
          if (bijective)
            result.push_back(
                GroupAutomorphism{alpha, beta, gamma, delta, std::move(image)});
        }
  return result;
}

AbelianCoverDatum canonical_form_abelian(
    const AbelianCoverDatum& d, const std::vector<GroupAutomorphism>& auts) {
  const std::int64_t m2 = d.m2;
  std::vector<std::int64_t> codes(d.a.size());
  for (std::size_t i = 0; i < d.a.size(); ++i)
    codes[i] = d.a[i].first * m2 + d.a[i].second;

  std::vector<std::int64_t> best(codes);
  std::sort(best.begin(), best.end());
  std::vector<std::int64_t> cand(codes.size());
  for (const auto& phi : auts) {
    for (std::size_t i = 0; i < codes.size(); ++i)
      cand[i] = phi.code_map[codes[i]];
    std::sort(cand.begin(), cand.end());
    if (cand < best) best = cand;
  }

  AbelianCoverDatum out;
  out.m1 = d.m1;
  out.m2 = d.m2;
  out.a.reserve(best.size());
  for (std::int64_t code : best) out.a.emplace_back(code / m2, code % m2);
  return out;
}

AbelianCoverDatum canonical_form_abelian(const AbelianCoverDatum& d,
                                         std::int64_t aut_bound) {
  return canonical_form_abelian(d, automorphisms(d.m1, d.m2, aut_bound));
}

}  // namespace covers
