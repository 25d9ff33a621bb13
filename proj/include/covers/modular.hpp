#pragma once

#include <cstdint>
#include <numeric>
#include <vector>

namespace covers {

// Least nonnegative representative of x mod m (m > 0).
inline std::int64_t mod_floor(std::int64_t x, std::int64_t m) {
  std::int64_t r = x % m;
  return r < 0 ? r + m : r;
}

// Multiplicative units of Z/mZ, ascending. m >= 2.
inline std::vector<std::int64_t> units_mod(std::int64_t m) {
  std::vector<std::int64_t> units;
  for (std::int64_t u = 1; u < m; ++u)
    if (std::gcd(u, m) == 1) units.push_back(u);
  return units;
}

// Divisors of n > 0, ascending.
inline std::vector<std::int64_t> divisors(std::int64_t n) {
  std::vector<std::int64_t> small, large;
  for (std::int64_t d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      small.push_back(d);
      if (d != n / d) large.push_back(n / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

// Order of the residue class a in Z/mZ.
inline std::int64_t residue_order(std::int64_t a, std::int64_t m) {
  return m / std::gcd(mod_floor(a, m), m);
}

}  // namespace covers
