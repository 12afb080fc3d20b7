#pragma once

#include "tamejumps/dvrlin.hpp"

#include <random>
#include <vector>

namespace tamejumps::testing {

/// Cofactor expansion along the first row.
inline Rat laplace_det(const std::vector<std::vector<Rat>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  Rat sum = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (m[0][c] == 0) continue;
    std::vector<std::vector<Rat>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<Rat> row;
      for (std::size_t k = 0; k < n; ++k) {
        if (k != c) row.push_back(m[r][k]);
      }
      minor.push_back(row);
    }
    Rat term = m[0][c] * laplace_det(minor);
    sum += c % 2 == 0 ? term : -term;
  }
  return sum;
}

/// Entries zero or unit * p^k with k <= max_val; units may carry denominators prime to p.
inline std::vector<std::vector<Rat>> random_local(std::mt19937_64& rng, std::uint32_t p, std::size_t n, int max_val) {
  std::uniform_int_distribution<int> val(0, max_val);
  std::uniform_int_distribution<int> unit(1, 4 * static_cast<int>(p));
  std::bernoulli_distribution zero(0.2), neg(0.5), frac(0.2);
  std::vector<std::vector<Rat>> m(n, std::vector<Rat>(n, Rat(0)));
  for (auto& row : m) {
    for (auto& x : row) {
      if (zero(rng)) continue;
      int u = unit(rng);
      while (u % static_cast<int>(p) == 0) ++u;
      Rat c = u;
      if (frac(rng)) {
        int den = unit(rng);
        while (den % static_cast<int>(p) == 0) ++den;
        c /= den;
      }
      c *= pow_rat(Rat(p), val(rng));
      x = neg(rng) ? -c : c;
    }
  }
  return m;
}

}  // namespace tamejumps::testing
