#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

namespace wappell::detail {

// Exact determinant over a commutative ring (no division). Expands row by row
// with minors keyed by column subsets, so the cost is ~n*2^n ring
// multiplications instead of the n! of naive cofactor expansion. Zero entries
// and vanishing minors are pruned, which matters for the banded matrices this
// library produces (Wronskians, Jacobi-Trudi).
//
// Ring requirements: default construction = zero, static one(), is_zero(),
// operator+=, operator*, unary operator-.
template <class Ring>
Ring determinant(const std::vector<std::vector<Ring>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return Ring::one();
  if (n > 31) throw std::invalid_argument("determinant: matrix too large");
  for (const auto& row : m) {
    if (row.size() != n) {
      throw std::invalid_argument("determinant: matrix not square");
    }
  }

  // dp maps a set of used columns (bitmask) to the minor of the processed rows
  // on those columns. std::map keeps the fold order deterministic.
  std::map<std::uint32_t, Ring> dp;
  dp.emplace(0U, Ring::one());
  for (std::size_t i = 0; i < n; ++i) {
    std::map<std::uint32_t, Ring> next;
    for (const auto& [mask, minor] : dp) {
      if (minor.is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j) {
        const std::uint32_t bit = 1U << j;
        if (mask & bit) continue;
        const Ring& entry = m[i][j];
        if (entry.is_zero()) continue;
        // Cofactor sign for appending row i at the position column j takes
        // inside the enlarged column set (both indices zero-based).
        const int pos = __builtin_popcount(mask & (bit - 1U));
        Ring term = minor * entry;
        if ((static_cast<int>(i) + pos) % 2 != 0) term = -term;
        auto it = next.find(mask | bit);
        if (it == next.end()) {
          next.emplace(mask | bit, std::move(term));
        } else {
          it->second += term;
        }
      }
    }
    dp = std::move(next);
  }
  auto it = dp.find((n == 31) ? 0x7fffffffU : ((1U << n) - 1U));
  return it == dp.end() ? Ring() : it->second;
}

}  // namespace wappell::detail
