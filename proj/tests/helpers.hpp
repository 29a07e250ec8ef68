#pragma once

// Shared fixtures and independent oracles for the test suites. The oracles
// deliberately recompute results by a different route than the library
// (cofactor expansion instead of Bareiss, subset search instead of corner
// profiles) so agreement is evidence, not tautology.

#include <cstdint>
#include <vector>

#include "laddermat/errors.hpp"
#include "laddermat/ladder.hpp"
#include "laddermat/matrix.hpp"
#include "laddermat/permutation.hpp"
#include "laddermat/sampling.hpp"

namespace laddermat::testing {

// [3]x[3] minus the corner (1,3); the smallest one-sided ladder with r(L)=2.
inline Ladder ladder_8cell() {
  return Ladder::from_cells(3, 3,
                            {{1, 1}, {1, 2}, {2, 1}, {2, 2}, {2, 3}, {3, 1}, {3, 2}, {3, 3}});
}

// [3]x[3] minus (1,3) and (3,1); the smallest two-sided ladder with r(L)=2.
inline Ladder ladder_7cell() {
  return Ladder::from_cells(3, 3, {{1, 1}, {1, 2}, {2, 1}, {2, 2}, {2, 3}, {3, 2}, {3, 3}});
}

// Five-cell staircase; r(L) = 1, so at r = 2 every cell is subcritical.
inline Ladder stair5() {
  return Ladder::from_cells(3, 3, {{1, 1}, {2, 1}, {2, 2}, {3, 2}, {3, 3}});
}

// Nine-cell 4x4 ladder whose subcritical set at r = 2 is {(1,1),(1,2),(2,2)};
// the only fixture here where subcritical moves are not ladder-row/column
// images, so the subcritical_move class is exercised on its own.
inline Ladder subcrit9() {
  return Ladder::from_cells(
      4, 4, {{1, 1}, {1, 2}, {2, 2}, {2, 3}, {2, 4}, {3, 3}, {3, 4}, {4, 3}, {4, 4}});
}

// Plain cofactor expansion along the first row; exponential, fine up to 5x5.
inline Rational cofactor_det(const RationalMatrix& a) {
  const std::size_t n = a.rows();
  if (n == 1) return a.at(1, 1);
  Rational acc(0);
  for (std::size_t j = 1; j <= n; ++j) {
    if (a.at(1, j) == 0) continue;
    std::vector<std::size_t> rows, cols;
    for (std::size_t i = 2; i <= n; ++i) rows.push_back(i);
    for (std::size_t k = 1; k <= n; ++k)
      if (k != j) cols.push_back(k);
    Rational term = a.at(1, j) * cofactor_det(a.submatrix(rows, cols));
    if (j % 2 == 0) term = -term;
    acc += term;
  }
  return acc;
}

// Largest t with some t x t all-ones rectangle in the shape, by direct subset
// search over row and column index sets.
inline std::size_t brute_max_square(const Ladder& L) {
  const std::size_t m = L.m(), n = L.n();
  std::size_t best = 0;
  for (std::uint32_t rs = 1; rs < (1u << m); ++rs) {
    for (std::uint32_t cs = 1; cs < (1u << n); ++cs) {
      if (__builtin_popcount(rs) != __builtin_popcount(cs)) continue;
      bool full = true;
      for (std::size_t i = 1; i <= m && full; ++i) {
        if (!(rs & (1u << (i - 1)))) continue;
        for (std::size_t j = 1; j <= n && full; ++j) {
          if (!(cs & (1u << (j - 1)))) continue;
          if (!L.contains(i, j)) full = false;
        }
      }
      if (full) best = std::max<std::size_t>(best, __builtin_popcount(rs));
    }
  }
  return best;
}

// All ladder cell sets on the m x n grid found by testing every one of the
// 2^(mn) subsets against the validating constructor. The closure axiom alone
// is weaker (it admits gapped rows, e.g. {(1,1),(1,3),(2,1),(2,3)} on 2x3),
// so constructor success, not is_ladder, defines the constructible set.
inline std::vector<CellSet> brute_ladders(std::size_t m, std::size_t n) {
  std::vector<CellSet> out;
  const std::size_t total = m * n;
  for (std::uint64_t mask = 0; mask < (1ull << total); ++mask) {
    CellSet cells;
    for (std::size_t k = 0; k < total; ++k)
      if (mask & (1ull << k)) cells.push_back({k / n + 1, k % n + 1});
    try {
      Ladder L = Ladder::from_cells(m, n, cells);
      out.push_back(L.cells());
    } catch (const validation_error&) {
    }
  }
  return out;
}

// Identity image with the cells at positions a and b exchanged.
inline CellPermutation swap_cells(std::size_t ncells, std::size_t a, std::size_t b) {
  std::vector<std::size_t> img(ncells);
  for (std::size_t k = 0; k < ncells; ++k) img[k] = k;
  std::swap(img[a], img[b]);
  return CellPermutation{img};
}

// Random integer matrix with entries uniform in [lo, hi].
inline RationalMatrix random_int_matrix(SplitRng& rng, std::size_t m, std::size_t n,
                                        std::int64_t lo, std::int64_t hi) {
  RationalMatrix x(m, n);
  for (std::size_t i = 1; i <= m; ++i)
    for (std::size_t j = 1; j <= n; ++j) x.at(i, j) = Rational(rng.uniform_int(lo, hi));
  return x;
}

}  // namespace laddermat::testing
