#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "laddermat/groebner.hpp"
#include "laddermat/ladder.hpp"
#include "laddermat/matrix.hpp"
#include "laddermat/polynomial.hpp"

namespace laddermat {

// Sum of the nu-th powers of the in-ladder entries of X; nu >= 1.
Rational power_sum(const RationalMatrix& X, const Ladder& L, std::size_t nu);

// True iff X and Y carry the same multiset of in-ladder entries. Both must
// vanish outside the ladder. Implemented by sorting; agreement of the power
// sums for nu = 1..#L is an equivalent characterization the tests check
// against, not the implementation.
bool same_multiset(const RationalMatrix& X, const RationalMatrix& Y, const Ladder& L);

// The #L polynomials sum_{cells} z^nu - power_sum(X, nu) for nu = 1..#L,
// over the row-major grid variables. Every one vanishes at X.
std::vector<Polynomial> symbolic_power_polys(const Ladder& L, const RationalMatrix& X);

// A seeded bundle of random linear combinations of the power-sum equations
// around a hidden base point of ladder rank r.
struct PowerSumSystem {
  RationalMatrix base_point;
  Ladder ladder;
  std::size_t r = 0;
  std::vector<std::vector<Rational>> combos;  // combo coefficients, each of length #L
  std::uint64_t seed = 0;
};

// Draws variety_dim(L, r) + 1 coefficient vectors with integer entries
// uniform in [-bound, bound] from the seeded generator (combo by combo,
// nu ascending). Requires ladder_rank(X, L) == r.
PowerSumSystem build_system(const RationalMatrix& X, const Ladder& L, std::size_t r,
                            std::uint64_t seed, std::int64_t bound = 10000);

// The combo polynomials h_i = sum_nu c_{i,nu} (p_nu(Z) - p_nu(X)).
std::vector<Polynomial> combo_polynomials(const PowerSumSystem& sys);

// True iff Z0 has ladder rank at most r and every combo vanishes at Z0
// (evaluated through power sums, no symbolic expansion).
bool system_check_point(const PowerSumSystem& sys, const RationalMatrix& Z0);

// Whether the ideal generated by the (r+1)-minors together with the combos
// has a zero-dimensional quotient: computes a Groebner basis and checks that
// every variable contributes a pure power to the initial ideal. Refused on
// grids with more than 6 cells (Groebner feasibility guard).
bool system_zero_dimensional(const PowerSumSystem& sys, OpBudget* budget = nullptr);

}  // namespace laddermat
