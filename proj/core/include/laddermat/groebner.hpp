#pragma once

#include <cstdint>
#include <vector>

#include "laddermat/polynomial.hpp"

namespace laddermat {

// Guard against runaway reductions: every polynomial-arithmetic pass charges
// its term count, and exceeding the limit raises resource_error instead of
// hanging. The process-wide default (10^6 term operations) can be changed,
// e.g. from the LADDERMAT_BUDGET environment variable in the CLI.
struct OpBudget {
  std::uint64_t limit;
  std::uint64_t used = 0;

  OpBudget() : limit(default_limit()) {}
  explicit OpBudget(std::uint64_t lim) : limit(lim) {}

  void charge(std::uint64_t n);

  static std::uint64_t default_limit();
  static void set_default_limit(std::uint64_t lim);
};

using IdealBasis = std::vector<Polynomial>;

// Remainder of p under multivariate division by basis (in the given listing
// order, first divisor wins); deterministic. A null budget uses a fresh
// default-sized budget for this call.
Polynomial normal_form(const Polynomial& p, const IdealBasis& basis, const VarOrder& ord,
                       OpBudget* budget = nullptr);

// S(f, g) = (lcm/lt(f)) f - (lcm/lt(g)) g with both sides scaled monic, so
// the leading terms cancel exactly.
Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const VarOrder& ord);

// Buchberger with normal pair selection (lowest lcm degree first) and the
// coprime-leading-term skip. Output is the reduced basis: minimal, monic,
// tails fully reduced, sorted descending by leading monomial.
IdealBasis buchberger(const IdealBasis& generators, const VarOrder& ord,
                      OpBudget* budget = nullptr);

// True iff every S-polynomial of the basis reduces to zero (coprime pairs
// skipped, which is sound).
bool is_groebner(const IdealBasis& basis, const VarOrder& ord, OpBudget* budget = nullptr);

// Monomial ideal membership: some generator divides the monomial.
bool monomial_ideal_contains(const std::vector<Monomial>& generators, const Monomial& mono);

// Krull dimension of R/(generators) for a squarefree monomial ideal: the
// largest variable set containing the support of no generator. Exhaustive
// subset search; intended for small variable counts.
std::size_t monomial_ideal_dimension(const std::vector<Monomial>& generators,
                                     std::size_t nvars);

}  // namespace laddermat
