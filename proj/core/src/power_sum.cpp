#include "laddermat/power_sum.hpp"

#include <algorithm>

#include "laddermat/determinantal.hpp"
#include "laddermat/errors.hpp"
#include "laddermat/sampling.hpp"

namespace laddermat {

namespace {

void check_grid(const RationalMatrix& X, const Ladder& L) {
  if (X.rows() != L.m() || X.cols() != L.n()) {
    throw dimension_error("matrix dimensions do not match the ladder grid");
  }
}

void check_support(const RationalMatrix& X, const Ladder& L) {
  check_grid(X, L);
  for (std::size_t i = 1; i <= L.m(); ++i) {
    for (std::size_t j = 1; j <= L.n(); ++j) {
      if (!L.contains(i, j) && X.at(i, j) != 0) {
        throw domain_error("matrix has a nonzero entry outside the ladder");
      }
    }
  }
}

Rational rational_pow(const Rational& x, std::size_t nu) {
  using boost::multiprecision::pow;
  return Rational(pow(numerator_of(x), static_cast<unsigned>(nu)),
                  pow(denominator_of(x), static_cast<unsigned>(nu)));
}

}  // namespace

Rational power_sum(const RationalMatrix& X, const Ladder& L, std::size_t nu) {
  if (nu < 1) throw argument_error("power-sum exponent must be at least 1");
  check_grid(X, L);
  Rational sum = 0;
  for (Cell c : L.cells()) sum += rational_pow(X.at(c.i, c.j), nu);
  return sum;
}

bool same_multiset(const RationalMatrix& X, const RationalMatrix& Y, const Ladder& L) {
  check_support(X, L);
  check_support(Y, L);
  std::vector<Rational> a, b;
  a.reserve(L.size());
  b.reserve(L.size());
  for (Cell c : L.cells()) {
    a.push_back(X.at(c.i, c.j));
    b.push_back(Y.at(c.i, c.j));
  }
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

std::vector<Polynomial> symbolic_power_polys(const Ladder& L, const RationalMatrix& X) {
  check_support(X, L);
  const std::size_t nvars = L.size();
  std::vector<Polynomial> out;
  out.reserve(nvars);
  for (std::size_t nu = 1; nu <= nvars; ++nu) {
    std::vector<Polynomial::Term> terms;
    for (std::size_t k = 0; k < nvars; ++k) {
      Monomial mono(nvars);
      mono.exponents[k] = static_cast<std::uint32_t>(nu);
      terms.emplace_back(std::move(mono), Rational(1));
    }
    terms.emplace_back(Monomial(nvars), -power_sum(X, L, nu));
    out.push_back(Polynomial::from_terms(nvars, std::move(terms)));
  }
  return out;
}

PowerSumSystem build_system(const RationalMatrix& X, const Ladder& L, std::size_t r,
                            std::uint64_t seed, std::int64_t bound) {
  check_support(X, L);
  if (bound < 1) throw argument_error("coefficient bound must be at least 1");
  if (ladder_rank(X, L) != r) {
    throw argument_error("base point must have ladder rank exactly r");
  }
  const std::size_t ncombos = variety_dim(L, r) + 1;
  SplitRng rng(seed);
  PowerSumSystem sys{X, L, r, {}, seed};
  sys.combos.resize(ncombos);
  for (auto& combo : sys.combos) {
    combo.reserve(L.size());
    for (std::size_t nu = 1; nu <= L.size(); ++nu) {
      combo.emplace_back(rng.uniform_int(-bound, bound));
    }
  }
  return sys;
}

std::vector<Polynomial> combo_polynomials(const PowerSumSystem& sys) {
  std::vector<Polynomial> pows = symbolic_power_polys(sys.ladder, sys.base_point);
  std::vector<Polynomial> out;
  out.reserve(sys.combos.size());
  for (const auto& combo : sys.combos) {
    Polynomial h = Polynomial::zero(sys.ladder.size());
    for (std::size_t k = 0; k < pows.size(); ++k) h = h + pows[k].scaled(combo[k]);
    out.push_back(std::move(h));
  }
  return out;
}

bool system_check_point(const PowerSumSystem& sys, const RationalMatrix& Z0) {
  check_support(Z0, sys.ladder);
  if (!ladder_rank_at_most(Z0, sys.ladder, sys.r)) return false;
  std::vector<Rational> gaps;
  gaps.reserve(sys.ladder.size());
  for (std::size_t nu = 1; nu <= sys.ladder.size(); ++nu) {
    gaps.push_back(power_sum(Z0, sys.ladder, nu) - power_sum(sys.base_point, sys.ladder, nu));
  }
  for (const auto& combo : sys.combos) {
    Rational h = 0;
    for (std::size_t k = 0; k < gaps.size(); ++k) h += combo[k] * gaps[k];
    if (h != 0) return false;
  }
  return true;
}

bool system_zero_dimensional(const PowerSumSystem& sys, OpBudget* budget) {
  const std::size_t nvars = sys.ladder.size();
  if (nvars > 6) {
    throw resource_error("zero-dimensionality check is limited to 6 grid variables");
  }
  VariableGrid grid(sys.ladder);
  IdealBasis gens;
  // At r >= r(L) the rank constraint is vacuous (no (r+1)-minor fits in the
  // ladder) and the system is the power-sum combos alone.
  if (sys.r < max_square(grid.ladder())) gens = det_ideal(grid, sys.r);
  for (Polynomial& h : combo_polynomials(sys)) gens.push_back(std::move(h));
  // Zero-dimensionality is order-independent, so use grevlex: pure lex blows
  // up on these dense combo systems, grevlex stays small.
  const VarOrder ord = VarOrder::grevlex(nvars);
  IdealBasis gb = buchberger(gens, ord, budget);
  std::vector<bool> pure(nvars, false);
  for (const Polynomial& g : gb) {
    if (!g.is_zero() && g.terms().size() == 1 && g.terms()[0].first.is_one()) {
      return true;  // unit ideal: empty variety
    }
    Monomial lead = initial_monomial(g, ord);
    std::size_t support = 0, var = 0;
    for (std::size_t v = 0; v < nvars; ++v) {
      if (lead.exponents[v] > 0) {
        ++support;
        var = v;
      }
    }
    if (support == 1) pure[var] = true;
  }
  return std::all_of(pure.begin(), pure.end(), [](bool b) { return b; });
}

}  // namespace laddermat
