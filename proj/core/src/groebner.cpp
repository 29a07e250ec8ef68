#include "laddermat/groebner.hpp"

#include <algorithm>
#include <atomic>
#include <bit>

#include "laddermat/errors.hpp"

namespace laddermat {

namespace {

std::atomic<std::uint64_t> g_default_budget{1'000'000};

}  // namespace

std::uint64_t OpBudget::default_limit() { return g_default_budget.load(); }

void OpBudget::set_default_limit(std::uint64_t lim) { g_default_budget.store(lim); }

void OpBudget::charge(std::uint64_t n) {
  used += n;
  if (used > limit) {
    throw resource_error("term-operation budget exceeded (" + std::to_string(limit) + ")");
  }
}

Polynomial normal_form(const Polynomial& p, const IdealBasis& basis, const VarOrder& ord,
                       OpBudget* budget) {
  OpBudget local;
  if (!budget) budget = &local;

  std::vector<Polynomial::Term> remainder;
  Polynomial h = p;
  while (!h.is_zero()) {
    const auto& [lm, lc] = h.leading_term(ord);
    const Polynomial* divisor = nullptr;
    for (const Polynomial& g : basis) {
      if (!g.is_zero() && initial_monomial(g, ord).divides(lm)) {
        divisor = &g;
        break;
      }
    }
    if (divisor) {
      const auto& [gm, gc] = divisor->leading_term(ord);
      budget->charge(divisor->term_count() + h.term_count());
      h = h - divisor->times_term(lm.quotient(gm), lc / gc);
    } else {
      remainder.emplace_back(lm, lc);
      budget->charge(h.term_count());
      h = h - Polynomial::from_terms(h.nvars(), {{lm, lc}});
    }
  }
  return Polynomial::from_terms(p.nvars(), std::move(remainder));
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const VarOrder& ord) {
  if (f.is_zero() || g.is_zero()) throw argument_error("s_polynomial of a zero polynomial");
  const auto& [fm, fc] = f.leading_term(ord);
  const auto& [gm, gc] = g.leading_term(ord);
  const Monomial lcm = fm.lcm(gm);
  return f.times_term(lcm.quotient(fm), Rational(1) / fc) -
         g.times_term(lcm.quotient(gm), Rational(1) / gc);
}

namespace {

struct Pair {
  std::size_t i, j;
  Monomial lcm;
  std::size_t degree;
};

void push_pairs(std::vector<Pair>& pairs, const IdealBasis& basis, const VarOrder& ord,
                std::size_t fresh) {
  const Monomial lm_fresh = initial_monomial(basis[fresh], ord);
  for (std::size_t i = 0; i < fresh; ++i) {
    const Monomial lm_i = initial_monomial(basis[i], ord);
    if (lm_i.coprime(lm_fresh)) continue;  // Buchberger's first criterion
    Monomial l = lm_i.lcm(lm_fresh);
    std::size_t deg = l.degree();
    pairs.push_back({i, fresh, std::move(l), deg});
  }
}

// Lowest lcm degree first; ties by index for determinism.
std::size_t pop_best(std::vector<Pair>& pairs) {
  std::size_t best = 0;
  for (std::size_t k = 1; k < pairs.size(); ++k) {
    const Pair &a = pairs[k], &b = pairs[best];
    if (a.degree < b.degree || (a.degree == b.degree && (a.i < b.i || (a.i == b.i && a.j < b.j)))) {
      best = k;
    }
  }
  return best;
}

Polynomial make_monic(const Polynomial& p, const VarOrder& ord) {
  if (p.is_zero()) return p;
  return p.scaled(Rational(1) / p.leading_term(ord).second);
}

}  // namespace

IdealBasis buchberger(const IdealBasis& generators, const VarOrder& ord, OpBudget* budget) {
  OpBudget local;
  if (!budget) budget = &local;

  IdealBasis basis;
  for (const Polynomial& g : generators) {
    if (!g.is_zero()) basis.push_back(make_monic(g, ord));
  }
  std::vector<Pair> pairs;
  for (std::size_t k = 1; k < basis.size(); ++k) push_pairs(pairs, basis, ord, k);

  while (!pairs.empty()) {
    std::size_t at = pop_best(pairs);
    Pair pair = std::move(pairs[at]);
    pairs.erase(pairs.begin() + static_cast<std::ptrdiff_t>(at));
    Polynomial s = s_polynomial(basis[pair.i], basis[pair.j], ord);
    Polynomial h = normal_form(s, basis, ord, budget);
    if (h.is_zero()) continue;
    basis.push_back(make_monic(h, ord));
    push_pairs(pairs, basis, ord, basis.size() - 1);
  }

  // Minimalize: drop elements whose leading monomial another element divides.
  std::vector<bool> keep(basis.size(), true);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const Monomial lm_i = initial_monomial(basis[i], ord);
    for (std::size_t j = 0; j < basis.size(); ++j) {
      if (i == j || !keep[j]) continue;
      const Monomial lm_j = initial_monomial(basis[j], ord);
      if (lm_j.divides(lm_i) && (lm_j != lm_i || j < i)) {
        keep[i] = false;
        break;
      }
    }
  }
  IdealBasis minimal;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (keep[i]) minimal.push_back(std::move(basis[i]));
  }

  // Interreduce tails for the unique reduced basis.
  IdealBasis reduced = minimal;
  for (std::size_t i = 0; i < reduced.size(); ++i) {
    IdealBasis others;
    for (std::size_t j = 0; j < reduced.size(); ++j) {
      if (j != i) others.push_back(reduced[j]);
    }
    reduced[i] = make_monic(normal_form(reduced[i], others, ord, budget), ord);
  }

  std::sort(reduced.begin(), reduced.end(), [&](const Polynomial& a, const Polynomial& b) {
    return lex_compare(initial_monomial(a, ord), initial_monomial(b, ord), ord) > 0;
  });
  return reduced;
}

bool is_groebner(const IdealBasis& basis, const VarOrder& ord, OpBudget* budget) {
  OpBudget local;
  if (!budget) budget = &local;
  for (const Polynomial& g : basis) {
    if (g.is_zero()) throw argument_error("basis contains the zero polynomial");
  }
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      if (initial_monomial(basis[i], ord).coprime(initial_monomial(basis[j], ord))) continue;
      Polynomial s = s_polynomial(basis[i], basis[j], ord);
      if (!normal_form(s, basis, ord, budget).is_zero()) return false;
    }
  }
  return true;
}

bool monomial_ideal_contains(const std::vector<Monomial>& generators, const Monomial& mono) {
  return std::any_of(generators.begin(), generators.end(),
                     [&](const Monomial& g) { return g.divides(mono); });
}

std::size_t monomial_ideal_dimension(const std::vector<Monomial>& generators,
                                     std::size_t nvars) {
  if (nvars > 20) throw resource_error("exhaustive dimension search capped at 20 variables");
  std::vector<std::uint32_t> supports;
  for (const Monomial& g : generators) {
    if (g.nvars() != nvars) throw dimension_error("generator variable count mismatch");
    std::uint32_t mask = 0;
    for (std::size_t v = 0; v < nvars; ++v) {
      if (g.exponents[v] > 1) throw argument_error("generators must be squarefree");
      if (g.exponents[v] == 1) mask |= std::uint32_t{1} << v;
    }
    if (mask == 0) throw argument_error("constant generator makes the ideal the unit ideal");
    supports.push_back(mask);
  }
  // Largest independent set: no generator support contained in the chosen
  // variable set.
  std::size_t best = 0;
  for (std::uint32_t set = 0; set < (std::uint32_t{1} << nvars); ++set) {
    bool ok = true;
    for (std::uint32_t s : supports) {
      if ((s & set) == s) {
        ok = false;
        break;
      }
    }
    if (ok) best = std::max(best, static_cast<std::size_t>(std::popcount(set)));
  }
  return best;
}

}  // namespace laddermat
