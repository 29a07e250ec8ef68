#include "laddermat/determinantal.hpp"

#include <algorithm>
#include <bit>
#include <unordered_map>

#include "laddermat/errors.hpp"

namespace laddermat {

VariableGrid::VariableGrid(Ladder ladder) : ladder_(std::move(ladder)) {}

std::size_t VariableGrid::var_index(std::size_t i, std::size_t j) const {
  const CellSet& cells = ladder_.cells();
  Cell c{i, j};
  auto it = std::lower_bound(cells.begin(), cells.end(), c);
  if (it == cells.end() || *it != c) throw index_error("cell is not in the ladder");
  return static_cast<std::size_t>(it - cells.begin());
}

Cell VariableGrid::cell_of(std::size_t k) const {
  if (k >= ladder_.size()) throw index_error("variable index out of range");
  return ladder_.cells()[k];
}

std::string VariableGrid::name(std::size_t k) const {
  Cell c = cell_of(k);
  if (ladder_.m() <= 9 && ladder_.n() <= 9) {
    return "z" + std::to_string(c.i) + std::to_string(c.j);
  }
  return "z" + std::to_string(c.i) + "_" + std::to_string(c.j);
}

std::vector<std::string> VariableGrid::names() const {
  std::vector<std::string> out;
  out.reserve(nvars());
  for (std::size_t k = 0; k < nvars(); ++k) out.push_back(name(k));
  return out;
}

Polynomial VariableGrid::variable(std::size_t k) const {
  if (k >= nvars()) throw index_error("variable index out of range");
  return Polynomial::variable(nvars(), k);
}

VarOrder diagonal_order(const VariableGrid& g) { return VarOrder::identity(g.nvars()); }

namespace {

constexpr std::size_t kMaxMinorSize = 5;

void validate_spec(const VariableGrid& g, const MinorSpec& spec) {
  if (spec.rows.size() != spec.cols.size()) {
    throw argument_error("minor row and column sets differ in size");
  }
  if (spec.rows.empty()) throw argument_error("minor index sets are empty");
  for (std::size_t a = 1; a < spec.rows.size(); ++a) {
    if (spec.rows[a] <= spec.rows[a - 1]) {
      throw argument_error("minor row set is not strictly increasing");
    }
  }
  for (std::size_t b = 1; b < spec.cols.size(); ++b) {
    if (spec.cols[b] <= spec.cols[b - 1]) {
      throw argument_error("minor column set is not strictly increasing");
    }
  }
  const Ladder& L = g.ladder();
  for (std::size_t i : spec.rows) {
    for (std::size_t j : spec.cols) {
      if (i < 1 || i > L.m() || j < 1 || j > L.n() || !L.contains(i, j)) {
        throw argument_error("minor rectangle is not contained in the ladder");
      }
    }
  }
  if (spec.rows.size() > kMaxMinorSize) {
    throw resource_error("symbolic minors larger than 5 x 5 are not supported");
  }
}

// Cofactor expansion along successive rows, memoized on the set of columns
// still in play (the row is determined by how many columns remain).
// entries[a][b] is the variable index sitting at position (a, b).
class MinorExpander {
 public:
  MinorExpander(std::size_t nvars, const std::vector<std::vector<std::size_t>>& entries)
      : nvars_(nvars), entries_(entries), t_(entries.size()) {}

  Polynomial run() { return expand((std::uint32_t{1} << t_) - 1); }

 private:
  Polynomial expand(std::uint32_t colmask) {
    if (colmask == 0) return Polynomial::constant(nvars_, 1);
    auto it = memo_.find(colmask);
    if (it != memo_.end()) return it->second;
    const std::size_t row = t_ - static_cast<std::size_t>(std::popcount(colmask));
    Polynomial acc = Polynomial::zero(nvars_);
    int sign = 1;
    for (std::size_t b = 0; b < t_; ++b) {
      const std::uint32_t bit = std::uint32_t{1} << b;
      if (!(colmask & bit)) continue;
      Monomial var(nvars_);
      var.exponents[entries_[row][b]] = 1;
      acc = acc + expand(colmask & ~bit).times_term(var, Rational(sign));
      sign = -sign;
    }
    memo_.emplace(colmask, acc);
    return acc;
  }

  std::size_t nvars_;
  const std::vector<std::vector<std::size_t>>& entries_;
  std::size_t t_;
  std::unordered_map<std::uint32_t, Polynomial> memo_;
};

}  // namespace

Polynomial minor_polynomial(const VariableGrid& g, const MinorSpec& spec) {
  validate_spec(g, spec);
  const std::size_t t = spec.rows.size();
  std::vector<std::vector<std::size_t>> entries(t, std::vector<std::size_t>(t));
  for (std::size_t a = 0; a < t; ++a) {
    for (std::size_t b = 0; b < t; ++b) {
      entries[a][b] = g.var_index(spec.rows[a], spec.cols[b]);
    }
  }
  return MinorExpander(g.nvars(), entries).run();
}

std::vector<std::pair<MinorSpec, Polynomial>> ladder_minors(const VariableGrid& g,
                                                            std::size_t t) {
  if (t < 1 || t > max_square(g.ladder())) {
    throw argument_error("minor size exceeds the largest square inside the ladder");
  }
  std::vector<std::pair<MinorSpec, Polynomial>> out;
  for (auto& [rows, cols] : rectangles_in(g.ladder(), t)) {
    MinorSpec spec{rows, cols};
    Polynomial p = minor_polynomial(g, spec);
    out.emplace_back(std::move(spec), std::move(p));
  }
  return out;
}

IdealBasis det_ideal(const VariableGrid& g, std::size_t r) {
  if (r < 1 || r >= max_square(g.ladder())) {
    throw argument_error("rank bound must satisfy 1 <= r < the largest square size");
  }
  IdealBasis basis;
  for (auto& [spec, poly] : ladder_minors(g, r + 1)) basis.push_back(std::move(poly));
  return basis;
}

bool verify_gb_minors(const VariableGrid& g, std::size_t r, OpBudget* budget) {
  return is_groebner(det_ideal(g, r), diagonal_order(g), budget);
}

bool permuted_minor_in_ideal(const VariableGrid& g, const CellPermutation& pi,
                             const MinorSpec& spec, std::size_t r, OpBudget* budget) {
  if (pi.size() != g.nvars()) {
    throw dimension_error("permutation size does not match the variable grid");
  }
  validate_spec(g, spec);
  // pi(Z) holds at cell c the entry pi moved there, i.e. the variable of the
  // preimage cell.
  const CellPermutation inv = pi.inverse();
  const std::size_t t = spec.rows.size();
  std::vector<std::vector<std::size_t>> entries(t, std::vector<std::size_t>(t));
  for (std::size_t a = 0; a < t; ++a) {
    for (std::size_t b = 0; b < t; ++b) {
      entries[a][b] = inv(g.var_index(spec.rows[a], spec.cols[b]));
    }
  }
  Polynomial permuted = MinorExpander(g.nvars(), entries).run();
  IdealBasis basis = det_ideal(g, r);
  return normal_form(permuted, basis, diagonal_order(g), budget).is_zero();
}

std::size_t dim_via_initial(const VariableGrid& g, std::size_t r) {
  const VarOrder ord = diagonal_order(g);
  std::vector<Monomial> initials;
  for (const Polynomial& p : det_ideal(g, r)) {
    initials.push_back(initial_monomial(p, ord));
  }
  return monomial_ideal_dimension(initials, g.nvars());
}

}  // namespace laddermat
