#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "laddermat/groebner.hpp"
#include "laddermat/ladder.hpp"
#include "laddermat/permutation.hpp"
#include "laddermat/polynomial.hpp"

namespace laddermat {

// Row-major bijection between the cells of a ladder and polynomial variables:
// variable k corresponds to the k-th cell in row-major order, named z<i><j>
// (z<i>_<j> once a side exceeds 9, to keep names unambiguous).
class VariableGrid {
 public:
  explicit VariableGrid(Ladder ladder);

  const Ladder& ladder() const { return ladder_; }
  std::size_t nvars() const { return ladder_.size(); }

  std::size_t var_index(std::size_t i, std::size_t j) const;
  std::size_t var_index(Cell c) const { return var_index(c.i, c.j); }
  Cell cell_of(std::size_t k) const;

  std::string name(std::size_t k) const;
  std::vector<std::string> names() const;
  Polynomial variable(std::size_t k) const;

 private:
  Ladder ladder_;
};

// Lex order with z11 above z12 above ... in row-major reading; with row-major
// variable numbering this is the identity permutation. Under it the initial
// monomial of every grid minor is its main-diagonal product.
VarOrder diagonal_order(const VariableGrid& g);

// Index sets of a square submatrix; rows and cols strictly increasing and of
// equal size, with the full rectangle rows x cols inside the ladder.
struct MinorSpec {
  std::vector<std::size_t> rows;
  std::vector<std::size_t> cols;

  bool operator==(const MinorSpec&) const = default;
};

// det of the symbolic submatrix Z[spec.rows, spec.cols], expanded by
// cofactors. Sizes above 5 are refused (resource error): the expansion has
// t! terms and everything here runs at desk scale.
Polynomial minor_polynomial(const VariableGrid& g, const MinorSpec& spec);

// All t x t minors whose full rectangle lies in the ladder, row sets then
// col sets in lexicographic order. t must not exceed max_square of the
// ladder (argument error).
std::vector<std::pair<MinorSpec, Polynomial>> ladder_minors(const VariableGrid& g,
                                                            std::size_t t);

// Generators of the determinantal ideal for rank bound r: all (r+1)-minors
// supported in the ladder. Requires r < max_square (argument error).
IdealBasis det_ideal(const VariableGrid& g, std::size_t r);

// Checks that the (r+1)-minors are already a Groebner basis under the
// diagonal order by reducing every S-polynomial to zero.
bool verify_gb_minors(const VariableGrid& g, std::size_t r, OpBudget* budget = nullptr);

// Builds det(pi(Z)[spec]) symbolically, where pi(Z) carries at each cell the
// variable pi maps there, and reduces it against the (r+1)-minors taken as a
// Groebner basis (certified separately by verify_gb_minors). True iff the
// normal form is zero, i.e. the permuted minor lies in the ideal.
bool permuted_minor_in_ideal(const VariableGrid& g, const CellPermutation& pi,
                             const MinorSpec& spec, std::size_t r,
                             OpBudget* budget = nullptr);

// Krull dimension of the quotient by the determinantal ideal, computed from
// the initial ideal: the diagonal initial monomials are squarefree, and
// dim R/I = dim R/in(I) for any term order (standard Groebner degeneration,
// e.g. Eisenbud, Commutative Algebra, ch. 15). Independent of variety_dim.
std::size_t dim_via_initial(const VariableGrid& g, std::size_t r);

}  // namespace laddermat
