#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "laddermat/matrix.hpp"

namespace laddermat {

// 1-based grid cell (row i, column j).
struct Cell {
  std::size_t i = 0;
  std::size_t j = 0;
  auto operator<=>(const Cell&) const = default;
};

// Sorted row-major, duplicate-free cell list.
using CellSet = std::vector<Cell>;

// Witness for a failed closure check: corners (i,j) and (k,l) are present
// with i <= k and j >= l, but `missing` is not.
struct AxiomViolation {
  Cell first;
  Cell second;
  Cell missing;
};

struct CornerDecomposition {
  std::vector<Cell> upper;  // (a_u, b_u), both coordinates strictly increasing
  std::vector<Cell> lower;  // (c_l, d_l), both coordinates strictly increasing
};

// Two-sided ladder region inside an m x n grid, stored as canonical outside
// corner lists. Membership: (i,j) is in L iff lo(i) <= j <= hi(i) where
// hi(i) = max{b_u : a_u <= i} and lo(i) = min{d_l : c_l >= i}; this is the
// corner description with the upper and lower constraints required jointly.
//
// Public factories enforce the full ladder contract ((1,1) and (m,n)
// contained, closure axiom, contiguous row/column supports). shrink() may
// produce degenerate regions (empty rows, missing (1,1)); those still expose
// cells()/contains() but are only used for cell counting.
class Ladder {
 public:
  // Full m x n grid: upper corner (1,n), lower corner (m,1).
  static Ladder trivial(std::size_t m, std::size_t n);

  // Validates and canonicalizes; throws validation_error when the set is not
  // a representable ladder (message names the offending cells).
  static Ladder from_cells(std::size_t m, std::size_t n, const CellSet& cells);

  // Validates corner invariants (strict monotonicity, a_1 = 1, b_h = n,
  // c_k = m, d_1 = 1, bounds) and canonicalizes.
  static Ladder from_corners(std::size_t m, std::size_t n, std::vector<Cell> upper,
                             std::vector<Cell> lower);

  std::size_t m() const { return m_; }
  std::size_t n() const { return n_; }
  const std::vector<Cell>& upper_corners() const { return upper_; }
  const std::vector<Cell>& lower_corners() const { return lower_; }

  const CellSet& cells() const { return cells_; }
  std::size_t size() const { return cells_.size(); }
  bool contains(std::size_t i, std::size_t j) const;
  bool contains(Cell c) const { return contains(c.i, c.j); }

  // Column support of ladder-row i as a bitmask (bit j-1 set when (i,j) in L).
  std::uint64_t row_mask(std::size_t i) const;

  // 0/1 shape matrix S_L.
  RationalMatrix shape() const;

  // True when m == n and the cell set is fixed by (i,j) -> (j,i).
  bool shape_symmetric() const;

  bool operator==(const Ladder& other) const = default;

 private:
  friend Ladder shrink(const Ladder&, std::size_t);

  Ladder() = default;

  // No containment requirements; used by shrink for degenerate regions.
  static Ladder raw(std::size_t m, std::size_t n, std::vector<Cell> upper,
                    std::vector<Cell> lower);

  void rebuild_cache();

  std::size_t m_ = 0;
  std::size_t n_ = 0;
  std::vector<Cell> upper_;
  std::vector<Cell> lower_;
  CellSet cells_;
  std::vector<std::uint64_t> row_masks_;  // m_ entries
};

// Closure axiom of the ladder definition plus containment of (1,1) and
// (m,n). Does not require corner representability.
bool is_ladder(std::size_t m, std::size_t n, const CellSet& cells);

// First closure violation in scan order, if any.
std::optional<AxiomViolation> find_axiom_violation(std::size_t m, std::size_t n,
                                                   const CellSet& cells);

// Canonical outside corner lists of a representable cell set; throws
// validation_error otherwise. Reconstruction is verified cellwise.
CornerDecomposition corners_decompose(std::size_t m, std::size_t n, const CellSet& cells);

// Cells of ladder-row i / ladder-column j in increasing order. Empty result
// is legal (degenerate row), out-of-range index throws.
CellSet ladder_row(const Ladder& L, std::size_t i);
CellSet ladder_col(const Ladder& L, std::size_t j);

// r(L): largest t such that some rectangle I x J with |I| = |J| = t lies
// inside L (index sets need not be contiguous).
std::size_t max_square(const Ladder& L);

// L_{<r}: cells of L lying in no r x r rectangle inside L. Meaningful for
// every r >= 1; for r > r(L) this is all of L.
CellSet subcritical_cells(const Ladder& L, std::size_t r);

// Shrunken ladder L': same upper corners, lower corners shifted to
// (c_l - r, d_l + r); shifted corners falling off the grid are dropped. The
// result may be degenerate (possibly empty).
Ladder shrink(const Ladder& L, std::size_t r);

// #L - #L', the dimension of the rank <= r ladder variety. Requires
// 1 <= r < r(L).
std::size_t variety_dim(const Ladder& L, std::size_t r);

// Largest rank of a submatrix X_{I,J} with I x J inside L. X must be m x n
// and vanish outside L (domain_error otherwise).
std::size_t ladder_rank(const RationalMatrix& X, const Ladder& L);

// True iff every (r+1) x (r+1) rectangle inside L has zero determinant,
// i.e. ladder_rank(X, L) <= r. Same support requirement as ladder_rank.
bool ladder_rank_at_most(const RationalMatrix& X, const Ladder& L, std::size_t r);

// All rectangles I x J inside L with |I| = |J| = t, as index-set pairs in
// lexicographic order.
std::vector<std::pair<std::vector<std::size_t>, std::vector<std::size_t>>> rectangles_in(
    const Ladder& L, std::size_t t);

// Every ladder on the m x n grid (canonical corner form), deduplicated,
// sorted by cell set. Intended for exhaustive desk-scale sweeps.
std::vector<Ladder> enumerate_ladders(std::size_t m, std::size_t n);

}  // namespace laddermat
