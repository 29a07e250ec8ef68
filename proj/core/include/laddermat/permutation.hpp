#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "laddermat/ladder.hpp"

namespace laddermat {

// Bijection on the cells of a ladder, stored as destination indices into the
// row-major cell list: entry k moves from cells[k] to cells[image[k]].
// Off-ladder positions hold zeros and stay put, which matches shape
// preservation.
class CellPermutation {
 public:
  static CellPermutation identity(std::size_t ncells);

  // Validates that image is a bijection on {0, ..., image.size()-1}.
  explicit CellPermutation(std::vector<std::size_t> image);

  std::size_t size() const { return image_.size(); }
  std::size_t operator()(std::size_t k) const { return image_[k]; }
  const std::vector<std::size_t>& image() const { return image_; }

  bool is_identity() const;
  CellPermutation inverse() const;
  // Composition acting left to right: (f.then(g))(k) = g(f(k)).
  CellPermutation then(const CellPermutation& g) const;

  auto operator<=>(const CellPermutation&) const = default;

 private:
  std::vector<std::size_t> image_;
};

// Moves every in-ladder entry of X to its image cell; X must vanish outside
// L (domain_error otherwise).
RationalMatrix apply(const CellPermutation& pi, const RationalMatrix& X, const Ladder& L);

// The cell map (i,j) -> (j,i); only defined when the shape is symmetric.
std::optional<CellPermutation> transpose_permutation(const Ladder& L);

// Exchange of ladder-rows i and i2 (equal support length required,
// entries matched in support order), as a cell permutation.
CellPermutation row_swap_permutation(const Ladder& L, std::size_t i, std::size_t i2);
CellPermutation col_swap_permutation(const Ladder& L, std::size_t j, std::size_t j2);

// Generators of the ladder-row/column permutation group: all equal-length
// row swaps and all equal-length column swaps.
std::vector<CellPermutation> row_col_generators(const Ladder& L);

// Subgroup generated by the given permutations (breadth-first closure).
// Throws resource_error when the group exceeds max_size elements.
std::vector<CellPermutation> group_closure(const std::vector<CellPermutation>& generators,
                                           std::size_t ncells, std::size_t max_size);

}  // namespace laddermat
