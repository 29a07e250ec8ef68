#include "laddermat/permutation.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "laddermat/errors.hpp"

namespace laddermat {

CellPermutation CellPermutation::identity(std::size_t ncells) {
  std::vector<std::size_t> image(ncells);
  for (std::size_t k = 0; k < ncells; ++k) image[k] = k;
  return CellPermutation(std::move(image));
}

CellPermutation::CellPermutation(std::vector<std::size_t> image) : image_(std::move(image)) {
  std::vector<bool> seen(image_.size(), false);
  for (std::size_t v : image_) {
    if (v >= image_.size() || seen[v]) {
      throw validation_error("cell permutation image is not a bijection");
    }
    seen[v] = true;
  }
}

bool CellPermutation::is_identity() const {
  for (std::size_t k = 0; k < image_.size(); ++k) {
    if (image_[k] != k) return false;
  }
  return true;
}

CellPermutation CellPermutation::inverse() const {
  std::vector<std::size_t> inv(image_.size());
  for (std::size_t k = 0; k < image_.size(); ++k) inv[image_[k]] = k;
  return CellPermutation(std::move(inv));
}

CellPermutation CellPermutation::then(const CellPermutation& g) const {
  if (size() != g.size()) throw dimension_error("cell permutation sizes differ");
  std::vector<std::size_t> image(size());
  for (std::size_t k = 0; k < size(); ++k) image[k] = g(image_[k]);
  return CellPermutation(std::move(image));
}

RationalMatrix apply(const CellPermutation& pi, const RationalMatrix& X, const Ladder& L) {
  if (pi.size() != L.size()) throw dimension_error("permutation size does not match ladder");
  if (X.rows() != L.m() || X.cols() != L.n()) {
    throw dimension_error("matrix dimensions do not match the ladder grid");
  }
  for (std::size_t i = 1; i <= L.m(); ++i) {
    for (std::size_t j = 1; j <= L.n(); ++j) {
      if (!L.contains(i, j) && X.at(i, j) != 0) {
        throw domain_error("matrix has a nonzero entry outside the ladder");
      }
    }
  }
  const CellSet& cells = L.cells();
  RationalMatrix Y(L.m(), L.n());
  for (std::size_t k = 0; k < cells.size(); ++k) {
    const Cell dst = cells[pi(k)];
    Y.at(dst.i, dst.j) = X.at(cells[k].i, cells[k].j);
  }
  return Y;
}

namespace {

std::size_t cell_index(const Ladder& L, Cell c) {
  const CellSet& cells = L.cells();
  auto it = std::lower_bound(cells.begin(), cells.end(), c);
  if (it == cells.end() || *it != c) throw index_error("cell not in ladder");
  return static_cast<std::size_t>(it - cells.begin());
}

}  // namespace

std::optional<CellPermutation> transpose_permutation(const Ladder& L) {
  if (!L.shape_symmetric()) return std::nullopt;
  const CellSet& cells = L.cells();
  std::vector<std::size_t> image(cells.size());
  for (std::size_t k = 0; k < cells.size(); ++k) {
    image[k] = cell_index(L, {cells[k].j, cells[k].i});
  }
  return CellPermutation(std::move(image));
}

CellPermutation row_swap_permutation(const Ladder& L, std::size_t i, std::size_t i2) {
  CellSet a = ladder_row(L, i), b = ladder_row(L, i2);
  if (a.size() != b.size()) {
    throw argument_error("ladder-rows with different support lengths cannot be exchanged");
  }
  std::vector<std::size_t> image(L.size());
  for (std::size_t k = 0; k < image.size(); ++k) image[k] = k;
  for (std::size_t k = 0; k < a.size(); ++k) {
    image[cell_index(L, a[k])] = cell_index(L, b[k]);
    image[cell_index(L, b[k])] = cell_index(L, a[k]);
  }
  return CellPermutation(std::move(image));
}

CellPermutation col_swap_permutation(const Ladder& L, std::size_t j, std::size_t j2) {
  CellSet a = ladder_col(L, j), b = ladder_col(L, j2);
  if (a.size() != b.size()) {
    throw argument_error("ladder-columns with different support lengths cannot be exchanged");
  }
  std::vector<std::size_t> image(L.size());
  for (std::size_t k = 0; k < image.size(); ++k) image[k] = k;
  for (std::size_t k = 0; k < a.size(); ++k) {
    image[cell_index(L, a[k])] = cell_index(L, b[k]);
    image[cell_index(L, b[k])] = cell_index(L, a[k]);
  }
  return CellPermutation(std::move(image));
}

std::vector<CellPermutation> row_col_generators(const Ladder& L) {
  std::vector<CellPermutation> gens;
  for (std::size_t i = 1; i <= L.m(); ++i) {
    for (std::size_t i2 = i + 1; i2 <= L.m(); ++i2) {
      CellSet a = ladder_row(L, i), b = ladder_row(L, i2);
      if (!a.empty() && a.size() == b.size()) gens.push_back(row_swap_permutation(L, i, i2));
    }
  }
  for (std::size_t j = 1; j <= L.n(); ++j) {
    for (std::size_t j2 = j + 1; j2 <= L.n(); ++j2) {
      CellSet a = ladder_col(L, j), b = ladder_col(L, j2);
      if (!a.empty() && a.size() == b.size()) gens.push_back(col_swap_permutation(L, j, j2));
    }
  }
  return gens;
}

std::vector<CellPermutation> group_closure(const std::vector<CellPermutation>& generators,
                                           std::size_t ncells, std::size_t max_size) {
  std::set<CellPermutation> group;
  std::vector<CellPermutation> frontier;
  group.insert(CellPermutation::identity(ncells));
  frontier.push_back(CellPermutation::identity(ncells));
  while (!frontier.empty()) {
    std::vector<CellPermutation> next;
    for (const CellPermutation& g : frontier) {
      for (const CellPermutation& s : generators) {
        if (s.size() != ncells) throw dimension_error("generator size mismatch");
        CellPermutation h = g.then(s);
        if (group.insert(h).second) {
          if (group.size() > max_size) {
            throw resource_error("permutation group exceeds closure budget");
          }
          next.push_back(std::move(h));
        }
      }
    }
    frontier = std::move(next);
  }
  return {group.begin(), group.end()};
}

}  // namespace laddermat
