#include "laddermat/recovery.hpp"

#include <algorithm>
#include <numeric>

#include "laddermat/errors.hpp"

namespace laddermat {

std::string class_key(const TrivialClass& cls) {
  switch (cls.tag) {
    case TrivialTag::row_col_perm:
      return "row_col_perm";
    case TrivialTag::subcritical_move:
      return "subcritical_move";
    case TrivialTag::transpose:
      return "transpose_composite";
    case TrivialTag::composite:
      return cls.via_transpose ? "transpose_composite" : "composite";
    case TrivialTag::none:
      return "none";
  }
  throw argument_error("unknown classification tag");
}

namespace {

void require_distinct_entries(const RationalMatrix& X, const Ladder& L) {
  std::vector<Rational> values;
  values.reserve(L.size());
  for (Cell c : L.cells()) values.push_back(X.at(c.i, c.j));
  std::sort(values.begin(), values.end());
  if (std::adjacent_find(values.begin(), values.end()) != values.end()) {
    throw argument_error("in-ladder entries must be pairwise distinct to classify");
  }
}

void push_unique(std::vector<RationalMatrix>& images, RationalMatrix Y) {
  if (std::find(images.begin(), images.end(), Y) == images.end()) {
    images.push_back(std::move(Y));
  }
}

constexpr std::size_t kGroupCap = 1u << 20;

}  // namespace

Classifier::Classifier(const RationalMatrix& X, const Ladder& L, std::size_t r)
    : ladder_(L), base_(X) {
  if (X.rows() != L.m() || X.cols() != L.n()) {
    throw dimension_error("matrix dimensions do not match the ladder grid");
  }
  require_distinct_entries(X, L);
  std::vector<CellPermutation> group =
      group_closure(row_col_generators(L), L.size(), kGroupCap);
  for (const CellPermutation& g : group) push_unique(rc_images_, apply(g, X, L));
  if (L.shape_symmetric()) {
    RationalMatrix Xt = X.transpose();
    for (const CellPermutation& g : group) {
      push_unique(transpose_images_, apply(g, Xt, L));
    }
  }
  subcritical_ = subcritical_cells(L, r);
}

bool Classifier::agrees_off_subcritical(const RationalMatrix& A,
                                        const RationalMatrix& B) const {
  for (Cell c : ladder_.cells()) {
    if (std::binary_search(subcritical_.begin(), subcritical_.end(), c)) continue;
    if (A.at(c.i, c.j) != B.at(c.i, c.j)) return false;
  }
  return true;
}

TrivialClass Classifier::classify_matrix(const RationalMatrix& Y) const {
  if (std::find(rc_images_.begin(), rc_images_.end(), Y) != rc_images_.end()) {
    return {TrivialTag::row_col_perm, false};
  }
  if (agrees_off_subcritical(Y, base_)) return {TrivialTag::subcritical_move, false};
  if (!transpose_images_.empty() && Y == base_.transpose()) {
    return {TrivialTag::transpose, true};
  }
  for (const RationalMatrix& W : rc_images_) {
    if (agrees_off_subcritical(Y, W)) return {TrivialTag::composite, false};
  }
  for (const RationalMatrix& W : transpose_images_) {
    if (agrees_off_subcritical(Y, W)) return {TrivialTag::composite, true};
  }
  return {TrivialTag::none, false};
}

TrivialClass classify(const CellPermutation& pi, const RationalMatrix& X, const Ladder& L,
                      std::size_t r) {
  return Classifier(X, L, r).classify_matrix(apply(pi, X, L));
}

std::vector<CellPermutation> enumerate_rank_preserving(const RationalMatrix& X,
                                                       const Ladder& L, std::size_t r,
                                                       std::size_t max_cells) {
  const std::size_t N = L.size();
  if (N > 10 || N > max_cells) {
    throw resource_error("ladder has too many cells for exhaustive enumeration");
  }
  if (ladder_rank(X, L) != r) {
    throw argument_error("instance must have ladder rank exactly r");
  }

  const CellSet& cells = L.cells();
  std::vector<Rational> values;
  values.reserve(N);
  for (Cell c : cells) values.push_back(X.at(c.i, c.j));

  // Cell indices of every (r+1)-rectangle, so each candidate arrangement is
  // tested by direct determinant evaluation without building a matrix.
  auto cell_index = [&](std::size_t i, std::size_t j) {
    Cell c{i, j};
    auto it = std::lower_bound(cells.begin(), cells.end(), c);
    return static_cast<std::size_t>(it - cells.begin());
  };
  std::vector<std::vector<std::vector<std::size_t>>> rect_idx;
  for (const auto& [rows, cols] : rectangles_in(L, r + 1)) {
    std::vector<std::vector<std::size_t>> idx(rows.size(),
                                              std::vector<std::size_t>(cols.size()));
    for (std::size_t a = 0; a < rows.size(); ++a) {
      for (std::size_t b = 0; b < cols.size(); ++b) idx[a][b] = cell_index(rows[a], cols[b]);
    }
    rect_idx.push_back(std::move(idx));
  }

  // arr[l] = which of the original values sits at cell l; iterating arr over
  // all permutations covers all arrangements, and pi is its inverse.
  std::vector<std::size_t> arr(N);
  std::iota(arr.begin(), arr.end(), 0);
  std::vector<CellPermutation> preserving;
  do {
    bool ok = true;
    for (const auto& idx : rect_idx) {
      const std::size_t t = idx.size();
      bool zero;
      if (t == 1) {
        zero = values[arr[idx[0][0]]] == 0;
      } else if (t == 2) {
        zero = values[arr[idx[0][0]]] * values[arr[idx[1][1]]] ==
               values[arr[idx[0][1]]] * values[arr[idx[1][0]]];
      } else {
        RationalMatrix sub(t, t);
        for (std::size_t a = 0; a < t; ++a) {
          for (std::size_t b = 0; b < t; ++b) sub.at(a + 1, b + 1) = values[arr[idx[a][b]]];
        }
        zero = determinant(sub) == 0;
      }
      if (!zero) {
        ok = false;
        break;
      }
    }
    if (ok) {
      std::vector<std::size_t> image(N);
      for (std::size_t l = 0; l < N; ++l) image[arr[l]] = l;
      preserving.emplace_back(std::move(image));
    }
  } while (std::next_permutation(arr.begin(), arr.end()));

  std::sort(preserving.begin(), preserving.end());
  return preserving;
}

RecoveryReport verify_uniqueness(const RationalMatrix& X, const Ladder& L, std::size_t r,
                                 std::size_t max_cells) {
  std::vector<CellPermutation> preserving = enumerate_rank_preserving(X, L, r, max_cells);
  Classifier classifier(X, L, r);
  RecoveryReport report;
  report.preserving_count = preserving.size();
  for (const CellPermutation& pi : preserving) {
    TrivialClass cls = classifier.classify_matrix(apply(pi, X, L));
    if (cls.tag == TrivialTag::none) {
      report.failures.push_back(pi);
    } else {
      ++report.classes[class_key(cls)];
    }
  }
  report.unique = report.failures.empty();
  return report;
}

}  // namespace laddermat
