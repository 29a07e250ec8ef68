#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "laddermat/ladder.hpp"
#include "laddermat/matrix.hpp"
#include "laddermat/permutation.hpp"

namespace laddermat {

// Exception classes of entry permutations that cannot raise the ladder rank:
// ladder-row/column permutations, moves supported on the subcritical cells,
// the full transpose, and compositions of those. none marks a permutation
// outside every class.
enum class TrivialTag { row_col_perm, subcritical_move, transpose, composite, none };

struct TrivialClass {
  TrivialTag tag = TrivialTag::none;
  // For composite: whether the matching base image came from the transposed
  // matrix rather than the original.
  bool via_transpose = false;

  bool operator==(const TrivialClass&) const = default;
};

// Histogram bucket for reports: transpose and transpose-composites share one
// bucket, plain (subcritical x row/col) composites keep their own.
std::string class_key(const TrivialClass& cls);

// Matrix-level classifier for a fixed generic instance. Precomputes the
// row/column permutation images of X (and of X transposed when the ladder
// shape is symmetric) once, so classifying many permutations stays cheap.
// Requires pairwise distinct in-ladder entries; with those, matrix images
// identify permutation classes uniquely (the stabilizer of X is trivial).
class Classifier {
 public:
  Classifier(const RationalMatrix& X, const Ladder& L, std::size_t r);

  TrivialClass classify_matrix(const RationalMatrix& Y) const;

 private:
  bool agrees_off_subcritical(const RationalMatrix& A, const RationalMatrix& B) const;

  const Ladder ladder_;
  RationalMatrix base_;
  std::vector<RationalMatrix> rc_images_;
  std::vector<RationalMatrix> transpose_images_;  // empty unless shape symmetric
  CellSet subcritical_;
};

// Classifies a single permutation by matching apply(pi, X) against the class
// image sets. Throws argument_error when in-ladder entries of X are not
// pairwise distinct (matching would be ambiguous).
TrivialClass classify(const CellPermutation& pi, const RationalMatrix& X, const Ladder& L,
                      std::size_t r);

// Exhaustively enumerates every shape-preserving permutation pi with
// ladder_rank(apply(pi, X)) <= r. Requires ladder_rank(X, L) == r and
// #L <= max_cells (resource_error otherwise; the hard cap is 10 cells).
std::vector<CellPermutation> enumerate_rank_preserving(const RationalMatrix& X,
                                                       const Ladder& L, std::size_t r,
                                                       std::size_t max_cells = 9);

struct RecoveryReport {
  std::size_t preserving_count = 0;
  std::map<std::string, std::size_t> classes;  // nonzero buckets only
  bool unique = false;                         // true iff no permutation fell outside
  std::vector<CellPermutation> failures;       // the unclassified permutations
};

// Runs the enumeration and classifies every surviving permutation. The
// verdict is true iff all of them land in a trivial class.
RecoveryReport verify_uniqueness(const RationalMatrix& X, const Ladder& L, std::size_t r,
                                 std::size_t max_cells = 9);

}  // namespace laddermat
