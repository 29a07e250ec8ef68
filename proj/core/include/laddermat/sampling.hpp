#pragma once

#include <cstdint>

#include "laddermat/ladder.hpp"
#include "laddermat/matrix.hpp"

namespace laddermat {

// Deterministic splittable generator (SplitMix64 steps). All randomness in
// the library flows through this type so runs are replayable byte for byte
// on any platform; split() derives independent per-trial streams, keeping
// parallel and serial schedules identical.
class SplitRng {
 public:
  explicit SplitRng(std::uint64_t seed);

  std::uint64_t next_u64();

  // Uniform on [lo, hi], both ends included, via rejection (no modulo bias).
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi);

  // Child stream for the given index, independent of this generator's
  // position and of other indices.
  SplitRng split(std::uint64_t stream) const;

 private:
  std::uint64_t seed_;
  std::uint64_t state_;
};

// X = A * B with A (m x r), B (r x n) drawn entrywise uniform in
// [-bound, bound] (A row-major, then B row-major), resampled until
// rank(X) = r, all entries are pairwise distinct and, in the square case,
// the transpose of X is not a row/column permutation image of X. Throws
// generation_error when the retry budget (1000 attempts) runs out.
RationalMatrix random_low_rank(std::size_t m, std::size_t n, std::size_t r,
                               std::uint64_t seed, std::int64_t bound = 10000);

// Ladder variant: X = A * B zeroed outside L, resampled until
// ladder_rank(X, L) = r with pairwise distinct in-ladder entries. Trivial
// ladders delegate to random_low_rank, square-case transpose screen
// included.
RationalMatrix random_ladder_low_rank(const Ladder& L, std::size_t r, std::uint64_t seed,
                                      std::int64_t bound = 10000);

}  // namespace laddermat
