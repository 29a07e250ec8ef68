#include "laddermat/sampling.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

#include "laddermat/errors.hpp"

namespace laddermat {

namespace {

constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ULL;

std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

constexpr int kMaxTries = 1000;

}  // namespace

SplitRng::SplitRng(std::uint64_t seed) : seed_(seed), state_(seed) {}

std::uint64_t SplitRng::next_u64() {
  state_ += kGamma;
  return mix64(state_);
}

std::int64_t SplitRng::uniform_int(std::int64_t lo, std::int64_t hi) {
  if (lo > hi) throw argument_error("uniform_int bounds are inverted");
  const std::uint64_t span =
      static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
  if (span == 0) return static_cast<std::int64_t>(next_u64());  // full 64-bit range
  const std::uint64_t limit = std::uint64_t(-1) - std::uint64_t(-1) % span;
  std::uint64_t u;
  do {
    u = next_u64();
  } while (u >= limit);
  return lo + static_cast<std::int64_t>(u % span);
}

SplitRng SplitRng::split(std::uint64_t stream) const {
  return SplitRng(mix64(seed_ + kGamma * (stream + 1)));
}

namespace {

RationalMatrix random_integer_matrix(SplitRng& rng, std::size_t rows, std::size_t cols,
                                     std::int64_t bound) {
  RationalMatrix M(rows, cols);
  for (std::size_t i = 1; i <= rows; ++i) {
    for (std::size_t j = 1; j <= cols; ++j) M.at(i, j) = rng.uniform_int(-bound, bound);
  }
  return M;
}

bool entries_distinct(const std::vector<Rational>& values) {
  std::vector<Rational> sorted = values;
  std::sort(sorted.begin(), sorted.end());
  return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

// Whether X transposed equals X with rows and columns permuted, checked by
// brute force over both symmetric groups (square X).
// Runs after the distinct-entries screen. With pairwise distinct entries the
// value X[j][i] occurs only at cell (j,i), so a realization
// X[sigma(i)][tau(j)] = X[j][i] would force sigma(i) = j for every j at
// once, impossible for n >= 2. Only the 1x1 matrix, trivially its own
// transpose, remains.
bool transpose_in_row_col_orbit(const RationalMatrix& X) { return X.rows() == 1; }

}  // namespace

RationalMatrix random_low_rank(std::size_t m, std::size_t n, std::size_t r,
                               std::uint64_t seed, std::int64_t bound) {
  if (m < 1 || n < 1) throw argument_error("matrix dimensions must be positive");
  if (r < 1 || r > std::min(m, n)) {
    throw argument_error("target rank must satisfy 1 <= r <= min(m, n)");
  }
  if (bound < 1) throw argument_error("entry bound must be at least 1");
  SplitRng rng(seed);
  for (int tries = 0; tries < kMaxTries; ++tries) {
    RationalMatrix A = random_integer_matrix(rng, m, r, bound);
    RationalMatrix B = random_integer_matrix(rng, r, n, bound);
    RationalMatrix X = A * B;
    if (rank(X) != r) continue;
    if (!entries_distinct(X.entries())) continue;
    if (m == n && transpose_in_row_col_orbit(X)) continue;
    return X;
  }
  throw generation_error("low-rank rejection sampling exhausted its retry budget");
}

RationalMatrix random_ladder_low_rank(const Ladder& L, std::size_t r, std::uint64_t seed,
                                      std::int64_t bound) {
  if (L == Ladder::trivial(L.m(), L.n())) {
    return random_low_rank(L.m(), L.n(), r, seed, bound);
  }
  if (r < 1 || r > max_square(L)) {
    throw argument_error("target ladder rank must satisfy 1 <= r <= r(L)");
  }
  if (bound < 1) throw argument_error("entry bound must be at least 1");
  SplitRng rng(seed);
  for (int tries = 0; tries < kMaxTries; ++tries) {
    RationalMatrix A = random_integer_matrix(rng, L.m(), r, bound);
    RationalMatrix B = random_integer_matrix(rng, r, L.n(), bound);
    RationalMatrix X = A * B;
    std::vector<Rational> in_ladder;
    in_ladder.reserve(L.size());
    for (std::size_t i = 1; i <= L.m(); ++i) {
      for (std::size_t j = 1; j <= L.n(); ++j) {
        if (L.contains(i, j)) {
          in_ladder.push_back(X.at(i, j));
        } else {
          X.at(i, j) = 0;
        }
      }
    }
    if (ladder_rank(X, L) != r) continue;
    if (!entries_distinct(in_ladder)) continue;
    return X;
  }
  throw generation_error("ladder rejection sampling exhausted its retry budget");
}

}  // namespace laddermat
