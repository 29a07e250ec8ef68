#include "laddermat/ladder.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <sstream>

#include "laddermat/errors.hpp"

namespace laddermat {

namespace {

// Row masks are 64-bit; comfortably above the enumeration scale this
// library is meant for.
constexpr std::size_t kMaxSide = 64;

std::string cell_str(Cell c) {
  std::ostringstream out;
  out << "(" << c.i << "," << c.j << ")";
  return out.str();
}

void check_grid(std::size_t m, std::size_t n) {
  if (m < 1 || n < 1) throw argument_error("grid dimensions must be positive");
  if (m > kMaxSide || n > kMaxSide) throw argument_error("grid side exceeds 64");
}

CellSet sorted_unique(std::size_t m, std::size_t n, CellSet cells) {
  for (const Cell& c : cells) {
    if (c.i < 1 || c.i > m || c.j < 1 || c.j > n) {
      throw validation_error("cell " + cell_str(c) + " outside the grid");
    }
  }
  std::sort(cells.begin(), cells.end());
  for (std::size_t k = 1; k < cells.size(); ++k) {
    if (cells[k] == cells[k - 1]) {
      throw validation_error("duplicate cell " + cell_str(cells[k]));
    }
  }
  return cells;
}

// Per-row support interval; empty rows have lo > hi. Throws when some row
// support is not contiguous (such a set is never corner-representable).
struct Profile {
  std::vector<std::size_t> lo, hi;  // 1-based rows; lo = n+1, hi = 0 when empty
};

Profile profile_of(std::size_t m, std::size_t n, const CellSet& cells) {
  Profile p;
  p.lo.assign(m + 1, n + 1);
  p.hi.assign(m + 1, 0);
  std::vector<std::size_t> count(m + 1, 0);
  for (const Cell& c : cells) {
    p.lo[c.i] = std::min(p.lo[c.i], c.j);
    p.hi[c.i] = std::max(p.hi[c.i], c.j);
    ++count[c.i];
  }
  for (std::size_t i = 1; i <= m; ++i) {
    if (count[i] > 0 && count[i] != p.hi[i] - p.lo[i] + 1) {
      std::ostringstream out;
      out << "row " << i << " support is not contiguous";
      throw validation_error(out.str());
    }
  }
  return p;
}

CornerDecomposition corners_from_profile(std::size_t m, const Profile& p) {
  CornerDecomposition d;
  // Monotonicity across nonempty rows, and separation across empty gaps so
  // that a single pair of step functions can represent the region.
  std::size_t prev = 0;  // last nonempty row seen
  for (std::size_t i = 1; i <= m; ++i) {
    if (p.lo[i] > p.hi[i]) continue;
    if (prev != 0) {
      if (p.lo[i] < p.lo[prev] || p.hi[i] < p.hi[prev]) {
        std::ostringstream out;
        out << "row supports not monotone between rows " << prev << " and " << i;
        throw validation_error(out.str());
      }
      if (i > prev + 1 && p.lo[i] <= p.hi[prev]) {
        std::ostringstream out;
        out << "empty row between rows " << prev << " and " << i
            << " disconnects overlapping supports";
        throw validation_error(out.str());
      }
    }
    prev = i;
  }

  // Upper corners: jump points of hi over nonempty rows.
  prev = 0;
  for (std::size_t i = 1; i <= m; ++i) {
    if (p.lo[i] > p.hi[i]) continue;
    if (prev == 0 || p.hi[i] > p.hi[prev]) d.upper.push_back({i, p.hi[i]});
    prev = i;
  }
  // Lower corners: last row of each constant run of lo over nonempty rows.
  prev = 0;
  for (std::size_t i = 1; i <= m; ++i) {
    if (p.lo[i] > p.hi[i]) continue;
    if (prev != 0 && p.lo[i] > p.lo[prev]) d.lower.push_back({prev, p.lo[prev]});
    prev = i;
  }
  if (prev != 0) d.lower.push_back({prev, p.lo[prev]});
  return d;
}

CellSet cells_from_corners(std::size_t m, std::size_t n, const std::vector<Cell>& upper,
                           const std::vector<Cell>& lower) {
  CellSet cells;
  for (std::size_t i = 1; i <= m; ++i) {
    // hi(i) = max{b_u : a_u <= i}; lo(i) = min{d_l : c_l >= i}.
    std::size_t hi = 0;
    for (const Cell& u : upper) {
      if (u.i <= i) hi = std::max(hi, u.j);
    }
    std::size_t lo = n + 1;
    for (const Cell& l : lower) {
      if (l.i >= i) lo = std::min(lo, l.j);
    }
    for (std::size_t j = lo; j <= hi; ++j) cells.push_back({i, j});
  }
  return cells;
}

void check_corner_list(const std::vector<Cell>& corners, std::size_t m, std::size_t n,
                       const char* which) {
  for (std::size_t k = 0; k < corners.size(); ++k) {
    const Cell& c = corners[k];
    if (c.i < 1 || c.i > m || c.j < 1 || c.j > n) {
      throw validation_error(std::string(which) + " corner " + cell_str(c) +
                             " outside the grid");
    }
    if (k > 0 && (corners[k].i <= corners[k - 1].i || corners[k].j <= corners[k - 1].j)) {
      throw validation_error(std::string(which) +
                             " corners must be strictly increasing in both coordinates");
    }
  }
}

}  // namespace

Ladder Ladder::trivial(std::size_t m, std::size_t n) {
  check_grid(m, n);
  return raw(m, n, {{1, n}}, {{m, 1}});
}

Ladder Ladder::raw(std::size_t m, std::size_t n, std::vector<Cell> upper,
                   std::vector<Cell> lower) {
  Ladder L;
  L.m_ = m;
  L.n_ = n;
  L.upper_ = std::move(upper);
  L.lower_ = std::move(lower);
  L.rebuild_cache();
  return L;
}

void Ladder::rebuild_cache() {
  cells_ = cells_from_corners(m_, n_, upper_, lower_);
  row_masks_.assign(m_ + 1, 0);
  for (const Cell& c : cells_) row_masks_[c.i] |= std::uint64_t{1} << (c.j - 1);
}

Ladder Ladder::from_cells(std::size_t m, std::size_t n, const CellSet& cells) {
  check_grid(m, n);
  CellSet sorted = sorted_unique(m, n, cells);
  auto has = [&](std::size_t i, std::size_t j) {
    return std::binary_search(sorted.begin(), sorted.end(), Cell{i, j});
  };
  if (!has(1, 1)) throw validation_error("ladder must contain (1,1)");
  if (!has(m, n)) throw validation_error("ladder must contain (m,n)");
  CornerDecomposition d;
  try {
    d = corners_decompose(m, n, sorted);
  } catch (const validation_error&) {
    // Prefer the closure-axiom witness when there is one; it names the
    // offending pair, which is the error the file-format contract promises.
    if (auto v = find_axiom_violation(m, n, sorted)) {
      throw validation_error("not a ladder: cells " + cell_str(v->first) + " and " +
                             cell_str(v->second) + " force missing cell " +
                             cell_str(v->missing));
    }
    throw;
  }
  return raw(m, n, std::move(d.upper), std::move(d.lower));
}

Ladder Ladder::from_corners(std::size_t m, std::size_t n, std::vector<Cell> upper,
                            std::vector<Cell> lower) {
  check_grid(m, n);
  check_corner_list(upper, m, n, "upper");
  check_corner_list(lower, m, n, "lower");
  if (upper.empty() || lower.empty()) throw validation_error("corner lists must be nonempty");
  if (upper.front().i != 1) throw validation_error("first upper corner must lie in row 1");
  if (upper.back().j != n) throw validation_error("last upper corner must lie in column n");
  if (lower.back().i != m) throw validation_error("last lower corner must lie in row m");
  if (lower.front().j != 1) throw validation_error("first lower corner must lie in column 1");
  // Canonicalize: distinct corner lists can describe the same region when
  // degenerate rows are involved.
  CellSet cells = cells_from_corners(m, n, upper, lower);
  CornerDecomposition d = corners_decompose(m, n, cells);
  return raw(m, n, std::move(d.upper), std::move(d.lower));
}

bool Ladder::contains(std::size_t i, std::size_t j) const {
  if (i < 1 || i > m_ || j < 1 || j > n_) return false;
  return (row_masks_[i] >> (j - 1)) & 1;
}

std::uint64_t Ladder::row_mask(std::size_t i) const {
  if (i < 1 || i > m_) throw index_error("row index out of range");
  return row_masks_[i];
}

RationalMatrix Ladder::shape() const {
  RationalMatrix s(m_, n_);
  for (const Cell& c : cells_) s.at(c.i, c.j) = 1;
  return s;
}

bool Ladder::shape_symmetric() const {
  if (m_ != n_) return false;
  for (const Cell& c : cells_) {
    if (!contains(c.j, c.i)) return false;
  }
  return true;
}

bool is_ladder(std::size_t m, std::size_t n, const CellSet& cells) {
  check_grid(m, n);
  CellSet sorted = sorted_unique(m, n, cells);
  auto has = [&](Cell c) { return std::binary_search(sorted.begin(), sorted.end(), c); };
  if (!has({1, 1}) || !has({m, n})) return false;
  return !find_axiom_violation(m, n, sorted).has_value();
}

std::optional<AxiomViolation> find_axiom_violation(std::size_t m, std::size_t n,
                                                   const CellSet& cells) {
  check_grid(m, n);
  CellSet sorted = sorted_unique(m, n, cells);
  auto has = [&](Cell c) { return std::binary_search(sorted.begin(), sorted.end(), c); };
  // Closure: (i,j), (k,l) in L with i <= k, j >= l forces (k,j) and (i,l).
  for (const Cell& a : sorted) {
    for (const Cell& b : sorted) {
      if (a.i <= b.i && a.j >= b.j) {
        if (!has({b.i, a.j})) return AxiomViolation{a, b, {b.i, a.j}};
        if (!has({a.i, b.j})) return AxiomViolation{a, b, {a.i, b.j}};
      }
    }
  }
  return std::nullopt;
}

CornerDecomposition corners_decompose(std::size_t m, std::size_t n, const CellSet& cells) {
  check_grid(m, n);
  CellSet sorted = sorted_unique(m, n, cells);
  if (sorted.empty()) throw validation_error("empty cell set is not a ladder");
  Profile p = profile_of(m, n, sorted);
  CornerDecomposition d = corners_from_profile(m, p);
  if (cells_from_corners(m, n, d.upper, d.lower) != sorted) {
    throw validation_error("cell set is not corner-representable");
  }
  return d;
}

CellSet ladder_row(const Ladder& L, std::size_t i) {
  if (i < 1 || i > L.m()) throw index_error("ladder row index out of range");
  CellSet out;
  for (std::size_t j = 1; j <= L.n(); ++j) {
    if (L.contains(i, j)) out.push_back({i, j});
  }
  return out;
}

CellSet ladder_col(const Ladder& L, std::size_t j) {
  if (j < 1 || j > L.n()) throw index_error("ladder column index out of range");
  CellSet out;
  for (std::size_t i = 1; i <= L.m(); ++i) {
    if (L.contains(i, j)) out.push_back({i, j});
  }
  return out;
}

namespace {

// Enumerates row index subsets I of size t whose support intersection still
// has at least t columns, invoking fn(I, mask) for each.
template <typename Fn>
void for_each_row_subset(const Ladder& L, std::size_t t, Fn&& fn) {
  std::vector<std::size_t> idx;
  auto rec = [&](auto&& self, std::size_t next, std::uint64_t mask) -> void {
    if (idx.size() == t) {
      fn(idx, mask);
      return;
    }
    for (std::size_t i = next; i + (t - idx.size()) <= L.m() + 1; ++i) {
      std::uint64_t inter = mask & L.row_mask(i);
      if (static_cast<std::size_t>(std::popcount(inter)) < t) continue;
      idx.push_back(i);
      self(self, i + 1, inter);
      idx.pop_back();
    }
  };
  rec(rec, 1, ~std::uint64_t{0});
}

std::vector<std::size_t> mask_to_cols(std::uint64_t mask) {
  std::vector<std::size_t> cols;
  while (mask) {
    cols.push_back(static_cast<std::size_t>(std::countr_zero(mask)) + 1);
    mask &= mask - 1;
  }
  return cols;
}

template <typename Fn>
void for_each_subset(const std::vector<std::size_t>& items, std::size_t t, Fn&& fn) {
  std::vector<std::size_t> pick;
  auto rec = [&](auto&& self, std::size_t next) -> void {
    if (pick.size() == t) {
      fn(pick);
      return;
    }
    for (std::size_t k = next; k + (t - pick.size()) <= items.size(); ++k) {
      pick.push_back(items[k]);
      self(self, k + 1);
      pick.pop_back();
    }
  };
  rec(rec, 0);
}

}  // namespace

std::size_t max_square(const Ladder& L) {
  std::size_t best = 0;
  for (std::size_t t = 1; t <= std::min(L.m(), L.n()); ++t) {
    bool found = false;
    for_each_row_subset(L, t, [&](const std::vector<std::size_t>&, std::uint64_t) {
      found = true;
    });
    if (!found) break;
    best = t;
  }
  return best;
}

CellSet subcritical_cells(const Ladder& L, std::size_t r) {
  if (r < 1) throw argument_error("subcritical_cells needs r >= 1");
  // Mark every cell covered by some r x r rectangle inside L; for a row
  // subset I with column intersection C, |C| >= r, every cell of I x C lies
  // in such a rectangle.
  std::vector<std::uint64_t> covered(L.m() + 1, 0);
  for_each_row_subset(L, r, [&](const std::vector<std::size_t>& rows, std::uint64_t mask) {
    for (std::size_t i : rows) covered[i] |= mask;
  });
  CellSet out;
  for (const Cell& c : L.cells()) {
    if (!((covered[c.i] >> (c.j - 1)) & 1)) out.push_back(c);
  }
  return out;
}

Ladder shrink(const Ladder& L, std::size_t r) {
  if (r < 1) throw argument_error("shrink needs r >= 1");
  std::vector<Cell> lower;
  for (const Cell& c : L.lower_corners()) {
    if (c.i <= r || c.j + r > L.n()) continue;  // degenerate corner, dropped
    lower.push_back({c.i - r, c.j + r});
  }
  return Ladder::raw(L.m(), L.n(), L.upper_corners(), std::move(lower));
}

std::size_t variety_dim(const Ladder& L, std::size_t r) {
  if (r < 1) throw argument_error("variety_dim needs r >= 1");
  if (r >= max_square(L)) throw argument_error("variety_dim needs r < r(L)");
  return L.size() - shrink(L, r).size();
}

namespace {

void check_support(const RationalMatrix& X, const Ladder& L) {
  if (X.rows() != L.m() || X.cols() != L.n()) {
    throw dimension_error("matrix dimensions do not match the ladder grid");
  }
  for (std::size_t i = 1; i <= L.m(); ++i) {
    for (std::size_t j = 1; j <= L.n(); ++j) {
      if (!L.contains(i, j) && X.at(i, j) != 0) {
        std::ostringstream out;
        out << "nonzero entry outside the ladder at (" << i << "," << j << ")";
        throw domain_error(out.str());
      }
    }
  }
}

}  // namespace

std::vector<std::pair<std::vector<std::size_t>, std::vector<std::size_t>>> rectangles_in(
    const Ladder& L, std::size_t t) {
  if (t < 1) throw argument_error("rectangle size must be >= 1");
  std::vector<std::pair<std::vector<std::size_t>, std::vector<std::size_t>>> out;
  for_each_row_subset(L, t, [&](const std::vector<std::size_t>& rows, std::uint64_t mask) {
    for_each_subset(mask_to_cols(mask), t,
                    [&](const std::vector<std::size_t>& cols) { out.emplace_back(rows, cols); });
  });
  return out;
}

bool ladder_rank_at_most(const RationalMatrix& X, const Ladder& L, std::size_t r) {
  check_support(X, L);
  if (r >= std::min(L.m(), L.n())) return true;
  bool ok = true;
  const std::size_t t = r + 1;
  for_each_row_subset(L, t, [&](const std::vector<std::size_t>& rows, std::uint64_t mask) {
    if (!ok) return;
    for_each_subset(mask_to_cols(mask), t, [&](const std::vector<std::size_t>& cols) {
      if (!ok) return;
      if (minor_det(X, rows, cols) != 0) ok = false;
    });
  });
  return ok;
}

std::size_t ladder_rank(const RationalMatrix& X, const Ladder& L) {
  check_support(X, L);
  std::size_t rank = 0;
  const std::size_t cap = max_square(L);
  for (std::size_t t = 1; t <= cap; ++t) {
    bool found = false;
    for_each_row_subset(L, t, [&](const std::vector<std::size_t>& rows, std::uint64_t mask) {
      if (found) return;
      for_each_subset(mask_to_cols(mask), t, [&](const std::vector<std::size_t>& cols) {
        if (found) return;
        if (minor_det(X, rows, cols) != 0) found = true;
      });
    });
    if (!found) break;
    rank = t;
  }
  return rank;
}

std::vector<Ladder> enumerate_ladders(std::size_t m, std::size_t n) {
  check_grid(m, n);
  // Monotone profile pairs: lo non-decreasing with lo(1) = 1, hi
  // non-decreasing with hi(m) = n. Distinct profiles may describe the same
  // region (empty rows), so deduplicate by cell set.
  std::vector<std::vector<std::size_t>> los, his;
  std::vector<std::size_t> seq(m);
  auto gen = [&](auto&& self, std::size_t pos, std::size_t minval,
                 std::vector<std::vector<std::size_t>>& out) -> void {
    if (pos == m) {
      out.push_back(seq);
      return;
    }
    for (std::size_t v = minval; v <= n; ++v) {
      seq[pos] = v;
      self(self, pos + 1, v, out);
    }
  };
  gen(gen, 0, 1, los);
  his = los;

  std::map<CellSet, Ladder> found;
  for (const auto& lo : los) {
    if (lo[0] != 1) continue;
    for (const auto& hi : his) {
      if (hi[m - 1] != n) continue;
      CellSet cells;
      for (std::size_t i = 1; i <= m; ++i) {
        for (std::size_t j = lo[i - 1]; j <= hi[i - 1]; ++j) cells.push_back({i, j});
      }
      // Monotone profiles always yield valid ladders: row 1 starts at (1,1),
      // row m ends at (m,n), and empty-row separation is automatic.
      Ladder L = Ladder::from_cells(m, n, cells);
      found.emplace(L.cells(), std::move(L));
    }
  }
  std::vector<Ladder> out;
  out.reserve(found.size());
  for (auto& [cells, L] : found) out.push_back(std::move(L));
  return out;
}

}  // namespace laddermat
