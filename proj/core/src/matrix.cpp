#include "laddermat/matrix.hpp"

#include <sstream>

namespace laddermat {

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw parse_error("empty rational literal");
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) {
      return Rational(Integer(text));
    }
    Integer num(text.substr(0, slash));
    Integer den(text.substr(slash + 1));
    if (den == 0) throw parse_error("rational literal with zero denominator: " + text);
    return Rational(num, den);
  } catch (const std::runtime_error& e) {
    throw parse_error("bad rational literal '" + text + "': " + e.what());
  }
}

std::string to_string(const Rational& r) {
  std::ostringstream out;
  out << numerator(r);
  if (denominator(r) != 1) out << '/' << denominator(r);
  return out.str();
}

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {
  if (rows == 0 || cols == 0) throw dimension_error("matrix dimensions must be positive");
}

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols,
                               std::vector<Rational> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (rows == 0 || cols == 0) throw dimension_error("matrix dimensions must be positive");
  if (entries_.size() != rows * cols) {
    throw dimension_error("entry count does not match rows*cols");
  }
}

RationalMatrix::RationalMatrix(std::initializer_list<std::initializer_list<Rational>> rows) {
  rows_ = rows.size();
  if (rows_ == 0) throw dimension_error("matrix dimensions must be positive");
  cols_ = rows.begin()->size();
  if (cols_ == 0) throw dimension_error("matrix dimensions must be positive");
  entries_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw dimension_error("ragged matrix literal");
    entries_.insert(entries_.end(), row.begin(), row.end());
  }
}

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 1; i <= n; ++i) m.at(i, i) = 1;
  return m;
}

void RationalMatrix::check_index(std::size_t i, std::size_t j) const {
  if (i < 1 || i > rows_ || j < 1 || j > cols_) {
    std::ostringstream out;
    out << "index (" << i << "," << j << ") out of range for " << rows_ << "x" << cols_
        << " matrix";
    throw index_error(out.str());
  }
}

const Rational& RationalMatrix::at(std::size_t i, std::size_t j) const {
  check_index(i, j);
  return entries_[(i - 1) * cols_ + (j - 1)];
}

Rational& RationalMatrix::at(std::size_t i, std::size_t j) {
  check_index(i, j);
  return entries_[(i - 1) * cols_ + (j - 1)];
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix t(cols_, rows_);
  for (std::size_t i = 1; i <= rows_; ++i)
    for (std::size_t j = 1; j <= cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& other) const {
  if (cols_ != other.rows_) throw dimension_error("inner matrix dimensions do not agree");
  RationalMatrix p(rows_, other.cols_);
  for (std::size_t i = 1; i <= rows_; ++i) {
    for (std::size_t k = 1; k <= cols_; ++k) {
      const Rational& a = at(i, k);
      if (a == 0) continue;
      for (std::size_t j = 1; j <= other.cols_; ++j) p.at(i, j) += a * other.at(k, j);
    }
  }
  return p;
}

namespace {

void check_subset(const std::vector<std::size_t>& idx, std::size_t limit, const char* which) {
  if (idx.empty()) throw argument_error(std::string("empty ") + which + " index set");
  for (std::size_t k = 0; k < idx.size(); ++k) {
    if (idx[k] < 1 || idx[k] > limit) {
      throw index_error(std::string(which) + " index out of range");
    }
    if (k > 0 && idx[k] <= idx[k - 1]) {
      throw argument_error(std::string(which) + " indices must be strictly increasing");
    }
  }
}

}  // namespace

RationalMatrix RationalMatrix::submatrix(const std::vector<std::size_t>& rows,
                                         const std::vector<std::size_t>& cols) const {
  check_subset(rows, rows_, "row");
  check_subset(cols, cols_, "column");
  RationalMatrix s(rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) s.at(i + 1, j + 1) = at(rows[i], cols[j]);
  return s;
}

// Bareiss: after step k every entry is a k+1 sized minor of the input, so
// all divisions below are exact and intermediate values stay polynomial in
// the input size. Pivot choice: first row with a nonzero entry in the pivot
// column (row swap flips the sign).
Rational determinant(const RationalMatrix& m) {
  if (m.rows() != m.cols()) throw dimension_error("determinant needs a square matrix");
  const std::size_t n = m.rows();
  std::vector<Rational> a = m.entries();
  auto e = [&](std::size_t i, std::size_t j) -> Rational& { return a[i * n + j]; };

  int sign = 1;
  Rational prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && e(pivot, k) == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != k) {
      for (std::size_t j = k; j < n; ++j) std::swap(e(k, j), e(pivot, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        e(i, j) = (e(i, j) * e(k, k) - e(i, k) * e(k, j)) / prev;
      }
      e(i, k) = 0;
    }
    prev = e(k, k);
  }
  return sign > 0 ? e(n - 1, n - 1) : -e(n - 1, n - 1);
}

std::size_t rank(const RationalMatrix& m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<Rational> a = m.entries();
  auto e = [&](std::size_t i, std::size_t j) -> Rational& { return a[i * cols + j]; };

  std::size_t r = 0;
  Rational prev = 1;
  for (std::size_t col = 0; col < cols && r < rows; ++col) {
    std::size_t pivot = r;
    while (pivot < rows && e(pivot, col) == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != r) {
      for (std::size_t j = col; j < cols; ++j) std::swap(e(r, j), e(pivot, j));
    }
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = col + 1; j < cols; ++j) {
        e(i, j) = (e(i, j) * e(r, col) - e(i, col) * e(r, j)) / prev;
      }
      e(i, col) = 0;
    }
    prev = e(r, col);
    ++r;
  }
  return r;
}

Rational minor_det(const RationalMatrix& m, const std::vector<std::size_t>& rows,
                   const std::vector<std::size_t>& cols) {
  if (rows.size() != cols.size()) {
    throw dimension_error("minor needs equally many row and column indices");
  }
  return determinant(m.submatrix(rows, cols));
}

}  // namespace laddermat
