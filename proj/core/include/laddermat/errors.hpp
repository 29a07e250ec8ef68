#pragma once

#include <stdexcept>
#include <string>

namespace laddermat {

// Error taxonomy shared across the library. Everything derives from
// laddermat::error so callers can catch the whole family at once; the
// subclasses indicate which contract was violated.
struct error : std::runtime_error {
  explicit error(const std::string& what) : std::runtime_error(what) {}
};

// Shape mismatch: non-square minor request, incompatible matrix sizes.
struct dimension_error : error {
  using error::error;
};

// Out-of-range row/column/cell index.
struct index_error : error {
  using error::error;
};

// Bad argument value (rank out of range, empty subset, zero modulus...).
struct argument_error : error {
  using error::error;
};

// Input violates a support/domain requirement (nonzero entry outside the
// ladder, matrix not supported on L).
struct domain_error : error {
  using error::error;
};

// Structural validation failed (cell set is not a ladder, corner lists
// ill-formed, duplicate cells).
struct validation_error : error {
  using error::error;
};

// A guarded computation exceeded its configured budget.
struct resource_error : error {
  using error::error;
};

// Rejection sampling exhausted its retry budget.
struct generation_error : error {
  using error::error;
};

// Text/JSON/CSV input could not be parsed; message names the position and
// the violated invariant.
struct parse_error : error {
  using error::error;
};

// A file could not be opened, read, or written.
struct io_error : error {
  using error::error;
};

}  // namespace laddermat
