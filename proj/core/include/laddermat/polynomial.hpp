#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "laddermat/rational.hpp"

namespace laddermat {

// Power product over a fixed variable count; exponents[v] is the power of
// variable v (0-based variable indices).
struct Monomial {
  std::vector<std::uint32_t> exponents;

  explicit Monomial(std::size_t nvars = 0) : exponents(nvars, 0) {}
  explicit Monomial(std::vector<std::uint32_t> exps) : exponents(std::move(exps)) {}

  std::size_t nvars() const { return exponents.size(); }
  std::size_t degree() const;
  bool is_one() const;
  bool divides(const Monomial& other) const;
  Monomial times(const Monomial& other) const;
  // this / other; requires other.divides(*this).
  Monomial quotient(const Monomial& other) const;
  Monomial lcm(const Monomial& other) const;
  bool coprime(const Monomial& other) const;

  // Canonical (identity-permutation lexicographic) comparison; used for
  // storage order and as the diagonal order on row-major grids.
  auto operator<=>(const Monomial& other) const = default;
};

// Lexicographic variable order: permutation[0] is the most significant
// variable. The diagonal order on a variable grid is the identity. With
// graded set, total degree compares first and ties break reverse-lex
// (grevlex); useful where only the initial ideal matters, since Groebner
// runs stay far smaller than under pure lex.
struct VarOrder {
  std::vector<std::size_t> permutation;
  bool graded = false;

  static VarOrder identity(std::size_t nvars);
  static VarOrder grevlex(std::size_t nvars);
  // True only for the plain (ungraded) identity order, which coincides with
  // the canonical storage comparison.
  bool is_identity() const;
  std::size_t nvars() const { return permutation.size(); }
};

// <0, 0, >0 as a is below, equal to, above b in the given order.
int lex_compare(const Monomial& a, const Monomial& b, const VarOrder& ord);

// Sparse polynomial over the exact rationals. Terms are kept sorted in
// descending canonical order with nonzero coefficients; under the identity
// order the leading term is front().
class Polynomial {
 public:
  using Term = std::pair<Monomial, Rational>;

  explicit Polynomial(std::size_t nvars = 0) : nvars_(nvars) {}

  static Polynomial zero(std::size_t nvars) { return Polynomial(nvars); }
  static Polynomial constant(std::size_t nvars, const Rational& c);
  static Polynomial variable(std::size_t nvars, std::size_t v, std::uint32_t power = 1);
  static Polynomial from_terms(std::size_t nvars, std::vector<Term> terms);

  std::size_t nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }

  // Leading term in the given order; throws argument_error on the zero
  // polynomial.
  const Term& leading_term(const VarOrder& ord) const;

  Polynomial operator-() const;
  Polynomial operator+(const Polynomial& other) const;
  Polynomial operator-(const Polynomial& other) const;
  Polynomial operator*(const Polynomial& other) const;
  bool operator==(const Polynomial& other) const = default;

  Polynomial scaled(const Rational& c) const;
  // c * x^mono * this, in one pass.
  Polynomial times_term(const Monomial& mono, const Rational& c) const;

  Rational evaluate(const std::vector<Rational>& point) const;

 private:
  std::size_t nvars_ = 0;
  std::vector<Term> terms_;
};

Polynomial initial_monomial_poly(const Polynomial& p, const VarOrder& ord);
Monomial initial_monomial(const Polynomial& p, const VarOrder& ord);

// Text format: "3*z11*z22 - 1/2*z12*z21", powers as "z11^2", coefficients
// +-p or +-p/q, coefficient 1 omitted before a variable. Printing emits
// terms in descending canonical order and round-trips with the parser.
std::string to_string(const Polynomial& p, const std::vector<std::string>& names);
Polynomial parse_polynomial(const std::string& text, const std::vector<std::string>& names);

}  // namespace laddermat
