#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "laddermat/polynomial.hpp"

using namespace laddermat;

namespace {
const std::vector<std::string> kXYZ{"x", "y", "z"};
const std::vector<std::string> kXY{"x", "y"};

Polynomial P(const std::string& text, const std::vector<std::string>& names = kXYZ) {
  return parse_polynomial(text, names);
}
Monomial lead(const std::string& text, const VarOrder& ord,
              const std::vector<std::string>& names = kXYZ) {
  return initial_monomial(P(text, names), ord);
}
}  // namespace

TEST_CASE("monomial arithmetic") {
  Monomial a{std::vector<std::uint32_t>{2, 0, 1}};  // x^2 z
  Monomial b{std::vector<std::uint32_t>{1, 1, 0}};  // x y
  CHECK(a.degree() == 3);
  CHECK_FALSE(a.is_one());
  CHECK(Monomial(3).is_one());
  CHECK_FALSE(b.divides(a));
  CHECK(Monomial(std::vector<std::uint32_t>{1, 0, 0}).divides(a));
  CHECK(a.times(b) == Monomial{std::vector<std::uint32_t>{3, 1, 1}});
  CHECK(a.times(b).quotient(b) == a);
  CHECK(a.lcm(b) == Monomial{std::vector<std::uint32_t>{2, 1, 1}});
  CHECK_FALSE(a.coprime(b));
  CHECK(Monomial(std::vector<std::uint32_t>{0, 2, 0})
            .coprime(Monomial(std::vector<std::uint32_t>{1, 0, 1})));
}

TEST_CASE("pure lex order follows the variable permutation") {
  VarOrder id = VarOrder::identity(3);
  CHECK(id.is_identity());
  CHECK(lex_compare(lead("x", id), lead("y^5", id), id) > 0);
  CHECK(lex_compare(lead("y", id), lead("z^2", id), id) > 0);
  CHECK(lex_compare(lead("x*z", id), lead("x*y", id), id) < 0);

  // Reversed significance: z above y above x.
  VarOrder rev{{2, 1, 0}, false};
  CHECK(lex_compare(lead("x", rev), lead("y^5", rev), rev) < 0);
  CHECK(lex_compare(lead("z", rev), lead("x^9", rev), rev) > 0);
}

TEST_CASE("grevlex compares degree first, then reverse lexicographically") {
  VarOrder g = VarOrder::grevlex(3);
  CHECK_FALSE(g.is_identity());
  CHECK(lex_compare(lead("y^2", g), lead("x", g), g) > 0);
  // Degree-2 monomials in descending grevlex order.
  const char* desc[] = {"x^2", "x*y", "y^2", "x*z", "y*z", "z^2"};
  for (int k = 0; k + 1 < 6; ++k)
    CHECK(lex_compare(lead(desc[k], g), lead(desc[k + 1], g), g) > 0);
}

TEST_CASE("polynomial arithmetic and normalization") {
  Polynomial sq = P("x + y") * P("x + y");
  CHECK(sq == P("x^2 + 2*x*y + y^2"));
  CHECK((P("x^2 - y") - P("x^2")) == P("-y"));
  CHECK((P("x") + P("-x")).is_zero());
  CHECK(P("x - x") == Polynomial::zero(3));
  CHECK(-P("x - y") == P("y - x"));
  CHECK(P("2*x").scaled(Rational(1, 2)) == P("x"));

  // from_terms merges duplicates and drops zeros.
  Monomial x{std::vector<std::uint32_t>{1, 0, 0}};
  Polynomial merged = Polynomial::from_terms(
      3, {{x, Rational(2)}, {x, Rational(-2)}, {Monomial(3), Rational(5)}});
  CHECK(merged == P("5"));

  CHECK(P("x*y").times_term(x, Rational(3)) == P("3*x^2*y"));
}

TEST_CASE("leading term depends on the order") {
  Polynomial p = P("x + y^2");
  CHECK(p.leading_term(VarOrder::identity(3)).first == lead("x", VarOrder::identity(3)));
  CHECK(p.leading_term(VarOrder::grevlex(3)).first == lead("y^2", VarOrder::grevlex(3)));
  CHECK(initial_monomial_poly(p, VarOrder::grevlex(3)) == P("y^2"));
  CHECK_THROWS_AS(Polynomial::zero(3).leading_term(VarOrder::identity(3)), argument_error);
}

TEST_CASE("evaluation is exact") {
  Polynomial p = P("x^2*y - 1/2*z + 3");
  std::vector<Rational> pt{Rational(2), Rational(-1), Rational(1, 3)};
  CHECK(p.evaluate(pt) == Rational(-4) - Rational(1, 6) + Rational(3));
  CHECK(Polynomial::zero(3).evaluate(pt) == Rational(0));
  CHECK_THROWS_AS(p.evaluate({Rational(1)}), dimension_error);
}

TEST_CASE("printing and parsing round-trip") {
  const std::string text = "3*z11*z22 - 1/2*z12*z21";
  std::vector<std::string> names{"z11", "z12", "z21", "z22"};
  Polynomial p = parse_polynomial(text, names);
  CHECK(to_string(p, names) == text);
  CHECK(parse_polynomial(to_string(p, names), names) == p);

  CHECK(to_string(P("x^2 - 1"), kXYZ) == "x^2 - 1");
  CHECK(to_string(Polynomial::zero(3), kXYZ) == "0");
  CHECK(parse_polynomial("0", kXYZ).is_zero());
  CHECK(P("x + x") == P("2*x"));

  CHECK_THROWS_AS(parse_polynomial("w + 1", kXYZ), parse_error);
  CHECK_THROWS_AS(parse_polynomial("x^", kXYZ), parse_error);
  CHECK_THROWS_AS(parse_polynomial("", kXYZ), parse_error);
}

TEST_CASE("constant and variable factories") {
  CHECK(Polynomial::constant(3, Rational(7)) == P("7"));
  CHECK(Polynomial::constant(3, Rational(0)).is_zero());
  CHECK(Polynomial::variable(3, 1) == P("y"));
  CHECK(Polynomial::variable(3, 2, 4) == P("z^4"));
}
