#include "laddermat/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

#include "laddermat/errors.hpp"

namespace laddermat {

std::size_t Monomial::degree() const {
  std::size_t d = 0;
  for (auto e : exponents) d += e;
  return d;
}

bool Monomial::is_one() const {
  return std::all_of(exponents.begin(), exponents.end(), [](auto e) { return e == 0; });
}

bool Monomial::divides(const Monomial& other) const {
  if (nvars() != other.nvars()) throw dimension_error("monomial variable counts differ");
  for (std::size_t v = 0; v < nvars(); ++v) {
    if (exponents[v] > other.exponents[v]) return false;
  }
  return true;
}

Monomial Monomial::times(const Monomial& other) const {
  if (nvars() != other.nvars()) throw dimension_error("monomial variable counts differ");
  Monomial r(*this);
  for (std::size_t v = 0; v < nvars(); ++v) r.exponents[v] += other.exponents[v];
  return r;
}

Monomial Monomial::quotient(const Monomial& other) const {
  if (!other.divides(*this)) throw argument_error("monomial quotient would be fractional");
  Monomial r(*this);
  for (std::size_t v = 0; v < nvars(); ++v) r.exponents[v] -= other.exponents[v];
  return r;
}

Monomial Monomial::lcm(const Monomial& other) const {
  if (nvars() != other.nvars()) throw dimension_error("monomial variable counts differ");
  Monomial r(*this);
  for (std::size_t v = 0; v < nvars(); ++v) {
    r.exponents[v] = std::max(r.exponents[v], other.exponents[v]);
  }
  return r;
}

bool Monomial::coprime(const Monomial& other) const {
  if (nvars() != other.nvars()) throw dimension_error("monomial variable counts differ");
  for (std::size_t v = 0; v < nvars(); ++v) {
    if (exponents[v] > 0 && other.exponents[v] > 0) return false;
  }
  return true;
}

VarOrder VarOrder::identity(std::size_t nvars) {
  VarOrder ord;
  ord.permutation.resize(nvars);
  for (std::size_t v = 0; v < nvars; ++v) ord.permutation[v] = v;
  return ord;
}

VarOrder VarOrder::grevlex(std::size_t nvars) {
  VarOrder ord = identity(nvars);
  ord.graded = true;
  return ord;
}

bool VarOrder::is_identity() const {
  if (graded) return false;
  for (std::size_t v = 0; v < permutation.size(); ++v) {
    if (permutation[v] != v) return false;
  }
  return true;
}

int lex_compare(const Monomial& a, const Monomial& b, const VarOrder& ord) {
  if (a.nvars() != b.nvars() || a.nvars() != ord.nvars()) {
    throw dimension_error("monomial/order variable counts differ");
  }
  if (ord.graded) {
    const std::size_t da = a.degree(), db = b.degree();
    if (da != db) return da > db ? 1 : -1;
    // Reverse-lex tiebreak: at the least significant differing variable the
    // smaller exponent wins.
    for (std::size_t k = ord.permutation.size(); k-- > 0;) {
      const std::size_t v = ord.permutation[k];
      if (a.exponents[v] != b.exponents[v]) return a.exponents[v] > b.exponents[v] ? -1 : 1;
    }
    return 0;
  }
  for (std::size_t v : ord.permutation) {
    if (a.exponents[v] != b.exponents[v]) return a.exponents[v] > b.exponents[v] ? 1 : -1;
  }
  return 0;
}

Polynomial Polynomial::constant(std::size_t nvars, const Rational& c) {
  Polynomial p(nvars);
  if (c != 0) p.terms_.emplace_back(Monomial(nvars), c);
  return p;
}

Polynomial Polynomial::variable(std::size_t nvars, std::size_t v, std::uint32_t power) {
  if (v >= nvars) throw index_error("variable index out of range");
  Polynomial p(nvars);
  if (power == 0) return constant(nvars, 1);
  Monomial mono(nvars);
  mono.exponents[v] = power;
  p.terms_.emplace_back(std::move(mono), 1);
  return p;
}

Polynomial Polynomial::from_terms(std::size_t nvars, std::vector<Term> terms) {
  std::map<Monomial, Rational, std::greater<>> acc;
  for (auto& [mono, coeff] : terms) {
    if (mono.nvars() != nvars) throw dimension_error("term variable count mismatch");
    acc[mono] += coeff;
  }
  Polynomial p(nvars);
  for (auto& [mono, coeff] : acc) {
    if (coeff != 0) p.terms_.emplace_back(mono, coeff);
  }
  return p;
}

const Polynomial::Term& Polynomial::leading_term(const VarOrder& ord) const {
  if (terms_.empty()) throw argument_error("zero polynomial has no leading term");
  if (ord.is_identity()) return terms_.front();
  const Term* best = &terms_.front();
  for (const Term& t : terms_) {
    if (lex_compare(t.first, best->first, ord) > 0) best = &t;
  }
  return *best;
}

Polynomial Polynomial::operator-() const {
  Polynomial r(nvars_);
  r.terms_.reserve(terms_.size());
  for (const Term& t : terms_) r.terms_.emplace_back(t.first, -t.second);
  return r;
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
  if (nvars_ != other.nvars_) throw dimension_error("polynomial variable counts differ");
  Polynomial r(nvars_);
  r.terms_.reserve(terms_.size() + other.terms_.size());
  std::size_t a = 0, b = 0;
  while (a < terms_.size() && b < other.terms_.size()) {
    if (terms_[a].first > other.terms_[b].first) {
      r.terms_.push_back(terms_[a++]);
    } else if (other.terms_[b].first > terms_[a].first) {
      r.terms_.push_back(other.terms_[b++]);
    } else {
      Rational c = terms_[a].second + other.terms_[b].second;
      if (c != 0) r.terms_.emplace_back(terms_[a].first, std::move(c));
      ++a;
      ++b;
    }
  }
  for (; a < terms_.size(); ++a) r.terms_.push_back(terms_[a]);
  for (; b < other.terms_.size(); ++b) r.terms_.push_back(other.terms_[b]);
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& other) const { return *this + (-other); }

Polynomial Polynomial::scaled(const Rational& c) const {
  Polynomial r(nvars_);
  if (c == 0) return r;
  r.terms_.reserve(terms_.size());
  for (const Term& t : terms_) r.terms_.emplace_back(t.first, t.second * c);
  return r;
}

Polynomial Polynomial::times_term(const Monomial& mono, const Rational& c) const {
  if (mono.nvars() != nvars_) throw dimension_error("monomial variable count mismatch");
  Polynomial r(nvars_);
  if (c == 0) return r;
  r.terms_.reserve(terms_.size());
  // Multiplying every monomial by the same factor preserves the order.
  for (const Term& t : terms_) r.terms_.emplace_back(t.first.times(mono), t.second * c);
  return r;
}

Polynomial Polynomial::operator*(const Polynomial& other) const {
  if (nvars_ != other.nvars_) throw dimension_error("polynomial variable counts differ");
  std::map<Monomial, Rational, std::greater<>> acc;
  for (const Term& s : terms_) {
    for (const Term& t : other.terms_) {
      acc[s.first.times(t.first)] += s.second * t.second;
    }
  }
  Polynomial r(nvars_);
  for (auto& [mono, coeff] : acc) {
    if (coeff != 0) r.terms_.emplace_back(mono, coeff);
  }
  return r;
}

Rational Polynomial::evaluate(const std::vector<Rational>& point) const {
  if (point.size() != nvars_) throw dimension_error("evaluation point has wrong arity");
  Rational total = 0;
  for (const Term& t : terms_) {
    Rational value = t.second;
    for (std::size_t v = 0; v < nvars_; ++v) {
      for (std::uint32_t e = 0; e < t.first.exponents[v]; ++e) value *= point[v];
    }
    total += value;
  }
  return total;
}

Monomial initial_monomial(const Polynomial& p, const VarOrder& ord) {
  return p.leading_term(ord).first;
}

Polynomial initial_monomial_poly(const Polynomial& p, const VarOrder& ord) {
  const auto& lt = p.leading_term(ord);
  return Polynomial::from_terms(p.nvars(), {{lt.first, 1}});
}

std::string to_string(const Polynomial& p, const std::vector<std::string>& names) {
  if (names.size() != p.nvars()) throw dimension_error("name list has wrong arity");
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [mono, coeff] : p.terms()) {
    Rational c = coeff;
    if (first) {
      if (c < 0) {
        out << "-";
        c = -c;
      }
    } else {
      out << (c < 0 ? " - " : " + ");
      if (c < 0) c = -c;
    }
    first = false;
    const bool constant_term = mono.is_one();
    if (c != 1 || constant_term) {
      out << to_string(c);
      if (!constant_term) out << "*";
    }
    bool first_factor = true;
    for (std::size_t v = 0; v < mono.nvars(); ++v) {
      if (mono.exponents[v] == 0) continue;
      if (!first_factor) out << "*";
      first_factor = false;
      out << names[v];
      if (mono.exponents[v] > 1) out << "^" << mono.exponents[v];
    }
  }
  return out.str();
}

namespace {

struct Lexer {
  const std::string& text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool done() {
    skip_ws();
    return pos >= text.size();
  }
  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }
  [[noreturn]] void fail(const std::string& why) const {
    std::ostringstream out;
    out << "polynomial parse error at position " << pos << ": " << why;
    throw parse_error(out.str());
  }
  std::string read_number() {
    skip_ws();
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (start == pos) fail("expected a number");
    return text.substr(start, pos - start);
  }
  std::string read_name() {
    skip_ws();
    std::size_t start = pos;
    if (pos >= text.size() || !std::isalpha(static_cast<unsigned char>(text[pos]))) {
      fail("expected a variable name");
    }
    ++pos;
    while (pos < text.size() && (std::isalnum(static_cast<unsigned char>(text[pos])) ||
                                 text[pos] == '_')) {
      ++pos;
    }
    return text.substr(start, pos - start);
  }
};

}  // namespace

Polynomial parse_polynomial(const std::string& text, const std::vector<std::string>& names) {
  std::map<std::string, std::size_t> index;
  for (std::size_t v = 0; v < names.size(); ++v) index[names[v]] = v;
  const std::size_t nvars = names.size();

  Lexer lex{text};
  std::vector<Polynomial::Term> terms;
  bool expect_term = true;
  int sign = 1;
  if (lex.done()) throw parse_error("empty polynomial text");
  while (!lex.done()) {
    char c = lex.peek();
    if (c == '+' || c == '-') {
      if (expect_term && !terms.empty()) lex.fail("dangling sign");
      sign = (c == '-') ? -sign : sign;
      ++lex.pos;
      expect_term = true;
      continue;
    }
    if (!expect_term) lex.fail("expected '+' or '-' between terms");
    // One term: optional coefficient, then '*'-separated powers.
    Rational coeff = sign;
    sign = 1;
    Monomial mono(nvars);
    bool saw_factor = false;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string num = lex.read_number();
      std::string den;
      if (lex.peek() == '/') {
        ++lex.pos;
        den = lex.read_number();
      }
      coeff *= parse_rational(den.empty() ? num : num + "/" + den);
      saw_factor = true;
      if (lex.peek() == '*') {
        ++lex.pos;
      } else if (std::isalpha(static_cast<unsigned char>(lex.peek()))) {
        lex.fail("missing '*' between coefficient and variable");
      } else {
        terms.emplace_back(std::move(mono), std::move(coeff));
        expect_term = false;
        continue;
      }
    }
    while (true) {
      std::string name = lex.read_name();
      auto it = index.find(name);
      if (it == index.end()) lex.fail("unknown variable '" + name + "'");
      std::uint32_t power = 1;
      if (lex.peek() == '^') {
        ++lex.pos;
        try {
          power = static_cast<std::uint32_t>(std::stoul(lex.read_number()));
        } catch (const std::out_of_range&) {
          lex.fail("exponent out of range");
        }
      }
      mono.exponents[it->second] += power;
      saw_factor = true;
      if (lex.peek() == '*') {
        ++lex.pos;
        continue;
      }
      break;
    }
    if (!saw_factor) lex.fail("empty term");
    terms.emplace_back(std::move(mono), std::move(coeff));
    expect_term = false;
  }
  if (expect_term) throw parse_error("polynomial text ends with a dangling sign");
  return Polynomial::from_terms(nvars, std::move(terms));
}

}  // namespace laddermat
