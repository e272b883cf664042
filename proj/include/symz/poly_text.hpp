#pragma once

#include <cctype>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "symz/symform.hpp"

namespace symz {

// Polynomial text format:
//
//   poly     := [sign] term (('+' | '-') term)*
//   term     := [rational '*'] factor ('*' factor)*
//   factor   := 'x' index ['^' exponent]
//   rational := integer ['/' positive-integer]
//
// Whitespace is ignored. A leading sign on the first term is accepted.

namespace detail {

class PolyParser {
 public:
  explicit PolyParser(std::string_view text) : s_(text) {}

  struct Term {
    Rational coeff;
    std::vector<unsigned> exponents;  // indexed by variable
    unsigned degree = 0;
    std::size_t position = 0;
  };

  std::vector<Term> parse() {
    std::vector<Term> terms;
    skip_ws();
    if (at_end()) throw InputError("empty polynomial", pos_);
    int sign = 1;
    if (peek() == '+' || peek() == '-') {
      sign = peek() == '-' ? -1 : 1;
      ++pos_;
    }
    terms.push_back(term(sign));
    while (true) {
      skip_ws();
      if (at_end()) break;
      const char c = peek();
      if (c != '+' && c != '-') throw InputError(std::string("expected '+' or '-' but found '") + c + "'", pos_);
      ++pos_;
      terms.push_back(term(c == '-' ? -1 : 1));
    }
    return terms;
  }

 private:
  static constexpr unsigned kMaxIndex = 256;
  static constexpr unsigned kMaxExponent = 256;

  bool at_end() const { return pos_ >= s_.size(); }
  char peek() const { return s_[pos_]; }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  std::string digits() {
    skip_ws();
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) throw InputError("expected digits", pos_);
    return std::string(s_.substr(start, pos_ - start));
  }

  unsigned small_number(unsigned limit, const char* what) {
    const std::size_t at = pos_;
    const std::string d = digits();
    if (d.size() > 6 || std::stoul(d) > limit)
      throw InputError(std::string(what) + " too large (limit " + std::to_string(limit) + ")", at);
    return static_cast<unsigned>(std::stoul(d));
  }

  Term term(int sign) {
    skip_ws();
    Term t;
    t.position = pos_;
    t.coeff = sign;
    if (at_end()) throw InputError("expected a term", pos_);
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      std::string num = digits();
      skip_ws();
      if (!at_end() && peek() == '/') {
        ++pos_;
        const std::size_t at = pos_;
        std::string den = digits();
        if (Integer(den) == 0) throw InputError("zero denominator", at);
        num += "/" + den;
      }
      t.coeff *= parse_rational(num);
      skip_ws();
      if (at_end() || peek() != '*') throw InputError("expected '*' after the coefficient", pos_);
      ++pos_;
    }
    factor(t);
    while (true) {
      skip_ws();
      if (at_end() || peek() != '*') break;
      ++pos_;
      factor(t);
    }
    return t;
  }

  void factor(Term& t) {
    skip_ws();
    if (at_end() || peek() != 'x') throw InputError("expected a variable 'x<index>'", pos_);
    ++pos_;
    if (at_end() || !std::isdigit(static_cast<unsigned char>(peek())))
      throw InputError("expected a variable index after 'x'", pos_);
    const unsigned index = small_number(kMaxIndex, "variable index");
    unsigned exponent = 1;
    skip_ws();
    if (!at_end() && peek() == '^') {
      ++pos_;
      exponent = small_number(kMaxExponent, "exponent");
    }
    if (t.exponents.size() <= index) t.exponents.resize(index + 1, 0);
    t.exponents[index] += exponent;
    t.degree += exponent;
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses polynomial text into a form. nvars defaults to one more than the
/// largest variable index; an explicit value must be at least that.
inline SymForm parse_poly(std::string_view text, std::optional<std::size_t> nvars = std::nullopt) {
  const auto terms = detail::PolyParser(text).parse();
  std::size_t inferred = 0;
  for (const auto& t : terms)
    for (std::size_t i = 0; i < t.exponents.size(); ++i)
      if (t.exponents[i] > 0 && i + 1 > inferred) inferred = i + 1;
  std::size_t n = inferred;
  if (nvars) {
    if (*nvars < inferred)
      throw InputError("variable x" + std::to_string(inferred - 1) + " has index >= nvars = " + std::to_string(*nvars));
    n = *nvars;
  }
  const unsigned d = terms.front().degree;
  for (const auto& t : terms)
    if (t.degree != d)
      throw InputError("polynomial is not homogeneous: term of degree " + std::to_string(t.degree) +
                           " in a degree-" + std::to_string(d) + " polynomial",
                       t.position);
  if (d < 3) throw InputError("degree must be at least 3, got " + std::to_string(d));
  if (n < 2) throw InputError("at least 2 variables are required (use --nvars to add absent ones)");
  if (monomial_count(n, d) > 2'000'000) throw InputError("(nvars, degree) too large");
  SymForm f(n, d);
  for (const auto& t : terms) {
    MultiIndex alpha{std::vector<unsigned>(n, 0)};
    for (std::size_t i = 0; i < t.exponents.size(); ++i) alpha.exponents[i] = t.exponents[i];
    f.add_to_coeff(alpha, t.coeff);
  }
  return f;
}

/// Canonical text: descending lexicographic monomial order, explicit '*',
/// unit coefficients omitted. The zero form prints as "0".
inline std::string print_poly(const SymForm& f, std::string_view var = "x") {
  const auto monos = f.monomials();
  std::string s;
  for (std::size_t k = 0; k < monos.size(); ++k) {
    const Rational& c = f.coeffs()[k];
    if (sgn(c) == 0) continue;
    const bool neg = sgn(c) < 0;
    if (s.empty())
      s += neg ? "-" : "";
    else
      s += neg ? " - " : " + ";
    std::string mono;
    for (std::size_t i = 0; i < f.nvars(); ++i) {
      const unsigned e = monos[k][i];
      if (e == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += std::string(var) + std::to_string(i);
      if (e > 1) mono += "^" + std::to_string(e);
    }
    const Rational a = abs(c);
    if (mono.empty())
      s += a.get_str();
    else if (a == 1)
      s += mono;
    else
      s += a.get_str() + "*" + mono;
  }
  return s.empty() ? "0" : s;
}

}  // namespace symz
