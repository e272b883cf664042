#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "symz/linalg.hpp"
#include "symz/matrix.hpp"

namespace symz {

/// Univariate polynomial over the rationals, lowest degree first. The
/// coefficient vector never carries trailing zeros; the zero polynomial is
/// the empty vector.
class RationalPoly {
 public:
  RationalPoly() = default;
  explicit RationalPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }
  RationalPoly(std::initializer_list<Rational> coeffs) : c_(coeffs) { trim(); }

  static RationalPoly constant(const Rational& a) { return RationalPoly({a}); }
  static RationalPoly x() { return RationalPoly({0, 1}); }
  /// x - r
  static RationalPoly linear_root(const Rational& r) { return RationalPoly({-r, 1}); }

  bool is_zero() const noexcept { return c_.empty(); }
  /// Degree; -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  const std::vector<Rational>& coeffs() const noexcept { return c_; }
  Rational coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }
  const Rational& leading() const { return c_.back(); }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }

  RationalPoly monic() const {
    if (is_zero()) return *this;
    RationalPoly r = *this;
    Rational inv = 1 / c_.back();
    for (auto& a : r.c_) a *= inv;
    return r;
  }

  RationalPoly derivative() const {
    std::vector<Rational> d;
    for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * static_cast<unsigned long>(i));
    return RationalPoly(std::move(d));
  }

  Rational operator()(const Rational& x) const {
    Rational r = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
    return r;
  }

  /// Horner evaluation at a square matrix.
  Matrix operator()(const Matrix& a) const {
    const std::size_t n = a.rows();
    Matrix r(n, n);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
      r = r * a;
      for (std::size_t i = 0; i < n; ++i) r(i, i) += *it;
    }
    return r;
  }

  friend RationalPoly operator+(const RationalPoly& a, const RationalPoly& b) {
    std::vector<Rational> r(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
    return RationalPoly(std::move(r));
  }
  friend RationalPoly operator-(const RationalPoly& a, const RationalPoly& b) {
    std::vector<Rational> r(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] -= b.c_[i];
    return RationalPoly(std::move(r));
  }
  friend RationalPoly operator*(const RationalPoly& a, const RationalPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> r(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    return RationalPoly(std::move(r));
  }
  friend RationalPoly operator*(const Rational& s, const RationalPoly& a) {
    std::vector<Rational> r = a.c_;
    for (auto& x : r) x *= s;
    return RationalPoly(std::move(r));
  }

  friend bool operator==(const RationalPoly& a, const RationalPoly& b) { return a.c_ == b.c_; }

 private:
  void trim() {
    while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
  }

  std::vector<Rational> c_;
};

/// Euclidean division: a = q * b + r with deg r < deg b.
inline std::pair<RationalPoly, RationalPoly> divmod(const RationalPoly& a, const RationalPoly& b) {
  if (b.is_zero()) throw InputError("polynomial division by zero");
  std::vector<Rational> rem = a.coeffs();
  const int db = b.degree();
  if (a.degree() < db) return {RationalPoly(), a};
  std::vector<Rational> quo(static_cast<std::size_t>(a.degree() - db + 1));
  const Rational inv_lead = 1 / b.leading();
  for (int k = a.degree() - db; k >= 0; --k) {
    Rational q = rem[static_cast<std::size_t>(k + db)] * inv_lead;
    quo[static_cast<std::size_t>(k)] = q;
    if (sgn(q) == 0) continue;
    for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(k + j)] -= q * b.coeff(static_cast<std::size_t>(j));
  }
  return {RationalPoly(std::move(quo)), RationalPoly(std::move(rem))};
}

inline RationalPoly operator%(const RationalPoly& a, const RationalPoly& b) { return divmod(a, b).second; }

/// Monic gcd; gcd(0, 0) = 0.
inline RationalPoly gcd(RationalPoly a, RationalPoly b) {
  while (!b.is_zero()) {
    RationalPoly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

/// Extended gcd: returns (g, s, t) with s*a + t*b = g, g monic.
struct ExtendedGcd {
  RationalPoly g, s, t;
};

inline ExtendedGcd extended_gcd(const RationalPoly& a, const RationalPoly& b) {
  RationalPoly r0 = a, r1 = b;
  RationalPoly s0 = RationalPoly::constant(1), s1;
  RationalPoly t0, t1 = RationalPoly::constant(1);
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    RationalPoly s2 = s0 - q * s1;
    RationalPoly t2 = t0 - q * t1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  Rational inv = 1 / r0.leading();
  return {inv * r0, inv * s0, inv * t0};
}

/// Inverse of a modulo m; throws when gcd(a, m) != 1.
inline RationalPoly inverse_mod(const RationalPoly& a, const RationalPoly& m) {
  ExtendedGcd e = extended_gcd(a % m, m);
  if (e.g.degree() != 0) throw InvariantViolation("polynomial is not a unit modulo the given modulus");
  return e.s % m;
}

/// Composition p(q(x)) reduced modulo m.
inline RationalPoly compose_mod(const RationalPoly& p, const RationalPoly& q, const RationalPoly& m) {
  RationalPoly r;
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it)
    r = (r * q + RationalPoly::constant(*it)) % m;
  return r;
}

inline RationalPoly pow(const RationalPoly& p, unsigned k) {
  RationalPoly r = RationalPoly::constant(1);
  for (unsigned i = 0; i < k; ++i) r = r * p;
  return r;
}

/// p / gcd(p, p'), made monic.
inline RationalPoly squarefree_part(const RationalPoly& p) {
  if (p.is_zero()) throw InputError("squarefree part of the zero polynomial");
  if (p.degree() == 0) return RationalPoly::constant(1);
  RationalPoly g = gcd(p, p.derivative());
  return divmod(p, g).first.monic();
}

inline bool is_squarefree(const RationalPoly& p) { return gcd(p, p.derivative()).degree() <= 0; }

/// Lowest-degree monic annihilating polynomial of a square matrix, found as
/// the first power of A that is linearly dependent on the lower ones.
inline RationalPoly minimal_polynomial(const Matrix& a) {
  if (!a.square()) throw InputError("minimal polynomial of a non-square matrix");
  const std::size_t n = a.rows();
  std::vector<Vector> powers{Matrix::identity(n).flat()};
  Matrix p = Matrix::identity(n);
  for (std::size_t k = 1; k <= n; ++k) {
    p = p * a;
    std::vector<Vector> cols = powers;
    cols.push_back(p.flat());
    auto kernel = nullspace(Matrix::from_columns(cols, n * n));
    if (!kernel.empty()) {
      // The lower powers are independent, so the kernel is spanned by one
      // vector whose last entry (the A^k coefficient) is its free column.
      return RationalPoly(std::move(kernel.front())).monic();
    }
    powers.push_back(p.flat());
  }
  throw InvariantViolation("no annihilating polynomial of degree <= n");
}

inline std::string to_string(const RationalPoly& p, const std::string& var = "x") {
  if (p.is_zero()) return "0";
  std::string s;
  for (int i = p.degree(); i >= 0; --i) {
    Rational c = p.coeff(static_cast<std::size_t>(i));
    if (sgn(c) == 0) continue;
    const bool neg = sgn(c) < 0;
    if (s.empty()) {
      if (neg) s += "-";
    } else {
      s += neg ? " - " : " + ";
    }
    Rational a = abs(c);
    std::string mono = i == 0 ? "" : (i == 1 ? var : var + "^" + std::to_string(i));
    if (i == 0)
      s += a.get_str();
    else if (a == 1)
      s += mono;
    else
      s += a.get_str() + "*" + mono;
  }
  return s;
}

}  // namespace symz
