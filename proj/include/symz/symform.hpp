#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "symz/linalg.hpp"
#include "symz/monomials.hpp"

namespace symz {

/// Symmetric form of degree d on an n-dimensional space, stored by the
/// polynomial coefficients c_alpha of F(v, ..., v) = sum c_alpha v^alpha in
/// canonical monomial order. Multilinear values go through polarization:
/// F(e_{i1}, ..., e_{id}) = c_alpha * alpha! / d!.
///
/// Forms of every degree are representable, since contracting a d-form
/// against a vector yields a (d-1)-form; the d >= 3 requirement on user
/// input is enforced by the parser.
class SymForm {
 public:
  SymForm() = default;
  SymForm(std::size_t nvars, unsigned degree)
      : nvars_(nvars), degree_(degree), coeffs_(monomial_count(nvars, degree)) {
    if (nvars == 0) throw InputError("a form needs at least one variable");
  }
  SymForm(std::size_t nvars, unsigned degree, std::vector<Rational> coeffs)
      : nvars_(nvars), degree_(degree), coeffs_(std::move(coeffs)) {
    if (nvars == 0) throw InputError("a form needs at least one variable");
    if (coeffs_.size() != monomial_count(nvars, degree))
      throw InputError("coefficient vector has the wrong length for (n, d)");
  }

  std::size_t nvars() const noexcept { return nvars_; }
  unsigned degree() const noexcept { return degree_; }

  /// Coefficients indexed by enumerate_monomials(nvars(), degree()).
  const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }

  const Rational& coeff(const MultiIndex& alpha) const { return coeffs_[index_of(alpha)]; }
  void set_coeff(const MultiIndex& alpha, const Rational& c) { coeffs_[index_of(alpha)] = c; }
  void add_to_coeff(const MultiIndex& alpha, const Rational& c) { coeffs_[index_of(alpha)] += c; }

  std::vector<MultiIndex> monomials() const { return enumerate_monomials(nvars_, degree_); }

  bool is_zero() const { return symz::is_zero(coeffs_); }

  SymForm& operator+=(const SymForm& o) {
    check_compatible(o);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
    return *this;
  }
  SymForm& operator-=(const SymForm& o) {
    check_compatible(o);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
    return *this;
  }
  SymForm& operator*=(const Rational& c) {
    for (auto& x : coeffs_) x *= c;
    return *this;
  }
  friend SymForm operator+(SymForm a, const SymForm& b) { return a += b; }
  friend SymForm operator-(SymForm a, const SymForm& b) { return a -= b; }
  friend SymForm operator*(const Rational& c, SymForm a) { return a *= c; }

  friend bool operator==(const SymForm& a, const SymForm& b) {
    return a.nvars_ == b.nvars_ && a.degree_ == b.degree_ && a.coeffs_ == b.coeffs_;
  }

 private:
  std::size_t index_of(const MultiIndex& alpha) const {
    if (alpha.nvars() != nvars_ || alpha.total() != degree_)
      throw InputError("monomial does not match the form's (n, d)");
    return monomial_rank(alpha);
  }
  void check_compatible(const SymForm& o) const {
    if (nvars_ != o.nvars_ || degree_ != o.degree_) throw InputError("forms of different (n, d)");
  }

  std::size_t nvars_ = 0;
  unsigned degree_ = 0;
  std::vector<Rational> coeffs_;
};

inline MultiIndex slots_to_multi_index(std::size_t n, std::span<const std::size_t> slots) {
  MultiIndex alpha{std::vector<unsigned>(n, 0)};
  for (auto s : slots) {
    if (s >= n) throw InputError("basis index out of range");
    ++alpha.exponents[s];
  }
  return alpha;
}

/// F(e_{i1}, ..., e_{id}) = c_alpha * alpha! / d!, alpha counting the slots.
inline Rational form_value(const SymForm& f, std::span<const std::size_t> slots) {
  if (slots.size() != f.degree()) throw InputError("form_value needs exactly d slots");
  const MultiIndex alpha = slots_to_multi_index(f.nvars(), slots);
  Rational v = f.coeff(alpha);
  if (sgn(v) == 0) return v;
  Integer num = 1;
  for (auto a : alpha.exponents) num *= factorial(a);
  return v * Rational(num) / Rational(factorial(f.degree()));
}

/// The (d-1)-form F(u, -, ..., -). Its polynomial is (1/d) sum_i u_i dP/dx_i.
inline SymForm contract(const SymForm& f, const Vector& u) {
  if (u.size() != f.nvars()) throw InputError("contract: vector length differs from nvars");
  if (f.degree() == 0) throw InputError("cannot contract a 0-form");
  SymForm out(f.nvars(), f.degree() - 1);
  const auto monos = f.monomials();
  const Rational inv_d(1, f.degree());
  for (std::size_t k = 0; k < monos.size(); ++k) {
    const Rational& c = f.coeffs()[k];
    if (sgn(c) == 0) continue;
    MultiIndex beta = monos[k];
    for (std::size_t i = 0; i < f.nvars(); ++i) {
      if (beta.exponents[i] == 0 || sgn(u[i]) == 0) continue;
      const unsigned a = beta.exponents[i]--;
      out.add_to_coeff(beta, c * a * u[i] * inv_d);
      ++beta.exponents[i];
    }
  }
  return out;
}

inline SymForm contract(const SymForm& f, std::span<const Vector> args) {
  SymForm g = f;
  for (const auto& v : args) g = contract(g, v);
  return g;
}

/// Multilinear value F(v1, ..., vd).
inline Rational evaluate(const SymForm& f, std::span<const Vector> args) {
  if (args.size() != f.degree()) throw InputError("evaluate needs exactly d arguments");
  if (f.degree() == 0) return f.coeffs()[0];
  return contract(f, args).coeffs()[0];
}

inline Rational evaluate(const SymForm& f, std::initializer_list<Vector> args) {
  std::vector<Vector> v(args);
  return evaluate(f, std::span<const Vector>(v));
}

/// P(v) = sum c_alpha v^alpha by direct expansion.
inline Rational evaluate_polynomial(const SymForm& f, const Vector& v) {
  if (v.size() != f.nvars()) throw InputError("evaluate_polynomial: length mismatch");
  const auto monos = f.monomials();
  Rational total = 0;
  for (std::size_t k = 0; k < monos.size(); ++k) {
    if (sgn(f.coeffs()[k]) == 0) continue;
    Rational term = f.coeffs()[k];
    for (std::size_t i = 0; i < f.nvars(); ++i)
      for (unsigned e = 0; e < monos[k][i]; ++e) term *= v[i];
    total += term;
  }
  return total;
}

/// Row i holds the coefficients of dF(e_i) = (1/d) dP/dx_i in the canonical
/// degree-(d-1) monomial order.
inline Matrix jacobian_matrix(const SymForm& f) {
  const std::size_t n = f.nvars();
  Matrix j(n, monomial_count(n, f.degree() - 1));
  for (std::size_t i = 0; i < n; ++i) {
    const SymForm row = contract(f, unit_vector(n, i));
    for (std::size_t k = 0; k < row.coeffs().size(); ++k) j(i, k) = row.coeffs()[k];
  }
  return j;
}

struct NondegeneracyResult {
  bool nondegenerate = false;
  std::vector<Vector> kernel;  // basis of Ker(dF); empty iff nondegenerate
};

inline NondegeneracyResult is_nondegenerate(const SymForm& f) {
  if (f.degree() == 0) throw InputError("nondegeneracy of a 0-form");
  NondegeneracyResult r;
  // u in Ker(dF) iff sum_i u_i * row_i = 0.
  r.kernel = nullspace(jacobian_matrix(f).transpose());
  r.nondegenerate = r.kernel.empty();
  return r;
}

/// Reduced echelon basis of Im(dF) in Sym^{d-1} V*; equality of points is
/// matrix equality.
struct GrassmannPoint {
  std::size_t nvars = 0;
  unsigned degree = 0;  // of F; the ambient space is Sym^{degree-1}
  Matrix basis;

  friend bool operator==(const GrassmannPoint&, const GrassmannPoint&) = default;
};

inline GrassmannPoint grassmann_point(const SymForm& f) {
  const auto nd = is_nondegenerate(f);
  if (!nd.nondegenerate)
    throw DegenerateFormError("J(F) is only defined for nondegenerate forms (Ker dF != 0)", nd.kernel);
  auto r = rref(jacobian_matrix(f));
  return GrassmannPoint{f.nvars(), f.degree(), std::move(r.reduced)};
}

/// First witness of F(g e_a, e_b, e^beta) != F(e_a, g e_b, e^beta).
struct SymmetryViolation {
  std::size_t slot_a = 0, slot_b = 0;
  MultiIndex tuple;  // degree d-2 basis tuple, as a monomial
};

inline std::optional<SymmetryViolation> find_symmetry_violation(const SymForm& f, const Matrix& g) {
  const std::size_t n = f.nvars();
  if (!g.square() || g.rows() != n) throw InputError("endomorphism dimension differs from nvars");
  if (f.degree() < 2) return std::nullopt;
  std::vector<SymForm> plain, moved;
  for (std::size_t a = 0; a < n; ++a) {
    plain.push_back(contract(f, unit_vector(n, a)));
    moved.push_back(contract(f, g.column(a)));
  }
  const auto tuples = enumerate_monomials(n, f.degree() - 2);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      const SymForm lhs = contract(moved[a], unit_vector(n, b));
      const SymForm rhs = contract(plain[a], g.column(b));
      for (std::size_t k = 0; k < tuples.size(); ++k)
        if (lhs.coeffs()[k] != rhs.coeffs()[k]) return SymmetryViolation{a, b, tuples[k]};
    }
  return std::nullopt;
}

inline bool is_symmetrizer(const SymForm& f, const Matrix& g) { return !find_symmetry_violation(f, g); }

inline std::string describe(const SymmetryViolation& v) {
  std::string t;
  for (std::size_t i = 0; i < v.tuple.nvars(); ++i)
    for (unsigned e = 0; e < v.tuple[i]; ++e) t += ", e" + std::to_string(i);
  return "F(g e" + std::to_string(v.slot_a) + ", e" + std::to_string(v.slot_b) + t + ") != F(e" +
         std::to_string(v.slot_a) + ", g e" + std::to_string(v.slot_b) + t + ")";
}

/// F^g(v1, ..., vd) = F(g v1, v2, ..., vd). Its polynomial is
/// (1/d) sum_{i,j} g_ij x_j dP/dx_i. With check off and g not a symmetrizer
/// the result is the symmetrization of F^g.
inline SymForm twist(const SymForm& f, const Matrix& g, bool check = true) {
  const std::size_t n = f.nvars();
  if (!g.square() || g.rows() != n) throw InputError("endomorphism dimension differs from nvars");
  if (check) {
    if (auto v = find_symmetry_violation(f, g))
      throw NotSymmetrizerError("not a symmetrizer: " + describe(*v));
  }
  SymForm out(n, f.degree());
  const auto monos = f.monomials();
  const Rational inv_d(1, f.degree());
  for (std::size_t k = 0; k < monos.size(); ++k) {
    const Rational& c = f.coeffs()[k];
    if (sgn(c) == 0) continue;
    MultiIndex gamma = monos[k];
    for (std::size_t i = 0; i < n; ++i) {
      if (monos[k][i] == 0) continue;
      const Rational base = c * monos[k][i] * inv_d;
      --gamma.exponents[i];
      for (std::size_t j = 0; j < n; ++j) {
        if (sgn(g(i, j)) == 0) continue;
        ++gamma.exponents[j];
        out.add_to_coeff(gamma, base * g(i, j));
        --gamma.exponents[j];
      }
      ++gamma.exponents[i];
    }
  }
  return out;
}

/// Form on the column space coordinates of m: y -> P(m y).
inline SymForm pullback(const SymForm& f, const Matrix& m) {
  if (m.rows() != f.nvars()) throw InputError("pullback: matrix rows differ from nvars");
  const std::size_t k = m.cols();
  SymForm out(k, f.degree());
  std::vector<Vector> cols;
  for (std::size_t j = 0; j < k; ++j) cols.push_back(m.column(j));
  const auto monos = out.monomials();
  const Integer dfact = factorial(f.degree());
  for (std::size_t idx = 0; idx < monos.size(); ++idx) {
    std::vector<Vector> args;
    Integer gamma_fact = 1;
    for (std::size_t j = 0; j < k; ++j) {
      gamma_fact *= factorial(monos[idx][j]);
      for (unsigned e = 0; e < monos[idx][j]; ++e) args.push_back(cols[j]);
    }
    const Rational val = evaluate(f, std::span<const Vector>(args));
    if (sgn(val) != 0) out.set_coeff(monos[idx], val * Rational(dfact) / Rational(gamma_fact));
  }
  return out;
}

/// Point of PV; coordinates scaled so that the first nonzero one is 1.
class ProjectivePoint {
 public:
  explicit ProjectivePoint(Vector v) {
    if (symz::is_zero(v)) throw InputError("a projective point needs a nonzero vector");
    coords_ = normalize_leading(std::move(v));
  }
  const Vector& coords() const noexcept { return coords_; }
  std::size_t dim() const noexcept { return coords_.size(); }
  friend bool operator==(const ProjectivePoint&, const ProjectivePoint&) = default;

 private:
  Vector coords_;
};

inline std::string to_string(const ProjectivePoint& p) {
  std::string s = "[";
  for (std::size_t i = 0; i < p.dim(); ++i) {
    if (i) s += ":";
    s += p.coords()[i].get_str();
  }
  return s + "]";
}

/// Order of vanishing of F at [u]: the least k such that
/// F(u, ..., u, v1, ..., vk) != 0 (d - k copies of u) for some basis tuple.
/// Each level checks the C(n+k-1, k) coefficients of the contracted form.
inline unsigned vanishing_order(const SymForm& f, const Vector& u) {
  if (symz::is_zero(u)) throw InputError("vanishing order at the zero vector");
  if (u.size() != f.nvars()) throw InputError("vanishing_order: length mismatch");
  SymForm g = f;
  unsigned j = 0;  // g = F(u^j, -)
  while (j < f.degree()) {
    SymForm next = contract(g, u);
    if (next.is_zero()) break;
    g = std::move(next);
    ++j;
  }
  return f.degree() - j;
}

inline unsigned vanishing_order(const SymForm& f, const ProjectivePoint& p) { return vanishing_order(f, p.coords()); }

/// Whether F(u, u, v1, ..., v_{d-2}) = 0 for all v: the condition that makes
/// [u] a point of order >= d - 1.
inline bool is_order_condition_point(const SymForm& f, const Vector& u) {
  return contract(contract(f, u), u).is_zero();
}

}  // namespace symz
