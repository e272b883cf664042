#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "symz/jordan.hpp"
#include "symz/random.hpp"
#include "symz/symform.hpp"

namespace symz {

namespace detail {

/// table[x * n + y] = coefficient vector of F(e_x, e_y, -) as a (d-2)-form.
inline std::vector<SymForm> double_contractions(const SymForm& f) {
  const std::size_t n = f.nvars();
  std::vector<SymForm> single, table;
  for (std::size_t x = 0; x < n; ++x) single.push_back(contract(f, unit_vector(n, x)));
  table.reserve(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) table.push_back(contract(single[x], unit_vector(n, y)));
  return table;
}

/// beta! / (d-2)! turns a (d-2)-form coefficient into the multilinear value
/// on the basis tuple beta.
inline std::vector<Rational> polarization_factors(std::size_t n, unsigned k) {
  std::vector<Rational> out;
  const Rational kf(factorial(k));
  for (const auto& beta : enumerate_monomials(n, k)) {
    Integer b = 1;
    for (auto e : beta.exponents) b *= factorial(e);
    out.push_back(Rational(b) / kf);
  }
  return out;
}

}  // namespace detail

/// Row of the symmetrizer system for the slot pair (a, b) and the degree
/// (d-2) basis tuple beta:
///   sum_k g_{k a} F(e_k, e_b, e^beta) - sum_k g_{k b} F(e_a, e_k, e^beta) = 0
/// over the unknowns g_{k i} at column k * n + i. Rows with a == b vanish.
inline Vector constraint_row(const SymForm& f, std::size_t a, std::size_t b, const MultiIndex& beta) {
  const std::size_t n = f.nvars();
  if (f.degree() < 2) throw InputError("symmetrizer constraints need degree >= 2");
  Vector row(n * n);
  Integer bf = 1;
  for (auto e : beta.exponents) bf *= factorial(e);
  const Rational scale = Rational(bf) / Rational(factorial(f.degree() - 2));
  for (std::size_t k = 0; k < n; ++k) {
    const SymForm kb = contract(contract(f, unit_vector(n, k)), unit_vector(n, b));
    const SymForm ak = contract(contract(f, unit_vector(n, a)), unit_vector(n, k));
    row[k * n + a] += kb.coeff(beta) * scale;
    row[k * n + b] -= ak.coeff(beta) * scale;
  }
  return row;
}

/// Linear system whose nullspace is the symmetrizer algebra g_F. Only the
/// slot-1/slot-2 swap is imposed: F is already symmetric in slots 2..d, so
/// the rest of the chain follows. One row per pair a < b and per degree
/// (d-2) monomial beta, in that nesting order.
inline Matrix constraint_matrix(const SymForm& f) {
  const std::size_t n = f.nvars();
  if (f.degree() < 2) throw InputError("symmetrizer constraints need degree >= 2");
  const auto table = detail::double_contractions(f);
  const auto tuples = enumerate_monomials(n, f.degree() - 2);
  const auto factors = detail::polarization_factors(n, f.degree() - 2);
  const std::size_t m = tuples.size();
  Matrix out(n * (n - 1) / 2 * m, n * n);
  std::size_t r = 0;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      for (std::size_t t = 0; t < m; ++t, ++r)
        for (std::size_t k = 0; k < n; ++k) {
          out(r, k * n + a) += table[k * n + b].coeffs()[t] * factors[t];
          out(r, k * n + b) -= table[a * n + k].coeffs()[t] * factors[t];
        }
  return out;
}

/// g_F with its split into semisimple and nilpotent parts.
struct SymmetrizerAlgebra {
  SymForm form;
  bool nondegenerate = false;
  std::vector<Vector> kernel;  // Ker(dF) when degenerate

  std::vector<Matrix> basis;  // nullspace of constraint_matrix, reshaped
  bool contains_identity = false;

  // Populated only for nondegenerate forms.
  bool split_available = false;
  std::vector<Matrix> semisimple_parts;  // S of each basis element
  std::vector<Matrix> nilpotent_parts;   // N of each basis element
  std::vector<Matrix> unipotent_basis;   // reduced basis of g^+ = span(nilpotent_parts)
  std::size_t dim_total = 0;
  std::size_t dim_torus = 0;      // dim g^x
  std::size_t dim_unipotent = 0;  // dim g^+

  std::size_t n() const noexcept { return form.nvars(); }
  bool contains(const Matrix& g) const { return matrix_span_contains(basis, g); }
};

inline std::vector<Matrix> reshape_all(const std::vector<Vector>& flat, std::size_t n) {
  std::vector<Matrix> out;
  out.reserve(flat.size());
  for (const auto& v : flat) out.push_back(Matrix::from_flat(v, n, n));
  return out;
}

/// Reduced (row-echelon) basis of the span of a family of n x n matrices.
inline std::vector<Matrix> matrix_span_basis(const std::vector<Matrix>& ms, std::size_t n) {
  return reshape_all(span_basis(flatten_all(ms), n * n), n);
}

inline SymmetrizerAlgebra symmetrizer_algebra(const SymForm& f) {
  SymmetrizerAlgebra alg;
  alg.form = f;
  const std::size_t n = f.nvars();
  alg.basis = reshape_all(nullspace(constraint_matrix(f)), n);
  alg.dim_total = alg.basis.size();
  alg.contains_identity = alg.contains(Matrix::identity(n));
  if (!alg.contains_identity) throw InvariantViolation("identity is not in the computed symmetrizer algebra");

  auto nd = is_nondegenerate(f);
  alg.nondegenerate = nd.nondegenerate;
  alg.kernel = std::move(nd.kernel);
  if (!alg.nondegenerate) return alg;

  for (const auto& g : alg.basis) {
    JordanChevalley jc = jordan_chevalley(g);
    if (!alg.contains(jc.semisimple) || !alg.contains(jc.nilpotent))
      throw InvariantViolation("Jordan-Chevalley part left the symmetrizer algebra");
    if (!is_nilpotent(jc.nilpotent)) throw InvariantViolation("nilpotent part is not nilpotent");
    alg.semisimple_parts.push_back(std::move(jc.semisimple));
    alg.nilpotent_parts.push_back(std::move(jc.nilpotent));
  }
  alg.unipotent_basis = matrix_span_basis(alg.nilpotent_parts, n);
  for (const auto& u : alg.unipotent_basis)
    if (!is_nilpotent(u)) throw InvariantViolation("g^+ basis element is not nilpotent");
  alg.dim_unipotent = alg.unipotent_basis.size();
  const std::size_t dim_semisimple = span_dimension(flatten_all(alg.semisimple_parts), n * n);
  if (dim_semisimple + alg.dim_unipotent != alg.dim_total)
    throw InvariantViolation("semisimple and nilpotent spans do not add up to g_F");
  alg.dim_torus = dim_semisimple - 1;
  alg.split_available = true;
  return alg;
}

struct ClosurePair {
  std::size_t i = 0, j = 0;
  bool product_in_span = false;
  std::optional<bool> commutes;  // only decided for nondegenerate forms
};

struct ClosureReport {
  std::vector<ClosurePair> pairs;
  bool closed = true;
  std::optional<bool> commutative;
};

/// Checks g h in span(basis) for every ordered basis pair, and g h = h g when
/// the form is nondegenerate.
inline ClosureReport algebra_closure_check(const SymmetrizerAlgebra& alg) {
  ClosureReport rep;
  if (alg.nondegenerate) rep.commutative = true;
  const auto flat = flatten_all(alg.basis);
  for (std::size_t i = 0; i < alg.basis.size(); ++i)
    for (std::size_t j = 0; j < alg.basis.size(); ++j) {
      ClosurePair p{i, j, span_contains(flat, (alg.basis[i] * alg.basis[j]).flat()), std::nullopt};
      rep.closed = rep.closed && p.product_in_span;
      if (alg.nondegenerate) {
        p.commutes = commutator(alg.basis[i], alg.basis[j]).is_zero();
        rep.commutative = *rep.commutative && *p.commutes;
      }
      rep.pairs.push_back(p);
    }
  return rep;
}

/// F(u, w, v1, ..., v_{d-2}) = 0 for u in Im(h), w in Ker(h), checked on
/// bases; by multilinearity this decides the statement for all vectors.
inline bool kernel_image_vanishing(const SymForm& f, const Matrix& h) {
  if (auto v = find_symmetry_violation(f, h)) throw NotSymmetrizerError("not a symmetrizer: " + describe(*v));
  const auto image = column_space(h);
  const auto kernel = nullspace(h);
  for (const auto& u : image) {
    const SymForm fu = contract(f, u);
    for (const auto& w : kernel)
      if (!contract(fu, w).is_zero()) return false;
  }
  return true;
}

/// The unique g in G_F with F^g = Ftilde, for J(F) = J(Ftilde):
/// g = (dF)^{-1} o dFtilde. Row j of the Jacobian of Ftilde equals
/// sum_i g_{ij} row_i of the Jacobian of F.
inline Matrix recover_symmetrizer(const SymForm& f, const SymForm& ftilde) {
  if (f.nvars() != ftilde.nvars() || f.degree() != ftilde.degree())
    throw FiberMismatchError("forms have different (n, d)");
  const GrassmannPoint jf = grassmann_point(f);
  const GrassmannPoint jt = grassmann_point(ftilde);
  if (!(jf == jt)) throw FiberMismatchError("J(F) != J(F~): the forms lie in different fibers");
  const std::size_t n = f.nvars();
  const Matrix jac_t = jacobian_matrix(f).transpose();
  const Matrix jac_tilde = jacobian_matrix(ftilde);
  Matrix g(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    auto x = solve(jac_t, jac_tilde.row_vector(j));
    if (!x) throw InvariantViolation("row of dF~ outside Im(dF) despite equal Grassmann points");
    for (std::size_t i = 0; i < n; ++i) g(i, j) = (*x)[i];
  }
  if (!(twist(f, g, true) == ftilde)) throw InvariantViolation("recovered g does not carry F to F~");
  return g;
}

struct FiberInvarianceReport {
  bool same_algebra = false;            // G_{F^g} = G_F (span of g_F)
  bool kernel_transport = false;        // Ker(dF^g) = g^{-1} Ker(dF)
  bool nondegeneracy_preserved = false; // F^g nondegenerate iff F is
  std::optional<bool> fixed_iff_identity;  // F^g = F iff g = Id (nondegenerate F)
  std::optional<bool> same_grassmann_point;  // J(F^g) = J(F) (nondegenerate F)

  bool all_pass() const {
    return same_algebra && kernel_transport && nondegeneracy_preserved && fixed_iff_identity.value_or(true) &&
           same_grassmann_point.value_or(true);
  }
};

inline FiberInvarianceReport fiber_invariance_check(const SymForm& f, const Matrix& g) {
  auto ginv = inverse(g);
  if (!ginv) throw InputError("fiber_invariance_check needs an invertible g");
  const SymForm fg = twist(f, g, true);
  const std::size_t n = f.nvars();
  FiberInvarianceReport rep;
  const auto alg_f = reshape_all(nullspace(constraint_matrix(f)), n);
  const auto alg_fg = reshape_all(nullspace(constraint_matrix(fg)), n);
  rep.same_algebra = matrix_span_equal(alg_f, alg_fg, n);
  const auto nd_f = is_nondegenerate(f);
  const auto nd_fg = is_nondegenerate(fg);
  std::vector<Vector> moved;
  for (const auto& k : nd_f.kernel) moved.push_back(*ginv * k);
  rep.kernel_transport = span_equal(nd_fg.kernel, moved, n);
  rep.nondegeneracy_preserved = nd_f.nondegenerate == nd_fg.nondegenerate;
  if (nd_f.nondegenerate) {
    rep.fixed_iff_identity = (fg == f) == (g == Matrix::identity(n));
    rep.same_grassmann_point = grassmann_point(f) == grassmann_point(fg);
  }
  return rep;
}

/// Random invertible element of G_F: an integer combination of the basis
/// with coefficients in [-bound, bound], redrawn while singular.
inline Matrix random_group_element(const SymmetrizerAlgebra& alg, SplitMix64& rng, long bound = 3) {
  const std::size_t n = alg.n();
  for (int attempt = 0; attempt < 256; ++attempt) {
    Matrix g(n, n);
    for (const auto& b : alg.basis) g += b * Rational(rng.symmetric(bound));
    if (is_invertible(g)) return g;
  }
  throw InvariantViolation("no invertible element found in g_F (identity should be one)");
}

}  // namespace symz
