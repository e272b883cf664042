#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "symz/matrix.hpp"

namespace symz {

struct RrefResult {
  Matrix reduced;
  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
};

/// Reduced row-echelon form. The pivot is the first nonzero entry scanning
/// down the column; exact arithmetic needs no magnitude pivoting.
inline RrefResult rref(Matrix m) {
  RrefResult out;
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::size_t r = 0;
  Rational t;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && sgn(m(p, c)) == 0) ++p;
    if (p == rows) continue;
    if (p != r)
      for (std::size_t j = c; j < cols; ++j) swap(m(p, j), m(r, j));
    if (m(r, c) != 1) {
      Rational inv = 1 / m(r, c);
      for (std::size_t j = c; j < cols; ++j) m(r, j) *= inv;
    }
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || sgn(m(i, c)) == 0) continue;
      Rational f = m(i, c);
      for (std::size_t j = c; j < cols; ++j) {
        if (sgn(m(r, j)) == 0) continue;
        t = f * m(r, j);
        m(i, j) -= t;
      }
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.rank = r;
  out.reduced = std::move(m);
  return out;
}

inline std::size_t rank(const Matrix& m) { return rref(m).rank; }

/// Kernel basis of m, one vector per free column in increasing order. The
/// vector for free column f has a 1 at f and zeros at the other free columns.
inline std::vector<Vector> nullspace(const Matrix& m) {
  const RrefResult r = rref(m);
  const std::size_t cols = m.cols();
  std::vector<bool> is_pivot(cols, false);
  for (auto p : r.pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    Vector v(cols);
    v[f] = 1;
    for (std::size_t i = 0; i < r.rank; ++i) v[r.pivots[i]] = -r.reduced(i, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Reduced echelon basis of the span of the given vectors (all of length dim).
inline std::vector<Vector> span_basis(const std::vector<Vector>& vectors, std::size_t dim) {
  if (vectors.empty()) return {};
  const RrefResult r = rref(Matrix::from_rows(vectors, dim));
  std::vector<Vector> out;
  for (std::size_t i = 0; i < r.rank; ++i) out.push_back(r.reduced.row_vector(i));
  return out;
}

inline std::size_t span_dimension(const std::vector<Vector>& vectors, std::size_t dim) {
  if (vectors.empty()) return 0;
  return rank(Matrix::from_rows(vectors, dim));
}

inline bool span_contains(const std::vector<Vector>& span, const Vector& v) {
  if (is_zero(v)) return true;
  if (span.empty()) return false;
  std::vector<Vector> all = span;
  all.push_back(v);
  return span_dimension(all, v.size()) == span_dimension(span, v.size());
}

inline bool span_equal(const std::vector<Vector>& a, const std::vector<Vector>& b, std::size_t dim) {
  const std::size_t ra = span_dimension(a, dim);
  if (ra != span_dimension(b, dim)) return false;
  std::vector<Vector> all = a;
  all.insert(all.end(), b.begin(), b.end());
  return span_dimension(all, dim) == ra;
}

/// Solves m x = b; returns the solution with free variables set to zero, or
/// nullopt when the system is inconsistent.
inline std::optional<Vector> solve(const Matrix& m, const Vector& b) {
  if (b.size() != m.rows()) throw InputError("solve: right-hand side length mismatch");
  Matrix aug(m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = b[i];
  }
  const RrefResult r = rref(std::move(aug));
  if (!r.pivots.empty() && r.pivots.back() == m.cols()) return std::nullopt;
  Vector x(m.cols());
  for (std::size_t i = 0; i < r.rank; ++i) x[r.pivots[i]] = r.reduced(i, m.cols());
  return x;
}

/// Coordinates of v in the (linearly independent) family `basis`, or nullopt.
inline std::optional<Vector> coordinates(const std::vector<Vector>& basis, const Vector& v) {
  if (basis.empty()) return is_zero(v) ? std::optional<Vector>(Vector{}) : std::nullopt;
  return solve(Matrix::from_columns(basis, v.size()), v);
}

inline std::optional<Matrix> inverse(const Matrix& m) {
  if (!m.square()) throw InputError("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  Matrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  const RrefResult r = rref(std::move(aug));
  if (r.rank < n || r.pivots[n - 1] != n - 1) return std::nullopt;
  Matrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = r.reduced(i, n + j);
  return inv;
}

inline bool is_invertible(const Matrix& m) { return m.square() && rank(m) == m.rows(); }

/// Basis of the column space (image) of m, in reduced echelon form.
inline std::vector<Vector> column_space(const Matrix& m) {
  std::vector<Vector> cols;
  for (std::size_t j = 0; j < m.cols(); ++j) cols.push_back(m.column(j));
  return span_basis(cols, m.rows());
}

inline std::vector<Vector> flatten_all(const std::vector<Matrix>& ms) {
  std::vector<Vector> out;
  out.reserve(ms.size());
  for (const auto& m : ms) out.push_back(m.flat());
  return out;
}

/// Whether every matrix in `a` lies in span(b) and vice versa.
inline bool matrix_span_equal(const std::vector<Matrix>& a, const std::vector<Matrix>& b, std::size_t n) {
  return span_equal(flatten_all(a), flatten_all(b), n * n);
}

inline bool matrix_span_contains(const std::vector<Matrix>& span, const Matrix& m) {
  return span_contains(flatten_all(span), m.flat());
}

}  // namespace symz
