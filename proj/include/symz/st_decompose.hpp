#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "symz/factor.hpp"
#include "symz/symmetrizer.hpp"

namespace symz {

struct STBlock {
  std::vector<Vector> basis;  // basis of V_i inside V
  SymForm form;               // F restricted to V_i, in the coordinates of `basis`
  RationalPoly eigen_factor;  // irreducible factor of the splitting element's minimal polynomial
};

/// Sebastiani-Thom splitting V = V_1 + ... + V_k with F = F_1 + ... + F_k.
/// When every eigenvalue of the splitting element is irrational and they are
/// all conjugate, there is a single rational block; the weight spaces only
/// appear after extending scalars and split_over_rationals is false.
struct STDecomposition {
  std::vector<STBlock> blocks;
  Matrix splitting_element;
  bool split_over_rationals = true;
  std::size_t k() const noexcept { return blocks.size(); }
  // Number of weight spaces over C: distinct eigenvalues of the splitting element.
  std::size_t complex_block_count() const {
    std::size_t c = 0;
    for (const auto& b : blocks) c += static_cast<std::size_t>(std::max(b.eigen_factor.degree(), 0));
    return c;
  }
};

/// Seed of the random combinations tried when the first semisimple part
/// does not reach the maximal block count.
inline constexpr std::uint64_t kSplittingSeed = 0x5EED5EED5EEDULL;
inline constexpr int kSplittingRetries = 8;

namespace detail {

/// Primary blocks Ker p_i(s) for the irreducible factors p_i of mu_s.
inline std::vector<STBlock> primary_blocks(const Matrix& s) {
  std::vector<STBlock> out;
  for (const auto& pf : factor_rational(minimal_polynomial(s))) {
    STBlock b;
    b.basis = nullspace(pf.factor(s));
    b.eigen_factor = pf.factor;
    out.push_back(std::move(b));
  }
  return out;
}

inline std::size_t primary_block_count(const Matrix& s) {
  return factor_rational(minimal_polynomial(s)).size();
}

/// Simultaneous primary decomposition of V under a commuting family of
/// semisimple matrices; the number of blocks is the most any single
/// element of their span can produce.
inline std::vector<std::vector<Vector>> common_blocks(const std::vector<Matrix>& family, std::size_t n) {
  std::vector<std::vector<Vector>> blocks;
  {
    std::vector<Vector> all;
    for (std::size_t i = 0; i < n; ++i) all.push_back(unit_vector(n, i));
    blocks.push_back(std::move(all));
  }
  for (const auto& s : family) {
    if (s.is_scalar()) continue;
    std::vector<std::vector<Vector>> refined;
    for (const auto& block : blocks) {
      const Matrix b = Matrix::from_columns(block, n);
      // s preserves the block: s b = b s_b.
      Matrix sb(block.size(), block.size());
      const Matrix image = s * b;
      for (std::size_t j = 0; j < block.size(); ++j) {
        auto x = solve(b, image.column(j));
        if (!x) throw InvariantViolation("semisimple part does not preserve a common block");
        for (std::size_t i = 0; i < block.size(); ++i) sb(i, j) = (*x)[i];
      }
      for (const auto& pf : factor_rational(minimal_polynomial(sb))) {
        std::vector<Vector> sub;
        for (const auto& y : nullspace(pf.factor(sb))) sub.push_back(b * y);
        refined.push_back(std::move(sub));
      }
    }
    blocks = std::move(refined);
  }
  return blocks;
}

}  // namespace detail

/// Every cross-block value F(v_i, v_j, e^beta), i != j, vanishes and the
/// block forms re-sum to F in block coordinates.
inline bool certify_st_decomposition(const SymForm& f, const STDecomposition& st) {
  const std::size_t n = f.nvars();
  std::size_t total = 0;
  for (const auto& b : st.blocks) total += b.basis.size();
  if (total != n || st.k() < 2) return false;
  for (std::size_t i = 0; i < st.k(); ++i)
    for (const auto& u : st.blocks[i].basis) {
      const SymForm fu = contract(f, u);
      for (std::size_t j = 0; j < st.k(); ++j) {
        if (j == i) continue;
        for (const auto& w : st.blocks[j].basis)
          if (!contract(fu, w).is_zero()) return false;
      }
    }
  // Change of basis to the concatenated block bases.
  std::vector<Vector> cols;
  for (const auto& b : st.blocks) cols.insert(cols.end(), b.basis.begin(), b.basis.end());
  const Matrix change = Matrix::from_columns(cols, n);
  if (!is_invertible(change)) return false;
  const SymForm in_blocks = pullback(f, change);
  SymForm resum(n, f.degree());
  std::size_t offset = 0;
  for (const auto& b : st.blocks) {
    const auto& fb = b.form;
    const auto monos = fb.monomials();
    for (std::size_t k = 0; k < monos.size(); ++k) {
      if (sgn(fb.coeffs()[k]) == 0) continue;
      MultiIndex alpha{std::vector<unsigned>(n, 0)};
      for (std::size_t j = 0; j < fb.nvars(); ++j) alpha.exponents[offset + j] = monos[k][j];
      resum.add_to_coeff(alpha, fb.coeffs()[k]);
    }
    offset += fb.nvars();
  }
  return resum == in_blocks;
}

/// Splits F along the weight spaces of a semisimple non-scalar element of
/// g_F, or returns nullopt when g^x = 0. Blocks are the primary components
/// Ker p_i(s) over Q; after extending scalars each one is a sum of weight
/// spaces, so the cross-block vanishing still holds.
inline std::optional<STDecomposition> st_decompose(const SymmetrizerAlgebra& alg) {
  if (!alg.nondegenerate)
    throw DegenerateFormError("Sebastiani-Thom splitting needs a nondegenerate form", alg.kernel);
  if (alg.dim_torus == 0) return std::nullopt;
  const std::size_t n = alg.n();
  const std::size_t target = detail::common_blocks(alg.semisimple_parts, n).size();

  std::optional<Matrix> best;
  std::size_t best_count = 0;
  for (const auto& s : alg.semisimple_parts) {
    if (s.is_scalar()) continue;
    best = s;
    best_count = detail::primary_block_count(s);
    break;
  }
  if (!best) throw InvariantViolation("dim g^x > 0 but every semisimple part is scalar");
  SplitMix64 rng(kSplittingSeed);
  for (int attempt = 0; attempt < kSplittingRetries && best_count < target; ++attempt) {
    Matrix s(n, n);
    for (const auto& p : alg.semisimple_parts) s += p * Rational(rng.symmetric(10));
    const std::size_t count = detail::primary_block_count(s);
    if (count > best_count) {
      best = s;
      best_count = count;
    }
  }
  if (best_count < target) {
    // Fall back to sum (i + 1) pi_i over the projectors of the common
    // blocks; these projectors are polynomials in the semisimple parts.
    const auto blocks = detail::common_blocks(alg.semisimple_parts, n);
    std::vector<Vector> cols;
    std::vector<std::size_t> owner;
    for (std::size_t i = 0; i < blocks.size(); ++i)
      for (const auto& v : blocks[i]) {
        cols.push_back(v);
        owner.push_back(i);
      }
    const Matrix p = Matrix::from_columns(cols, n);
    Matrix diag(n, n);
    for (std::size_t j = 0; j < n; ++j) diag(j, j) = static_cast<long>(owner[j] + 1);
    best = p * diag * *inverse(p);
    if (!alg.contains(*best)) throw InvariantViolation("block projector combination is not in g_F");
  }

  STDecomposition st;
  st.splitting_element = *best;
  st.blocks = detail::primary_blocks(*best);
  for (auto& b : st.blocks) b.form = pullback(alg.form, Matrix::from_columns(b.basis, n));
  if (st.k() == 1) {
    // The weight-space argument only needs s to be a non-scalar semisimple symmetrizer.
    st.split_over_rationals = false;
    if (!is_symmetrizer(alg.form, st.splitting_element) || !is_semisimple(st.splitting_element) ||
        st.splitting_element.is_scalar())
      throw InvariantViolation("splitting element is not a non-scalar semisimple symmetrizer");
    return st;
  }
  if (!certify_st_decomposition(alg.form, st))
    throw InvariantViolation("weight-space blocks fail the cross-block vanishing certificate");
  return st;
}

inline std::optional<STDecomposition> st_decompose(const SymForm& f) { return st_decompose(symmetrizer_algebra(f)); }

/// Conjugates each block algebra g_{F_i} back to V and returns the span basis
/// of their direct sum, for comparison with g_F.
inline std::vector<Matrix> block_direct_sum_algebra(const STDecomposition& st, std::size_t n) {
  std::vector<Vector> cols;
  for (const auto& b : st.blocks) cols.insert(cols.end(), b.basis.begin(), b.basis.end());
  const Matrix p = Matrix::from_columns(cols, n);
  const Matrix pinv = *inverse(p);
  std::vector<Matrix> out;
  std::size_t offset = 0;
  for (const auto& b : st.blocks) {
    const std::size_t k = b.basis.size();
    for (const auto& flat : nullspace(constraint_matrix(b.form))) {
      const Matrix gi = Matrix::from_flat(flat, k, k);
      Matrix big(n, n);
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) big(offset + i, offset + j) = gi(i, j);
      out.push_back(p * big * pinv);
    }
    offset += k;
  }
  return out;
}

}  // namespace symz
