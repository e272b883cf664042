#include <gtest/gtest.h>

#include "symz/factor.hpp"
#include "symz/jordan.hpp"
#include "symz/linalg.hpp"
#include "symz/random.hpp"

using namespace symz;

namespace {

Matrix random_matrix(SplitMix64& rng, std::size_t rows, std::size_t cols, long bound, bool fractions = false) {
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) {
      // Sparse-ish so that rank deficiency actually shows up.
      if (rng.next() % 3 == 0) continue;
      long num = rng.symmetric(bound);
      long den = fractions ? 1 + static_cast<long>(rng.next() % 4) : 1;
      m(i, j) = make_rational(num, den);
    }
  return m;
}

RationalPoly poly(std::initializer_list<long> c) {
  std::vector<Rational> v;
  for (long x : c) v.emplace_back(x);
  return RationalPoly(std::move(v));
}

}  // namespace

TEST(Rational, ParseAndPrintLowestTerms) {
  EXPECT_EQ(parse_rational("6/4"), make_rational(3, 2));
  EXPECT_EQ(to_string(parse_rational("-6/4")), "-3/2");
  EXPECT_EQ(to_string(parse_rational("+5")), "5");
  EXPECT_THROW(parse_rational("1/0"), InputError);
  EXPECT_THROW(parse_rational("1/"), InputError);
  EXPECT_THROW(parse_rational("a"), InputError);
}

TEST(Rref, Identity) {
  auto r = rref(Matrix::identity(2));
  EXPECT_EQ(r.reduced, Matrix::identity(2));
  EXPECT_EQ(r.pivots, (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(r.rank, 2u);
}

TEST(Rref, Zero) {
  auto r = rref(Matrix(3, 3));
  EXPECT_EQ(r.reduced, Matrix(3, 3));
  EXPECT_TRUE(r.pivots.empty());
  EXPECT_EQ(r.rank, 0u);
}

TEST(Rref, DependentRows) {
  auto r = rref(Matrix{{1, 2}, {2, 4}});
  EXPECT_EQ(r.reduced, (Matrix{{1, 2}, {0, 0}}));
  EXPECT_EQ(r.rank, 1u);
}

TEST(Rref, IdempotentAndRowSpacePreservingOnRandomMatrices) {
  SplitMix64 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    Matrix m = random_matrix(rng, 5, 7, 6, true);
    auto r = rref(m);
    auto rr = rref(r.reduced);
    EXPECT_EQ(rr.reduced, r.reduced);
    // Pivot entries are 1 and pivot columns are otherwise zero.
    for (std::size_t i = 0; i < r.rank; ++i) {
      EXPECT_EQ(r.reduced(i, r.pivots[i]), 1);
      for (std::size_t k = 0; k < m.rows(); ++k) {
        if (k != i) {
          EXPECT_EQ(r.reduced(k, r.pivots[i]), 0);
        }
      }
    }
    std::vector<Vector> rows, reduced_rows;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      rows.push_back(m.row_vector(i));
      reduced_rows.push_back(r.reduced.row_vector(i));
    }
    EXPECT_TRUE(span_equal(rows, reduced_rows, m.cols()));
  }
}

TEST(Nullspace, Examples) {
  EXPECT_TRUE(nullspace(Matrix::identity(4)).empty());
  EXPECT_EQ(nullspace(Matrix(1, 2)).size(), 2u);
  auto k = nullspace(Matrix{{1, 1}});
  ASSERT_EQ(k.size(), 1u);
  EXPECT_EQ(k[0], (Vector{-1, 1}));
}

TEST(Nullspace, AnnihilatedIndependentAndRankNullity) {
  SplitMix64 rng(12);
  for (int trial = 0; trial < 40; ++trial) {
    Matrix m = random_matrix(rng, 4, 7, 5, true);
    auto k = nullspace(m);
    for (const auto& v : k) EXPECT_TRUE(is_zero(m * v));
    EXPECT_EQ(span_dimension(k, m.cols()), k.size());
    EXPECT_EQ(rank(m) + k.size(), m.cols());
  }
}

TEST(Inverse, RoundTripAndSingular) {
  Matrix a{{2, 1}, {1, 1}};
  auto inv = inverse(a);
  ASSERT_TRUE(inv);
  EXPECT_EQ(a * *inv, Matrix::identity(2));
  EXPECT_FALSE(inverse(Matrix{{1, 2}, {2, 4}}));
}

TEST(MinimalPolynomial, Examples) {
  EXPECT_EQ(minimal_polynomial(Matrix::identity(3)), poly({-1, 1}));
  EXPECT_EQ(minimal_polynomial(Matrix{{0, 1}, {0, 0}}), poly({0, 0, 1}));
  // Companion matrix of x^2 - 2.
  EXPECT_EQ(minimal_polynomial(Matrix{{0, 2}, {1, 0}}), poly({-2, 0, 1}));
  EXPECT_EQ(minimal_polynomial(Matrix(2, 2)), poly({0, 1}));
}

TEST(MinimalPolynomial, AnnihilatesAndIsMinimal) {
  SplitMix64 rng(13);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 1 + rng.next() % 5;
    Matrix a = random_matrix(rng, n, n, 3);
    RationalPoly mu = minimal_polynomial(a);
    EXPECT_TRUE(mu.is_monic());
    EXPECT_TRUE(mu(a).is_zero());
    // No lower power combination vanishes: I, A, ..., A^{deg-1} independent.
    std::vector<Vector> powers;
    for (int k = 0; k < mu.degree(); ++k) powers.push_back(power(a, static_cast<unsigned>(k)).flat());
    EXPECT_EQ(span_dimension(powers, n * n), static_cast<std::size_t>(mu.degree()));
  }
}

TEST(Squarefree, Examples) {
  EXPECT_EQ(squarefree_part(poly({0, 0, 1})), poly({0, 1}));
  // (x-1)^2 (x+2) = x^3 - 3x + 2
  EXPECT_EQ(squarefree_part(poly({2, -3, 0, 1})), poly({-2, 1, 1}));
  EXPECT_EQ(squarefree_part(poly({-2, 0, 1})), poly({-2, 0, 1}));
  EXPECT_THROW(squarefree_part(RationalPoly()), InputError);
}

TEST(Factor, Examples) {
  auto f1 = factor_rational(poly({-1, 0, 1}));
  ASSERT_EQ(f1.size(), 2u);
  EXPECT_EQ(f1[0].factor, poly({-1, 1}));
  EXPECT_EQ(f1[1].factor, poly({1, 1}));

  auto f2 = factor_rational(poly({-2, 0, 1}));
  ASSERT_EQ(f2.size(), 1u);
  EXPECT_EQ(f2[0].factor, poly({-2, 0, 1}));

  // x^3 - x^2 = x^2 (x - 1)
  auto f3 = factor_rational(poly({0, 0, -1, 1}));
  ASSERT_EQ(f3.size(), 2u);
  EXPECT_EQ(f3[0].factor, poly({-1, 1}));
  EXPECT_EQ(f3[0].multiplicity, 1u);
  EXPECT_EQ(f3[1].factor, poly({0, 1}));
  EXPECT_EQ(f3[1].multiplicity, 2u);
}

TEST(Factor, KroneckerSplitsProductsOfIrreducibleQuadratics) {
  // (x^2 - 2)(x^2 + 3)(x^2 + x + 1)^2: no rational roots, degree 8.
  RationalPoly a = poly({-2, 0, 1}), b = poly({3, 0, 1}), c = poly({1, 1, 1});
  RationalPoly p = make_rational(5, 3) * (a * b * c * c);
  auto f = factor_rational(p);
  ASSERT_EQ(f.size(), 3u);
  EXPECT_EQ(expand(f), p.monic());
  for (const auto& pf : f) EXPECT_EQ(pf.factor.degree(), 2);
  // x^4 + 1 is irreducible over Q.
  EXPECT_EQ(factor_rational(poly({1, 0, 0, 0, 1})).size(), 1u);
  // x^4 - 4 = (x^2 - 2)(x^2 + 2)
  EXPECT_EQ(factor_rational(poly({-4, 0, 0, 0, 1})).size(), 2u);
}

TEST(Factor, DegreeCap) {
  std::vector<Rational> c(10);
  c[9] = 1;
  c[0] = 1;
  EXPECT_THROW(factor_rational(RationalPoly(c)), UnsupportedDegreeError);
  EXPECT_THROW(factor_rational(RationalPoly()), InputError);
}

TEST(Factor, ExpansionReproducesInput) {
  SplitMix64 rng(14);
  for (int trial = 0; trial < 60; ++trial) {
    // Products of random small-degree integer polynomials.
    RationalPoly p = RationalPoly::constant(1);
    int deg = 0;
    while (deg < 6) {
      int d = 1 + static_cast<int>(rng.next() % 3);
      std::vector<Rational> c;
      for (int i = 0; i < d; ++i) c.emplace_back(rng.symmetric(3));
      c.emplace_back(1 + static_cast<long>(rng.next() % 2));
      p = p * RationalPoly(c);
      deg += d;
    }
    if (p.degree() > kMaxFactorDegree) continue;
    auto f = factor_rational(p);
    EXPECT_EQ(expand(f), p.monic());
    for (const auto& pf : f) {
      EXPECT_TRUE(pf.factor.is_monic());
      if (pf.factor.degree() >= 2) {
        // Irreducible factors of degree >= 2 have no rational root.
        EXPECT_TRUE(detail::rational_roots(pf.factor).empty());
      }
    }
  }
}

TEST(JordanChevalley, Examples) {
  auto jc = jordan_chevalley(Matrix{{1, 1}, {0, 1}});
  EXPECT_EQ(jc.semisimple, Matrix::identity(2));
  EXPECT_EQ(jc.nilpotent, (Matrix{{0, 1}, {0, 0}}));

  Matrix d{{1, 0}, {0, 2}};
  jc = jordan_chevalley(d);
  EXPECT_EQ(jc.semisimple, d);
  EXPECT_TRUE(jc.nilpotent.is_zero());

  Matrix swap_m{{0, 1}, {1, 0}};
  jc = jordan_chevalley(swap_m);
  EXPECT_EQ(jc.semisimple, swap_m);
  EXPECT_TRUE(jc.nilpotent.is_zero());
}

TEST(JordanChevalley, PropertiesOnRandomIntegerMatrices) {
  SplitMix64 rng(15);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 1 + rng.next() % 5;
    Matrix a = random_matrix(rng, n, n, 2);
    // Conjugate a block with repeated eigenvalues in sometimes, so that N != 0.
    if (trial % 2 == 0 && n >= 2) {
      Matrix j = Matrix::identity(n) * Rational(rng.symmetric(2));
      for (std::size_t i = 0; i + 1 < n; ++i) j(i, i + 1) = 1;
      Matrix p = Matrix::identity(n) + random_matrix(rng, n, n, 1);
      if (auto pinv = inverse(p)) a = p * j * *pinv;
    }
    auto jc = jordan_chevalley(a);
    EXPECT_EQ(jc.semisimple + jc.nilpotent, a);
    EXPECT_EQ(jc.semisimple * jc.nilpotent, jc.nilpotent * jc.semisimple);
    EXPECT_TRUE(is_semisimple(jc.semisimple));
    EXPECT_TRUE(power(jc.nilpotent, static_cast<unsigned>(n)).is_zero());
    EXPECT_EQ(jc.s_poly(a), jc.semisimple);
  }
}

TEST(NilpotencyIndex, Examples) {
  EXPECT_EQ(nilpotency_index(Matrix(3, 3)), 1u);
  EXPECT_EQ(nilpotency_index(Matrix{{0, 1, 0}, {0, 0, 1}, {0, 0, 0}}), 3u);
  EXPECT_EQ(nilpotency_index(Matrix::identity(3)), std::nullopt);
}
