#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "symz/nilpotent.hpp"
#include "symz/poly_text.hpp"
#include "symz/random.hpp"
#include "symz/symmetrizer.hpp"

namespace symz {

enum class GeneratorKind { fermat, random, st_sum, cone, prescribed_nilpotent };

inline const char* to_string(GeneratorKind k) {
  switch (k) {
    case GeneratorKind::fermat: return "fermat";
    case GeneratorKind::random: return "random";
    case GeneratorKind::st_sum: return "st_sum";
    case GeneratorKind::cone: return "cone";
    case GeneratorKind::prescribed_nilpotent: return "prescribed_nilpotent";
  }
  return "?";
}

inline GeneratorKind parse_generator_kind(std::string_view s) {
  for (auto k : {GeneratorKind::fermat, GeneratorKind::random, GeneratorKind::st_sum, GeneratorKind::cone,
                 GeneratorKind::prescribed_nilpotent})
    if (s == to_string(k)) return k;
  throw InvalidSpecError("unknown generator kind '" + std::string(s) + "'");
}

struct GeneratorSpec {
  GeneratorKind kind = GeneratorKind::random;
  std::size_t nvars = 3;
  unsigned degree = 3;
  std::uint64_t seed = 1;
  long coefficient_bound = 10;
  std::vector<std::size_t> block_sizes;  // st_sum; default splits n in two
  std::optional<Matrix> nilpotent;       // prescribed_nilpotent; default e_i -> e_{i+1}
};

inline GeneratorSpec make_spec(GeneratorKind kind, std::size_t nvars, unsigned degree, std::uint64_t seed = 1,
                               long bound = 10, std::vector<std::size_t> blocks = {},
                               std::optional<Matrix> nilpotent = std::nullopt) {
  GeneratorSpec s;
  s.kind = kind;
  s.nvars = nvars;
  s.degree = degree;
  s.seed = seed;
  s.coefficient_bound = bound;
  s.block_sizes = std::move(blocks);
  s.nilpotent = std::move(nilpotent);
  return s;
}

inline constexpr int kNondegenerateRetries = 32;

/// e_0 -> e_1 -> ... -> e_{n-1} -> 0.
inline Matrix regular_nilpotent(std::size_t n) {
  Matrix h(n, n);
  for (std::size_t i = 0; i + 1 < n; ++i) h(i + 1, i) = 1;
  return h;
}

namespace detail {

inline SymForm dense_random(std::size_t n, unsigned d, long bound, SplitMix64& rng) {
  std::vector<Rational> c(monomial_count(n, d));
  for (auto& x : c) x = rng.symmetric(bound);
  return SymForm(n, d, std::move(c));
}

/// Places `block` on the variables offset .. offset + block.nvars() - 1.
inline void embed_block(SymForm& into, const SymForm& block, std::size_t offset) {
  const auto monos = block.monomials();
  for (std::size_t k = 0; k < monos.size(); ++k) {
    if (sgn(block.coeffs()[k]) == 0) continue;
    MultiIndex alpha{std::vector<unsigned>(into.nvars(), 0)};
    for (std::size_t j = 0; j < block.nvars(); ++j) alpha.exponents[offset + j] = monos[k][j];
    into.add_to_coeff(alpha, block.coeffs()[k]);
  }
}

inline SymForm st_block(std::size_t size, unsigned d, long bound, SplitMix64& rng) {
  if (size == 1) {
    long c = 0;
    while (c == 0) c = rng.symmetric(bound);
    SymForm f(1, d);
    f.set_coeff(MultiIndex{{d}}, c);
    return f;
  }
  for (int attempt = 0; attempt < kNondegenerateRetries; ++attempt) {
    SymForm f = dense_random(size, d, bound, rng);
    if (is_nondegenerate(f).nondegenerate) return f;
  }
  throw InvalidSpecError("no nondegenerate block of size " + std::to_string(size) + " after retries");
}

}  // namespace detail

/// Basis of {F of degree d : h in g_F}, as coefficient vectors in the
/// canonical monomial order. Each constraint row is linear in the c_alpha
/// because F(e_x, e_y, e^beta) = c_{beta + e_x + e_y} (beta + e_x + e_y)! / d!.
inline std::vector<Vector> forms_with_symmetrizer(std::size_t n, unsigned d, const Matrix& h) {
  if (h.rows() != n || h.cols() != n) throw InvalidSpecError("prescribed matrix has the wrong size");
  const auto tuples = enumerate_monomials(n, d - 2);
  const std::size_t cols = monomial_count(n, d);
  const Integer dfac = factorial(d);
  auto value = [&](const MultiIndex& beta, std::size_t x, std::size_t y) {
    MultiIndex alpha = beta;
    ++alpha.exponents[x];
    ++alpha.exponents[y];
    Integer af = 1;
    for (auto e : alpha.exponents) af *= factorial(e);
    return std::pair<std::size_t, Rational>{monomial_rank(alpha), Rational(af) / Rational(dfac)};
  };
  std::vector<Vector> rows;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      for (const auto& beta : tuples) {
        Vector row(cols);
        for (std::size_t k = 0; k < n; ++k) {
          if (sgn(h(k, a)) != 0) {
            auto [col, w] = value(beta, k, b);
            row[col] += h(k, a) * w;
          }
          if (sgn(h(k, b)) != 0) {
            auto [col, w] = value(beta, a, k);
            row[col] -= h(k, b) * w;
          }
        }
        if (!is_zero(row)) rows.push_back(std::move(row));
      }
  return nullspace(Matrix::from_rows(rows, cols));
}

/// Deterministic form for a spec. Nondegeneracy retries draw from one
/// SplitMix64 stream seeded by spec.seed, at most 32 times.
inline SymForm generate(const GeneratorSpec& spec) {
  const std::size_t n = spec.nvars;
  const unsigned d = spec.degree;
  if (n < 2) throw InvalidSpecError("nvars must be >= 2");
  if (d < 3) throw InvalidSpecError("degree must be >= 3");
  if (spec.coefficient_bound < 1) throw InvalidSpecError("coefficient bound must be positive");
  SplitMix64 rng(spec.seed);
  switch (spec.kind) {
    case GeneratorKind::fermat:
    case GeneratorKind::cone: {
      SymForm f(n, d);
      const std::size_t used = spec.kind == GeneratorKind::cone ? n - 1 : n;
      for (std::size_t i = 0; i < used; ++i) {
        MultiIndex alpha{std::vector<unsigned>(n, 0)};
        alpha.exponents[i] = d;
        f.set_coeff(alpha, 1);
      }
      return f;
    }
    case GeneratorKind::random:
      return detail::dense_random(n, d, spec.coefficient_bound, rng);
    case GeneratorKind::st_sum: {
      std::vector<std::size_t> sizes = spec.block_sizes;
      if (sizes.empty()) sizes = {n - n / 2, n / 2};
      std::size_t total = 0;
      for (auto s : sizes) {
        if (s == 0) throw InvalidSpecError("block sizes must be positive");
        total += s;
      }
      if (total != n) throw InvalidSpecError("block sizes must sum to nvars");
      if (sizes.size() < 2) throw InvalidSpecError("st_sum needs at least two blocks");
      SymForm f(n, d);
      std::size_t offset = 0;
      for (auto s : sizes) {
        detail::embed_block(f, detail::st_block(s, d, spec.coefficient_bound, rng), offset);
        offset += s;
      }
      return f;
    }
    case GeneratorKind::prescribed_nilpotent: {
      const Matrix h = spec.nilpotent ? *spec.nilpotent : regular_nilpotent(n);
      if (h.rows() != n || h.cols() != n) throw InvalidSpecError("prescribed matrix must be nvars x nvars");
      if (h.is_zero() || !is_nilpotent(h)) throw InvalidSpecError("prescribed matrix must be nonzero nilpotent");
      const auto space = forms_with_symmetrizer(n, d, h);
      if (space.empty()) throw InvalidSpecError("no nonzero form has the prescribed symmetrizer");
      for (int attempt = 0; attempt < kNondegenerateRetries; ++attempt) {
        Vector c(monomial_count(n, d));
        for (const auto& v : space) c = add(std::move(c), scaled(v, rng.symmetric(spec.coefficient_bound)));
        SymForm f(n, d, std::move(c));
        if (!f.is_zero() && is_nondegenerate(f).nondegenerate) return f;
      }
      throw InvalidSpecError("prescribed nilpotent admits no nondegenerate form after retries");
    }
  }
  throw InvalidSpecError("unhandled generator kind");
}

struct CensusRow {
  GeneratorSpec spec;
  std::string status;  // ok | degenerate | failed
  std::string detail;  // failure message
  std::size_t dim_total = 0;
  std::size_t dim_torus = 0;
  std::size_t dim_unipotent = 0;
  std::size_t square_zero_count = 0;
};

/// One row per spec, in spec order.
inline std::vector<CensusRow> census(const std::vector<GeneratorSpec>& specs) {
  std::vector<CensusRow> rows;
  rows.reserve(specs.size());
  for (const auto& spec : specs) {
    CensusRow row{spec, "ok", {}};
    try {
      const SymForm f = generate(spec);
      const auto alg = symmetrizer_algebra(f);
      row.dim_total = alg.dim_total;
      if (!alg.nondegenerate) {
        row.status = "degenerate";
      } else {
        row.dim_torus = alg.dim_torus;
        row.dim_unipotent = alg.dim_unipotent;
        row.square_zero_count = nilpotent_report(alg).square_zero.size();
      }
    } catch (const Error& e) {
      row.status = "failed";
      row.detail = e.what();
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

struct CorpusEntry {
  std::string name;
  SymForm form;
};

/// Fixed reference forms covering every generator kind and the hand-made
/// examples. All have n <= 4; most have n <= 3 and d <= 4.
inline std::vector<CorpusEntry> golden_corpus() {
  std::vector<CorpusEntry> out;
  auto text = [&](std::string name, std::string_view poly, std::optional<std::size_t> n = std::nullopt) {
    out.push_back({std::move(name), parse_poly(poly, n)});
  };
  auto gen = [&](std::string name, const GeneratorSpec& spec) { out.push_back({std::move(name), generate(spec)}); };
  text("cubic_node", "x0^2*x1");
  text("cubic_node_twisted", "x0^2*x1 + x0^3");
  text("regular_nilpotent_cubic", "x0^2*x2 + x0*x1^2");
  text("quartic_node", "x0^3*x1");
  text("binary_mixed", "x0^3 + x1^3 - 2/3*x0*x1^2");
  text("cone_binary", "x0^3", 2);
  text("cone_ternary", "x0^2*x1", 3);
  text("quartic_cone", "x0^4 + x0*x1^3", 3);
  for (std::size_t n : {2, 3, 4})
    for (unsigned d : {3u, 4u}) gen("fermat_" + std::to_string(n) + "_" + std::to_string(d), make_spec(GeneratorKind::fermat, n, d));
  gen("st_sum_3_3", make_spec(GeneratorKind::st_sum, 3, 3, 7, 5, {1, 2}));
  gen("st_sum_3_4", make_spec(GeneratorKind::st_sum, 3, 4, 8, 5, {2, 1}));
  gen("st_sum_4_3", make_spec(GeneratorKind::st_sum, 4, 3, 9, 5, {2, 2}));
  gen("random_2_3", make_spec(GeneratorKind::random, 2, 3, 11, 10));
  gen("random_3_3", make_spec(GeneratorKind::random, 3, 3, 12, 10));
  gen("random_3_4", make_spec(GeneratorKind::random, 3, 4, 13, 10));
  gen("nilpotent_2_3", make_spec(GeneratorKind::prescribed_nilpotent, 2, 3, 21, 5));
  gen("nilpotent_2_4", make_spec(GeneratorKind::prescribed_nilpotent, 2, 4, 22, 5));
  gen("nilpotent_3_3", make_spec(GeneratorKind::prescribed_nilpotent, 3, 3, 23, 5));
  gen("nilpotent_3_4", make_spec(GeneratorKind::prescribed_nilpotent, 3, 4, 24, 5));
  {
    Matrix h(3, 3);
    h(1, 0) = 1;  // e0 -> e1, e2 fixed at 0
    gen("nilpotent_3_3_rank1", make_spec(GeneratorKind::prescribed_nilpotent, 3, 3, 25, 5, {}, h));
  }
  return out;
}

}  // namespace symz
