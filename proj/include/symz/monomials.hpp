#pragma once

#include <compare>
#include <cstddef>
#include <numeric>
#include <vector>

#include "symz/errors.hpp"

namespace symz {

/// Exponent vector of a monomial x0^a0 * ... * x{n-1}^a{n-1}.
struct MultiIndex {
  std::vector<unsigned> exponents;

  std::size_t nvars() const noexcept { return exponents.size(); }
  unsigned total() const noexcept { return std::accumulate(exponents.begin(), exponents.end(), 0u); }
  unsigned operator[](std::size_t i) const { return exponents[i]; }

  friend bool operator==(const MultiIndex&, const MultiIndex&) = default;
  friend auto operator<=>(const MultiIndex&, const MultiIndex&) = default;
};

/// Number of monomials of degree d in n variables, C(n + d - 1, d).
inline std::size_t monomial_count(std::size_t n, std::size_t d) {
  if (n == 0) return d == 0 ? 1 : 0;
  // C(n + d - 1, n - 1), computed incrementally; exact at every step.
  std::size_t r = 1;
  for (std::size_t k = 1; k < n; ++k) r = r * (d + k) / k;
  return r;
}

namespace detail {
inline void enumerate_into(std::size_t n, unsigned d, std::vector<unsigned>& prefix,
                           std::vector<MultiIndex>& out) {
  if (prefix.size() + 1 == n) {
    prefix.push_back(d);
    out.push_back(MultiIndex{prefix});
    prefix.pop_back();
    return;
  }
  for (unsigned a = d + 1; a-- > 0;) {
    prefix.push_back(a);
    enumerate_into(n, d - a, prefix, out);
    prefix.pop_back();
  }
}
}  // namespace detail

/// All degree-d monomials in n variables, descending lexicographic order.
/// This is the canonical coordinate order of Sym^d V* throughout the library.
inline std::vector<MultiIndex> enumerate_monomials(std::size_t n, unsigned d) {
  if (n == 0) throw InputError("enumerate_monomials needs at least one variable");
  std::vector<MultiIndex> out;
  out.reserve(monomial_count(n, d));
  std::vector<unsigned> prefix;
  detail::enumerate_into(n, d, prefix, out);
  return out;
}

/// Position of alpha in enumerate_monomials(alpha.nvars(), alpha.total()).
inline std::size_t monomial_rank(const MultiIndex& alpha) {
  const std::size_t n = alpha.nvars();
  std::size_t rem = alpha.total();
  std::size_t rank = 0;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    // Monomials that agree on the prefix but have a larger exponent at k.
    for (std::size_t t = alpha[k] + 1; t <= rem; ++t) rank += monomial_count(n - k - 1, rem - t);
    rem -= alpha[k];
  }
  return rank;
}

}  // namespace symz
