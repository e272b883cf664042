#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "symz/poly.hpp"

namespace symz {

struct PolyFactor {
  RationalPoly factor;  // monic, irreducible over Q
  unsigned multiplicity = 1;

  friend bool operator==(const PolyFactor&, const PolyFactor&) = default;
};

/// Degree cap for factor_rational.
inline constexpr int kMaxFactorDegree = 8;

namespace detail {

using IntPoly = std::vector<Integer>;  // lowest degree first, primitive

inline IntPoly to_primitive(const RationalPoly& p) {
  Integer den = 1;
  for (const auto& c : p.coeffs()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  IntPoly out;
  Integer g = 0;
  for (const auto& c : p.coeffs()) {
    Integer v = c.get_num() * (den / c.get_den());
    out.push_back(v);
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
  }
  if (g != 0)
    for (auto& v : out) v /= g;
  if (!out.empty() && out.back() < 0)
    for (auto& v : out) v = -v;
  return out;
}

inline RationalPoly to_rational(const IntPoly& p) {
  std::vector<Rational> c;
  for (const auto& v : p) c.emplace_back(v);
  return RationalPoly(std::move(c));
}

inline Integer eval(const IntPoly& p, const Integer& x) {
  Integer r = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) r = r * x + *it;
  return r;
}

/// Positive divisors of |v| by trial division; nullopt when |v| is too large
/// for exhaustive search.
inline std::optional<std::vector<Integer>> positive_divisors(Integer v) {
  v = abs(v);
  if (v == 0) return std::nullopt;
  if (mpz_sizeinbase(v.get_mpz_t(), 2) > 40) return std::nullopt;
  std::vector<std::pair<Integer, unsigned>> primes;
  Integer n = v;
  for (Integer p = 2; p * p <= n; ++p) {
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e) primes.emplace_back(p, e);
  }
  if (n > 1) primes.emplace_back(n, 1);
  std::vector<Integer> divs{1};
  for (const auto& [p, e] : primes) {
    const std::size_t base = divs.size();
    Integer pk = 1;
    for (unsigned k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

/// Yun's algorithm: p (monic) = prod a_i^i with a_i squarefree, pairwise coprime.
inline std::vector<std::pair<RationalPoly, unsigned>> squarefree_decomposition(const RationalPoly& p) {
  std::vector<std::pair<RationalPoly, unsigned>> out;
  RationalPoly a = p.monic();
  if (a.degree() <= 0) return out;
  RationalPoly b = a.derivative();
  RationalPoly c = gcd(a, b);
  RationalPoly w = divmod(a, c).first;
  RationalPoly y = divmod(b, c).first;
  RationalPoly z = y - w.derivative();
  unsigned i = 1;
  while (w.degree() > 0) {
    RationalPoly g = gcd(w, z);
    if (g.degree() > 0) out.emplace_back(g.monic(), i);
    w = divmod(w, g).first;
    y = divmod(z, g).first;
    z = y - w.derivative();
    ++i;
  }
  return out;
}

/// Rational roots of a squarefree polynomial, via the p/q candidate test.
inline std::vector<Rational> rational_roots(const RationalPoly& p) {
  std::vector<Rational> roots;
  IntPoly f = to_primitive(p);
  if (f.empty()) return roots;
  std::size_t low = 0;
  while (f[low] == 0) ++low;
  if (low > 0) roots.push_back(0);
  IntPoly g(f.begin() + static_cast<std::ptrdiff_t>(low), f.end());
  if (g.size() <= 1) return roots;
  auto num = positive_divisors(g.front());
  auto den = positive_divisors(g.back());
  if (!num || !den) throw UnsupportedDegreeError("coefficients too large for rational-root search");
  RationalPoly gr = to_rational(g);
  for (const auto& a : *num)
    for (const auto& b : *den) {
      for (int s : {1, -1}) {
        Rational r(a * s, b);
        r.canonicalize();
        if (r.get_den() != b) continue;  // already tried in lower terms
        if (sgn(gr(r)) == 0) roots.push_back(r);
      }
    }
  std::sort(roots.begin(), roots.end());
  return roots;
}

/// Lagrange interpolation through (xs[j], ys[j]).
inline RationalPoly interpolate(const std::vector<Integer>& xs, const std::vector<Integer>& ys) {
  RationalPoly result;
  for (std::size_t j = 0; j < xs.size(); ++j) {
    RationalPoly basis = RationalPoly::constant(1);
    Rational denom = 1;
    for (std::size_t m = 0; m < xs.size(); ++m) {
      if (m == j) continue;
      basis = basis * RationalPoly::linear_root(Rational(xs[m]));
      denom *= Rational(xs[j] - xs[m]);
    }
    result = result + (Rational(ys[j]) / denom) * basis;
  }
  return result;
}

inline bool has_integer_coefficients(const RationalPoly& p) {
  for (const auto& c : p.coeffs())
    if (c.get_den() != 1) return false;
  return true;
}

/// Kronecker search for a factor of degree s of a primitive integer
/// polynomial without rational roots. Returns a monic factor or nullopt.
inline std::optional<RationalPoly> kronecker_factor(const RationalPoly& f, int s) {
  constexpr std::size_t kMaxCandidates = 4'000'000;
  IntPoly fi = to_primitive(f);
  // Pick the s + 1 sample points with the fewest divisors.
  struct Sample {
    Integer x;
    std::vector<Integer> divs;
  };
  std::vector<Sample> pool;
  for (long x = -12; x <= 12; ++x) {
    Integer v = eval(fi, Integer(x));
    if (v == 0) continue;
    auto d = positive_divisors(v);
    if (!d) continue;
    pool.push_back({Integer(x), std::move(*d)});
  }
  if (pool.size() < static_cast<std::size_t>(s + 1))
    throw UnsupportedDegreeError("coefficients too large for Kronecker factor search");
  std::stable_sort(pool.begin(), pool.end(),
                   [](const Sample& a, const Sample& b) { return a.divs.size() < b.divs.size(); });
  pool.resize(static_cast<std::size_t>(s + 1));

  std::size_t total = 1;
  for (std::size_t j = 0; j < pool.size(); ++j) {
    const std::size_t choices = pool[j].divs.size() * (j == 0 ? 1 : 2);
    if (total > kMaxCandidates / choices)
      throw UnsupportedDegreeError("Kronecker factor search exceeds the candidate budget");
    total *= choices;
  }

  std::vector<Integer> xs;
  for (const auto& smp : pool) xs.push_back(smp.x);
  std::vector<std::size_t> idx(pool.size(), 0);
  std::vector<Integer> ys(pool.size());
  // The first value is taken positive: g and -g give the same monic factor.
  while (true) {
    for (std::size_t j = 0; j < pool.size(); ++j) {
      const std::size_t nd = pool[j].divs.size();
      const std::size_t k = idx[j];
      ys[j] = (k < nd) ? pool[j].divs[k] : Integer(-pool[j].divs[k - nd]);
    }
    RationalPoly g = interpolate(xs, ys);
    if (g.degree() == s && has_integer_coefficients(g)) {
      if (divmod(f, g).second.is_zero()) return g.monic();
    }
    std::size_t j = 0;
    for (; j < pool.size(); ++j) {
      const std::size_t limit = pool[j].divs.size() * (j == 0 ? 1 : 2);
      if (++idx[j] < limit) break;
      idx[j] = 0;
    }
    if (j == pool.size()) break;
  }
  return std::nullopt;
}

inline void factor_squarefree_no_roots(const RationalPoly& f, std::vector<RationalPoly>& out) {
  if (f.degree() <= 3) {
    out.push_back(f.monic());
    return;
  }
  for (int s = 2; s <= f.degree() / 2; ++s) {
    if (auto g = kronecker_factor(f, s)) {
      factor_squarefree_no_roots(*g, out);
      factor_squarefree_no_roots(divmod(f, *g).first, out);
      return;
    }
  }
  out.push_back(f.monic());
}

}  // namespace detail

/// Factorization into monic irreducibles over Q with multiplicities, up to
/// the leading scalar of p. Factors are ordered by degree, then coefficients.
inline std::vector<PolyFactor> factor_rational(const RationalPoly& p) {
  if (p.is_zero()) throw InputError("cannot factor the zero polynomial");
  if (p.degree() > kMaxFactorDegree)
    throw UnsupportedDegreeError("factor_rational supports degree <= " + std::to_string(kMaxFactorDegree) +
                                 ", got " + std::to_string(p.degree()));
  std::vector<PolyFactor> out;
  for (const auto& [part, mult] : detail::squarefree_decomposition(p)) {
    RationalPoly rest = part;
    for (const auto& r : detail::rational_roots(part)) {
      out.push_back({RationalPoly::linear_root(r), mult});
      rest = divmod(rest, RationalPoly::linear_root(r)).first;
    }
    if (rest.degree() <= 0) continue;
    std::vector<RationalPoly> irreducibles;
    detail::factor_squarefree_no_roots(rest, irreducibles);
    for (auto& g : irreducibles) out.push_back({std::move(g), mult});
  }
  std::sort(out.begin(), out.end(), [](const PolyFactor& a, const PolyFactor& b) {
    if (a.factor.degree() != b.factor.degree()) return a.factor.degree() < b.factor.degree();
    return std::lexicographical_compare(a.factor.coeffs().begin(), a.factor.coeffs().end(),
                                        b.factor.coeffs().begin(), b.factor.coeffs().end());
  });
  return out;
}

/// Product of factor^multiplicity; equals p up to its leading coefficient.
inline RationalPoly expand(const std::vector<PolyFactor>& factors) {
  RationalPoly r = RationalPoly::constant(1);
  for (const auto& f : factors) r = r * pow(f.factor, f.multiplicity);
  return r;
}

}  // namespace symz
