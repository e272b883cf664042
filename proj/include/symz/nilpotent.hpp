#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <vector>

#include "symz/factor.hpp"
#include "symz/symmetrizer.hpp"

namespace symz {

struct ImagePoint {
  ProjectivePoint point;
  unsigned vanishing_order = 0;
};

/// A projective class [h] in P(g^+) with h^2 = 0, h != 0.
struct SquareZeroClass {
  Vector coords;  // over the g^+ basis, first nonzero entry 1
  Matrix element;
  std::size_t image_dim = 0;
  std::vector<ImagePoint> images;  // one per reduced basis vector of Im(h)
};

struct NilpotentReport {
  std::vector<SquareZeroClass> square_zero;
  // True when the classes above are all square-zero classes of P(g^+):
  // exhaustive search for dim g^+ <= 2 with only rational solutions.
  bool classes_complete = true;
  bool infinitely_many_classes = false;
  std::size_t irrational_classes = 0;  // conjugate non-rational solutions seen
  unsigned max_nilpotency_index = 0;
  bool cube_zero_all = true;   // f^3 = 0 for every g^+ basis element
  bool cube_zero_span = true;  // f_i f_j f_k = 0 for all basis triples, i.e. f^3 = 0 on all of g^+
};

namespace detail {

inline Matrix combine(const std::vector<Matrix>& basis, const Vector& coords) {
  Matrix m(basis.front().rows(), basis.front().cols());
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (sgn(coords[i]) != 0) m += basis[i] * coords[i];
  return m;
}

inline void add_class(std::vector<Vector>& classes, Vector coords) {
  coords = normalize_leading(std::move(coords));
  if (std::find(classes.begin(), classes.end(), coords) == classes.end()) classes.push_back(std::move(coords));
}

}  // namespace detail

/// Square-zero elements of g^+ and the points of Z(F) they force.
///
/// Always includes h = f^(l-1) for each g^+ basis element f of nilpotency
/// index l. When dim g^+ <= 2 the equation h^2 = 0 is solved exactly on
/// P(g^+); above that only the power construction is reported and
/// classes_complete is false.
inline NilpotentReport nilpotent_report(const SymmetrizerAlgebra& alg) {
  if (!alg.nondegenerate) throw DegenerateFormError("nilpotent report needs a nondegenerate form", alg.kernel);
  NilpotentReport rep;
  const auto& u = alg.unipotent_basis;
  const std::size_t m = u.size();
  if (m == 0) return rep;
  const std::size_t n = alg.n();
  const auto flat_u = flatten_all(u);

  std::vector<Vector> classes;
  for (const auto& f : u) {
    const auto l = nilpotency_index(f);
    if (!l || *l < 2) throw InvariantViolation("g^+ basis element is zero or not nilpotent");
    rep.max_nilpotency_index = std::max(rep.max_nilpotency_index, *l);
    const Matrix h = power(f, *l - 1);
    auto c = coordinates(flat_u, h.flat());
    if (!c) throw InvariantViolation("power of a g^+ element left g^+");
    detail::add_class(classes, std::move(*c));
  }
  {
    // A generic element attains the largest index in a commutative nilpotent algebra.
    SplitMix64 rng(m * 7919 + n);
    Vector c(m);
    for (auto& x : c) x = rng.symmetric(5) + (rng.next() % 2 ? 11 : -11);
    if (auto l = nilpotency_index(detail::combine(u, c))) rep.max_nilpotency_index = std::max(rep.max_nilpotency_index, *l);
  }

  if (m == 1) {
    rep.classes_complete = true;
  } else if (m == 2) {
    // h = a f1 + f2 (b = 1) and h = f1 (b = 0).
    const Matrix a2 = u[0] * u[0];
    const Matrix ab = u[0] * u[1] + u[1] * u[0];
    const Matrix b2 = u[1] * u[1];
    if (a2.is_zero()) detail::add_class(classes, Vector{1, 0});
    RationalPoly common;
    bool any = false;
    for (std::size_t e = 0; e < n * n; ++e) {
      RationalPoly p({b2.flat()[e], ab.flat()[e], a2.flat()[e]});
      if (p.is_zero()) continue;
      common = any ? gcd(common, p) : p.monic();
      any = true;
    }
    if (!any) {
      rep.infinitely_many_classes = true;
      rep.classes_complete = false;
    } else if (common.degree() > 0) {
      for (const auto& pf : factor_rational(common)) {
        if (pf.factor.degree() == 1)
          detail::add_class(classes, Vector{-pf.factor.coeff(0), 1});
        else
          rep.irrational_classes += static_cast<std::size_t>(pf.factor.degree());
      }
      rep.classes_complete = rep.irrational_classes == 0;
    }
  } else {
    rep.classes_complete = false;
  }

  for (auto& c : classes) {
    SquareZeroClass sz;
    sz.element = detail::combine(u, c);
    if (sz.element.is_zero() || !(sz.element * sz.element).is_zero())
      throw InvariantViolation("reported square-zero element is zero or squares to nonzero");
    sz.coords = std::move(c);
    const auto image = column_space(sz.element);
    sz.image_dim = image.size();
    for (const auto& v : image) {
      if (!is_order_condition_point(alg.form, v))
        throw InvariantViolation("image of a square-zero symmetrizer misses the order condition");
      sz.images.push_back({ProjectivePoint(v), vanishing_order(alg.form, v)});
    }
    rep.square_zero.push_back(std::move(sz));
  }

  for (std::size_t i = 0; i < m; ++i) {
    const Matrix sq = u[i] * u[i];
    if (!(sq * u[i]).is_zero()) rep.cube_zero_all = false;
    for (std::size_t j = i; j < m; ++j)
      for (std::size_t k = j; k < m; ++k)
        if (!(u[i] * u[j] * u[k]).is_zero()) rep.cube_zero_span = false;
  }
  return rep;
}

enum class LocusFiniteness { finite, infinite, unknown };

inline const char* to_string(LocusFiniteness f) {
  switch (f) {
    case LocusFiniteness::finite: return "finite";
    case LocusFiniteness::infinite: return "infinite";
    default: return "unknown";
  }
}

namespace detail {

/// Whether the binary quadratics [c_ss, c_st, c_tt] share a zero on P^1.
/// nullopt when they all vanish identically.
inline std::optional<bool> binary_quadratics_share_root(const std::vector<std::array<Rational, 3>>& qs) {
  bool all_zero = true;
  bool root_at_infinity = true;  // [s:t] = [1:0]
  RationalPoly common;
  bool any = false;
  for (const auto& q : qs) {
    if (sgn(q[0]) != 0 || sgn(q[1]) != 0 || sgn(q[2]) != 0) all_zero = false;
    if (sgn(q[0]) != 0) root_at_infinity = false;
    RationalPoly p({q[2], q[1], q[0]});  // t = 1
    if (p.is_zero()) continue;
    common = any ? gcd(common, p) : p.monic();
    any = true;
  }
  if (all_zero) return std::nullopt;
  return root_at_infinity || !any || common.degree() > 0;
}

}  // namespace detail

/// Decides whether {[u] : F(u, u, v1, ..., v_{d-2}) = 0 for all v} is finite.
/// Exact for n = 2. For n = 3 a line missing the locus proves finiteness
/// (every curve meets every line) and a line inside it proves infiniteness;
/// random lines are tried, after the one-conic case. Larger n reports unknown.
inline LocusFiniteness order_locus_finiteness(const SymForm& f, std::uint64_t seed = 1) {
  const std::size_t n = f.nvars();
  if (f.degree() < 2) throw InputError("order locus needs degree >= 2");
  if (n > 3) return LocusFiniteness::unknown;
  const auto table = detail::double_contractions(f);
  const std::size_t terms = monomial_count(n, f.degree() - 2);
  // Quadratic form Q_beta(u) = F(u, u, e^beta) up to a positive factor per beta.
  auto restrict_to_line = [&](const Vector& p, const Vector& q) {
    std::vector<std::array<Rational, 3>> qs(terms);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        const auto& c = table[a * n + b].coeffs();
        for (std::size_t t = 0; t < terms; ++t) {
          if (sgn(c[t]) == 0) continue;
          qs[t][0] += p[a] * p[b] * c[t];
          qs[t][1] += (p[a] * q[b] + q[a] * p[b]) * c[t];
          qs[t][2] += q[a] * q[b] * c[t];
        }
      }
    return detail::binary_quadratics_share_root(qs);
  };
  if (n == 2) {
    auto shared = restrict_to_line(unit_vector(2, 0), unit_vector(2, 1));
    return shared.has_value() ? LocusFiniteness::finite : LocusFiniteness::infinite;
  }
  {
    // A single conic (up to scale) has infinitely many complex points.
    std::vector<Vector> quadrics(terms, Vector(n * n));
    for (std::size_t e = 0; e < n * n; ++e)
      for (std::size_t t = 0; t < terms; ++t) quadrics[t][e] = table[e].coeffs()[t];
    if (span_dimension(quadrics, n * n) <= 1) return LocusFiniteness::infinite;
  }
  SplitMix64 rng(seed);
  for (int attempt = 0; attempt < 6; ++attempt) {
    Vector p(n), q(n);
    for (auto& x : p) x = rng.symmetric(7);
    for (auto& x : q) x = rng.symmetric(7);
    if (span_dimension({p, q}, n) < 2) continue;
    auto shared = restrict_to_line(p, q);
    if (!shared) return LocusFiniteness::infinite;
    if (!*shared) return LocusFiniteness::finite;
  }
  return LocusFiniteness::unknown;
}

}  // namespace symz
