#pragma once

#include <optional>

#include "symz/poly.hpp"

namespace symz {

/// Additive Jordan-Chevalley split A = S + N with S semisimple, N nilpotent,
/// SN = NS. `s_poly` is a polynomial with S = s_poly(A).
struct JordanChevalley {
  Matrix semisimple;
  Matrix nilpotent;
  RationalPoly s_poly;
};

/// Newton iteration in Q[x]/(mu), mu the minimal polynomial of A:
/// s <- s - P(s) * P'(s)^{-1} with P the squarefree part of mu. Starting from
/// s = x, P(s) becomes 0 mod mu after ceil(log2 n) steps (quadratic
/// convergence in the P-adic filtration).
inline JordanChevalley jordan_chevalley(const Matrix& a) {
  if (!a.square()) throw InputError("Jordan-Chevalley split of a non-square matrix");
  const RationalPoly mu = minimal_polynomial(a);
  const RationalPoly p = squarefree_part(mu);
  const RationalPoly dp = p.derivative();
  RationalPoly s = RationalPoly::x() % mu;
  int steps = 0;
  while (!compose_mod(p, s, mu).is_zero()) {
    if (++steps > 64) throw InvariantViolation("Jordan-Chevalley Newton iteration did not converge");
    const RationalPoly ps = compose_mod(p, s, mu);
    const RationalPoly inv = inverse_mod(compose_mod(dp, s, mu), mu);
    s = (s - ps * inv) % mu;
  }
  JordanChevalley out;
  out.s_poly = s;
  out.semisimple = s(a);
  out.nilpotent = a - out.semisimple;
  return out;
}

/// Smallest l with A^l = 0. The zero matrix has index 1; non-nilpotent
/// matrices give nullopt.
inline std::optional<unsigned> nilpotency_index(const Matrix& a) {
  if (!a.square()) throw InputError("nilpotency index of a non-square matrix");
  Matrix p = a;
  for (unsigned l = 1; l <= a.rows(); ++l) {
    if (p.is_zero()) return l;
    p = p * a;
  }
  return std::nullopt;
}

inline bool is_nilpotent(const Matrix& a) { return nilpotency_index(a).has_value(); }

inline bool is_semisimple(const Matrix& a) { return is_squarefree(minimal_polynomial(a)); }

}  // namespace symz
