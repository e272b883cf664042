#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "symz/nilpotent.hpp"
#include "symz/st_decompose.hpp"

namespace symz {

enum class CheckStatus { pass, fail, skipped };

inline const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    default: return "skipped";
  }
}

struct CheckResult {
  std::string id;
  CheckStatus status = CheckStatus::pass;
  std::string detail;  // counterexample for fail, reason for skipped
};

struct VerifyOptions {
  std::uint64_t seed = 1;
  int trials = 5;
  // Finiteness of the order-(d-1) locus. Unset: try to certify it.
  std::optional<bool> assume_finite;
};

struct VerifyReport {
  std::vector<CheckResult> checks;
  LocusFiniteness locus = LocusFiniteness::unknown;

  bool any_failed() const {
    for (const auto& c : checks)
      if (c.status == CheckStatus::fail) return true;
    return false;
  }
  const CheckResult* find(std::string_view id) const {
    for (const auto& c : checks)
      if (c.id == id) return &c;
    return nullptr;
  }
};

namespace detail {

class CheckList {
 public:
  void pass(std::string id) { out_.push_back({std::move(id), CheckStatus::pass, {}}); }
  void fail(std::string id, std::string why) { out_.push_back({std::move(id), CheckStatus::fail, std::move(why)}); }
  void skip(std::string id, std::string why) { out_.push_back({std::move(id), CheckStatus::skipped, std::move(why)}); }
  void expect(std::string id, bool ok, std::string why) {
    if (ok)
      pass(std::move(id));
    else
      fail(std::move(id), std::move(why));
  }
  std::vector<CheckResult> take() { return std::move(out_); }

 private:
  std::vector<CheckResult> out_;
};

}  // namespace detail

/// Runs every applicable check on one form. Checks whose hypotheses do not
/// hold (degenerate form, g^x = 0, unknown finiteness, ...) are skipped with
/// a reason; any failure is a counterexample and therefore an engine bug.
inline VerifyReport run_checks(const SymForm& f, const VerifyOptions& opts = {}) {
  VerifyReport rep;
  detail::CheckList out;
  const std::size_t n = f.nvars();
  const unsigned d = f.degree();
  SplitMix64 rng(opts.seed);
  const SymmetrizerAlgebra alg = symmetrizer_algebra(f);
  const std::string nondeg_reason = "form is degenerate";

  {
    std::string why;
    for (std::size_t i = 0; i < alg.basis.size() && why.empty(); ++i)
      if (auto v = find_symmetry_violation(f, alg.basis[i])) why = "basis element " + std::to_string(i) + ": " + describe(*v);
    out.expect("symmetrizer_soundness", why.empty(), why);
  }
  out.expect("identity_in_algebra", alg.contains_identity, "Id not in span");
  {
    const auto closure = algebra_closure_check(alg);
    std::string why, comm;
    for (const auto& p : closure.pairs) {
      if (!p.product_in_span && why.empty())
        why = "g" + std::to_string(p.i) + " g" + std::to_string(p.j) + " outside span";
      if (p.commutes && !*p.commutes && comm.empty())
        comm = "g" + std::to_string(p.i) + " g" + std::to_string(p.j) + " != g" + std::to_string(p.j) + " g" +
               std::to_string(p.i);
    }
    out.expect("closure", closure.closed, why);
    if (alg.nondegenerate)
      out.expect("commutativity", *closure.commutative, comm);
    else
      out.skip("commutativity", nondeg_reason);
  }
  {
    std::string why;
    std::vector<Matrix> hs = alg.basis;
    for (int t = 0; t < opts.trials; ++t) {
      Matrix h(n, n);
      for (const auto& b : alg.basis) h += b * Rational(rng.symmetric(3));
      hs.push_back(std::move(h));
    }
    for (std::size_t i = 0; i < hs.size() && why.empty(); ++i)
      if (!kernel_image_vanishing(f, hs[i])) why = "h = " + to_string(hs[i]);
    out.expect("kernel_image_vanishing", why.empty(), why);
  }
  std::vector<Matrix> group;
  for (int t = 0; t < opts.trials; ++t) group.push_back(random_group_element(alg, rng));
  {
    std::string why;
    for (std::size_t t = 0; t < group.size() && why.empty(); ++t) {
      const Matrix& g = group[t];
      const Matrix& h = group[(t + 1) % group.size()];
      if (!is_symmetrizer(f, *inverse(g))) why = "inverse of " + to_string(g);
      else if (!is_symmetrizer(f, g * h)) why = "product " + to_string(g) + " * " + to_string(h);
    }
    out.expect("group_inverse_product", why.empty(), why);
  }

  std::optional<STDecomposition> st;
  if (alg.nondegenerate && alg.dim_torus > 0) st = st_decompose(alg);
  if (!alg.nondegenerate) {
    out.skip("direct_sum_algebra", nondeg_reason);
  } else if (!st) {
    out.skip("direct_sum_algebra", "no Sebastiani-Thom splitting found (g^x = 0)");
  } else if (!st->split_over_rationals) {
    out.skip("direct_sum_algebra", "weight spaces are not defined over Q");
  } else {
    out.expect("direct_sum_algebra", matrix_span_equal(block_direct_sum_algebra(*st, n), alg.basis, n),
               "block algebras do not sum to g_F");
  }

  {
    std::string why, transport;
    for (const auto& g : group) {
      const auto r = fiber_invariance_check(f, g);
      if (!r.all_pass() && why.empty()) why = "g = " + to_string(g);
      if (alg.nondegenerate && transport.empty()) {
        const Matrix back = recover_symmetrizer(f, twist(f, g));
        if (!(back == g)) transport = "g = " + to_string(g) + " recovered as " + to_string(back);
      }
    }
    out.expect("twist_invariance", why.empty(), why);
    if (alg.nondegenerate)
      out.expect("fiber_transport", transport.empty(), transport);
    else
      out.skip("fiber_transport", nondeg_reason);
  }

  if (!alg.nondegenerate) {
    out.skip("torus_split", nondeg_reason);
  } else if (alg.dim_torus == 0) {
    out.skip("torus_split", "g^x = 0");
  } else {
    const bool ok = st && (st->split_over_rationals ? certify_st_decomposition(f, *st)
                                                    : st->complex_block_count() >= 2 &&
                                                          is_symmetrizer(f, st->splitting_element) &&
                                                          is_semisimple(st->splitting_element));
    out.expect("torus_split", ok, "no certified splitting from a semisimple element");
  }

  std::optional<NilpotentReport> nil;
  if (alg.nondegenerate && alg.dim_unipotent > 0) nil = nilpotent_report(alg);
  if (!nil) {
    out.skip("square_zero_singular", alg.nondegenerate ? "g^+ = 0" : nondeg_reason);
  } else {
    std::string why = nil->square_zero.empty() ? "no square-zero element found" : "";
    for (const auto& sz : nil->square_zero)
      for (const auto& img : sz.images)
        if (!is_order_condition_point(f, img.point.coords()) && why.empty())
          why = "F(u, u, ...) != 0 at " + to_string(img.point);
    out.expect("square_zero_singular", why.empty(), why);
  }

  // A nontrivial fiber without a torus part forces a point with
  // F(u, u, v_1, ..., v_{d-2}) = 0 shared by every form in the fiber.
  if (!alg.nondegenerate) {
    out.skip("nontrivial_fiber_singular_point", nondeg_reason);
  } else if (alg.dim_total == 1) {
    out.skip("nontrivial_fiber_singular_point", "fiber is C^x F");
  } else if (!nil) {
    out.skip("nontrivial_fiber_singular_point", "g^+ = 0");
  } else {
    std::string why = "no witness point";
    if (!nil->square_zero.empty() && !nil->square_zero[0].images.empty()) {
      const Vector& u = nil->square_zero[0].images[0].point.coords();
      why.clear();
      for (const auto& g : group)
        if (!is_order_condition_point(twist(f, g), u) && why.empty())
          why = "point " + to_string(ProjectivePoint(u)) + " fails for F^g, g = " + to_string(g);
    }
    out.expect("nontrivial_fiber_singular_point", why.empty(), why);
  }

  if (alg.nondegenerate && alg.dim_unipotent > 0) rep.locus = order_locus_finiteness(f, opts.seed);
  const bool finite = opts.assume_finite ? *opts.assume_finite : rep.locus == LocusFiniteness::finite;
  std::string finite_reason;
  if (!alg.nondegenerate)
    finite_reason = nondeg_reason;
  else if (!nil)
    finite_reason = "g^+ = 0";
  else if (!finite)
    finite_reason = opts.assume_finite ? "finiteness not assumed"
                                       : std::string("finiteness of the order-") + std::to_string(d - 1) +
                                             " locus is " + to_string(rep.locus);
  if (!finite_reason.empty()) {
    for (const char* id : {"square_zero_image_rank_one", "square_zero_count_bound", "cube_zero"})
      out.skip(id, finite_reason);
  } else {
    std::string rank_why, count_why;
    std::vector<ProjectivePoint> seen;
    for (const auto& sz : nil->square_zero) {
      if (sz.image_dim != 1 && rank_why.empty()) rank_why = "dim Im(h) = " + std::to_string(sz.image_dim);
      if (sz.images.empty()) continue;
      const ProjectivePoint& p = sz.images[0].point;
      if (std::find(seen.begin(), seen.end(), p) != seen.end() && count_why.empty())
        count_why = "two square-zero classes share the image " + to_string(p);
      if (!is_order_condition_point(f, p.coords()) && count_why.empty())
        count_why = "image " + to_string(p) + " misses the order condition";
      seen.push_back(p);
    }
    out.expect("square_zero_image_rank_one", rank_why.empty(), rank_why);
    out.expect("square_zero_count_bound", count_why.empty(), count_why);
    out.expect("cube_zero", nil->cube_zero_all && nil->cube_zero_span, "some f in g^+ has f^3 != 0");
  }

  rep.checks = out.take();
  return rep;
}

}  // namespace symz
