// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <cstdlib>
#include <string>
#include <vector>

#include "symz/symz.hpp"

using namespace symz;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

// Each criterion appends failure notes to `why`; empty means pass.
struct Outcome {
  std::vector<std::string> why;
  void require(bool ok, const std::string& what) {
    if (!ok) why.push_back(what);
  }
};

// ---- brute-force oracle: all slot pairs, all basis tuples, own polarization and rank ----

Rational raw_value(const SymForm& f, const std::vector<std::size_t>& slots) {
  std::vector<unsigned> alpha(f.nvars(), 0);
  for (auto s : slots) ++alpha[s];
  Integer af = 1;
  for (auto e : alpha) af *= factorial(e);
  return f.coeff(MultiIndex{alpha}) * Rational(af) / Rational(factorial(f.degree()));
}

using Rows = std::vector<std::vector<Rational>>;

Rows brute_force_rows(const SymForm& f) {
  const std::size_t n = f.nvars();
  const unsigned d = f.degree();
  Rows rows;
  std::vector<std::size_t> t(d, 0);
  while (true) {
    for (unsigned p = 0; p < d; ++p)
      for (unsigned q = p + 1; q < d; ++q) {
        auto s = t;
        std::swap(s[p], s[q]);
        std::vector<Rational> row(n * n);
        for (std::size_t k = 0; k < n; ++k) {
          auto tk = t;
          tk[0] = k;
          auto sk = s;
          sk[0] = k;
          row[k * n + t[0]] += raw_value(f, tk);
          row[k * n + s[0]] -= raw_value(f, sk);
        }
        rows.push_back(std::move(row));
      }
    std::size_t i = 0;
    while (i < d && ++t[i] == n) t[i++] = 0;
    if (i == d) break;
  }
  return rows;
}

std::size_t row_rank(Rows m) {
  std::size_t r = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    for (std::size_t i = r + 1; i < m.size(); ++i) {
      if (m[i][c] == 0) continue;
      const Rational k = m[i][c] / m[r][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= k * m[r][j];
    }
    ++r;
  }
  return r;
}

// Production nullspace equals the oracle nullspace: same dimension, and every
// production vector is killed by every oracle row.
bool oracle_agrees(const SymForm& f, std::size_t* oracle_dim = nullptr) {
  const std::size_t n = f.nvars();
  const auto rows = brute_force_rows(f);
  const std::size_t dim = n * n - row_rank(rows);
  if (oracle_dim) *oracle_dim = dim;
  const auto basis = nullspace(constraint_matrix(f));
  if (basis.size() != dim) return false;
  for (const auto& v : basis)
    for (const auto& row : rows) {
      Rational s = 0;
      for (std::size_t j = 0; j < v.size(); ++j) s += row[j] * v[j];
      if (s != 0) return false;
    }
  return true;
}

// ---- elimination oracle for the order-(d-1) locus of a cubic ----
//
// The points in question are the common zeros of the partials. If the span of
// the quadrics contains a pure square u_k^2 then u_k = 0 on the locus; restrict
// and repeat. Ending with a single live variable and all quadrics zero proves
// the locus is exactly one point.

using Quadric = std::map<std::vector<unsigned>, Rational>;

std::vector<Quadric> partials(const SymForm& f) {
  const auto monos = f.monomials();
  std::vector<Quadric> out(f.nvars());
  for (std::size_t k = 0; k < monos.size(); ++k) {
    const Rational& c = f.coeffs()[k];
    if (c == 0) continue;
    for (std::size_t v = 0; v < f.nvars(); ++v) {
      std::vector<unsigned> a(monos[k].exponents.begin(), monos[k].exponents.end());
      if (a[v] == 0) continue;
      const unsigned e = a[v]--;
      out[v][a] += c * Rational(e);
    }
  }
  return out;
}

std::optional<Vector> unique_point_by_elimination(const SymForm& f) {
  const std::size_t n = f.nvars();
  std::vector<Quadric> qs = partials(f);
  std::vector<bool> live(n, true);
  std::size_t alive = n;
  while (alive > 1) {
    // Monomial index over live variables.
    std::vector<std::vector<unsigned>> monos;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) {
        if (!live[i] || !live[j]) continue;
        std::vector<unsigned> m(n, 0);
        ++m[i];
        ++m[j];
        monos.push_back(m);
      }
    Rows span;
    for (const auto& q : qs) {
      std::vector<Rational> row;
      for (const auto& m : monos) {
        auto it = q.find(m);
        row.push_back(it == q.end() ? Rational(0) : it->second);
      }
      span.push_back(row);
    }
    const std::size_t r = row_rank(span);
    std::optional<std::size_t> killed;
    for (std::size_t k = 0; k < n && !killed; ++k) {
      if (!live[k]) continue;
      std::vector<Rational> sq(monos.size());
      for (std::size_t i = 0; i < monos.size(); ++i)
        if (monos[i][k] == 2) sq[i] = 1;
      Rows with = span;
      with.push_back(sq);
      if (row_rank(with) == r) killed = k;
    }
    if (!killed) return std::nullopt;
    live[*killed] = false;
    --alive;
    for (auto& q : qs)
      std::erase_if(q, [&](const auto& kv) { return kv.first[*killed] > 0; });
  }
  for (const auto& q : qs)
    for (const auto& [m, c] : q)
      if (c != 0) return std::nullopt;
  Vector u(n);
  for (std::size_t i = 0; i < n; ++i)
    if (live[i]) u[i] = 1;
  return u;
}

int run_cli(const std::string& args) {
  const std::string cmd = std::string(SYMZ_CLI_PATH) + " " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

// ---- criteria ----

Outcome worked_binary() {
  Outcome o;
  const auto t0 = Clock::now();
  const SymForm f = parse_poly("x0^2*x1");
  const auto alg = symmetrizer_algebra(f);
  const auto nil = nilpotent_report(alg);
  const double secs = seconds_since(t0);
  std::size_t oracle_dim = 0;
  o.require(oracle_agrees(f, &oracle_dim) && oracle_dim == 2, "oracle disagrees or oracle dim != 2");
  o.require(alg.dim_total == 2 && alg.dim_torus == 0 && alg.dim_unipotent == 1, "dims != (2,0,1)");
  o.require(nil.classes_complete && nil.square_zero.size() == 1, "square-zero class not unique");
  if (nil.square_zero.size() == 1 && nil.square_zero[0].images.size() == 1) {
    const auto& img = nil.square_zero[0].images[0];
    o.require(img.point.coords() == Vector{Rational(0), Rational(1)}, "image != [0:1]");
    o.require(img.vanishing_order == 2, "vanishing order != 2");
    const Vector u{Rational(0), Rational(1)};
    for (std::size_t v = 0; v < 2; ++v)
      o.require(evaluate(f, {u, u, unit_vector(2, v)}) == 0, "F(u,u,v) != 0");
  } else {
    o.require(false, "expected exactly one image point");
  }
  o.require(secs < 0.1, "runtime " + std::to_string(secs) + " s");
  return o;
}

Outcome worked_ternary() {
  Outcome o;
  const auto t0 = Clock::now();
  const SymForm f = parse_poly("x0^2*x2 + x0*x1^2");
  const auto alg = symmetrizer_algebra(f);
  const auto nil = nilpotent_report(alg);
  const auto checks = run_checks(f);
  const double secs = seconds_since(t0);
  const Matrix h = regular_nilpotent(3);
  o.require(matrix_span_equal(alg.basis, {Matrix::identity(3), h, h * h}, 3), "basis != {I, h, h^2}");
  o.require(alg.dim_total == 3 && alg.dim_unipotent == 2, "dim g != 3 or dim g^+ != 2");
  o.require(nil.classes_complete && nil.square_zero.size() == 1, "square-zero class not unique");
  for (const auto& u : alg.unipotent_basis) o.require(power(u, 3).is_zero(), "f^3 != 0");
  const auto point = unique_point_by_elimination(f);
  o.require(point.has_value(), "elimination did not isolate one order-condition point");
  if (nil.square_zero.size() == 1) {
    const auto& c = nil.square_zero[0];
    o.require(c.image_dim == 1, "dim Im != 1");
    o.require(rank(c.element) == 1, "rank of the class element != 1");
    o.require(c.images.size() == 1 && point && c.images[0].point.coords() == *point,
              "image does not match the eliminated point");
    if (point) o.require(is_order_condition_point(f, *point), "point fails the order condition");
    // Count bound: classes <= points, here 1 <= 1.
    o.require(nil.square_zero.size() <= 1, "count bound");
  }
  for (const char* id : {"cube_zero", "square_zero_count_bound", "square_zero_image_rank_one"}) {
    const auto* c = checks.find(id);
    o.require(c && c->status == CheckStatus::pass, std::string(id) + " not passing");
  }
  o.require(secs < 0.5, "runtime " + std::to_string(secs) + " s");
  return o;
}

Outcome fermat() {
  Outcome o;
  for (std::size_t n : {2u, 3u, 4u})
    for (unsigned d : {3u, 4u}) {
      const std::string tag = "fermat(" + std::to_string(n) + "," + std::to_string(d) + "): ";
      const auto t0 = Clock::now();
      const SymForm f = generate(make_spec(GeneratorKind::fermat, n, d));
      const auto alg = symmetrizer_algebra(f);
      const auto st = st_decompose(alg);
      const double secs = seconds_since(t0);
      o.require(alg.dim_total == n && alg.dim_torus == n - 1 && alg.dim_unipotent == 0, tag + "dims");
      o.require(st && st->split_over_rationals && st->k() == n, tag + "block count");
      o.require(st && certify_st_decomposition(f, *st), tag + "certificate");
      o.require(secs < 1.0, tag + "runtime " + std::to_string(secs) + " s");
    }
  return o;
}

Outcome direct_sums() {
  Outcome o;
  const std::vector<std::vector<std::size_t>> layouts = {{1, 2}, {2, 1}, {2, 2}, {1, 3}, {1, 1, 3},
                                                         {2, 3}, {1, 2, 2}, {1, 1, 1}, {3, 2}, {1, 4}};
  std::size_t forms = 0;
  for (std::size_t i = 0; i < 20; ++i) {
    const auto& sizes = layouts[i % layouts.size()];
    std::size_t n = 0;
    for (auto s : sizes) n += s;
    const unsigned d = i < 10 ? 3 : 4;
    const SymForm f = generate(make_spec(GeneratorKind::st_sum, n, d, 1000 + i, 5, sizes));
    ++forms;
    // Embed each block's own algebra, computed from its restricted form.
    std::vector<Matrix> sum;
    std::size_t offset = 0;
    for (auto s : sizes) {
      Matrix basis(n, s);
      for (std::size_t j = 0; j < s; ++j) basis(offset + j, j) = 1;
      for (const auto& g : symmetrizer_algebra(pullback(f, basis)).basis) {
        Matrix big(n, n);
        for (std::size_t r = 0; r < s; ++r)
          for (std::size_t c = 0; c < s; ++c) big(offset + r, offset + c) = g(r, c);
        sum.push_back(big);
      }
      offset += s;
    }
    o.require(matrix_span_equal(symmetrizer_algebra(f).basis, sum, n), "seed " + std::to_string(1000 + i));
  }
  o.require(forms == 20, "expected 20 forms");
  return o;
}

Outcome fiber_round_trip() {
  Outcome o;
  const auto t0 = Clock::now();
  SplitMix64 rng(7);
  for (const auto& e : golden_corpus()) {
    const auto alg = symmetrizer_algebra(e.form);
    const bool nondeg = alg.nondegenerate;
    for (int trial = 0; trial < 20; ++trial) {
      const Matrix g = random_group_element(alg, rng);
      const SymForm fg = twist(e.form, g, true);
      o.require(matrix_span_equal(symmetrizer_algebra(fg).basis, alg.basis, e.form.nvars()), e.name + ": G differs");
      if (!nondeg) continue;
      o.require(grassmann_point(fg) == grassmann_point(e.form), e.name + ": J differs");
      o.require(recover_symmetrizer(e.form, fg) == g, e.name + ": recover != g");
    }
  }
  const double secs = seconds_since(t0);
  o.require(secs < 30.0, "runtime " + std::to_string(secs) + " s");
  return o;
}

Outcome genericity() {
  Outcome o;
  const auto t0 = Clock::now();
  std::size_t generic = 0, total = 0;
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    const SymForm f = generate(make_spec(GeneratorKind::random, 3, 3, seed, 10));
    if (!is_nondegenerate(f).nondegenerate) {
      o.require(false, "seed " + std::to_string(seed) + " is degenerate");
      continue;
    }
    ++total;
    generic += symmetrizer_algebra(f).dim_total == 1;
  }
  const double secs = seconds_since(t0);
  o.require(total == 100 && generic >= 99, std::to_string(generic) + "/" + std::to_string(total) + " with dim 1");
  o.require(secs < 60.0, "runtime " + std::to_string(secs) + " s");
  return o;
}

Outcome oracle_equivalence() {
  Outcome o;
  std::size_t compared = 0;
  for (const auto& e : golden_corpus()) {
    if (e.form.nvars() > 3 || e.form.degree() > 4) continue;
    ++compared;
    o.require(oracle_agrees(e.form), e.name);
  }
  o.require(compared >= 15, "only " + std::to_string(compared) + " corpus forms in range");
  return o;
}

Outcome negative_controls() {
  Outcome o;
  struct Cone {
    SymForm form;
    std::vector<std::size_t> dead;  // variables absent from the form
  };
  const std::vector<Cone> cones = {
      {parse_poly("x0^3", 2), {1}},
      {parse_poly("x0^2*x1", 3), {2}},
      {parse_poly("x0^4 + x0*x1^3", 3), {2}},
      {generate(make_spec(GeneratorKind::cone, 3, 3)), {2}},
      {generate(make_spec(GeneratorKind::cone, 4, 4, 3)), {3}},
  };
  for (const auto& c : cones) {
    const std::size_t n = c.form.nvars();
    const auto nd = is_nondegenerate(c.form);
    std::vector<Vector> expect;
    for (auto v : c.dead) expect.push_back(unit_vector(n, v));
    const std::string tag = print_poly(c.form) + ": ";
    o.require(!nd.nondegenerate, tag + "not flagged degenerate");
    o.require(span_equal(nd.kernel, expect, n), tag + "wrong kernel");
    for (const auto& k : nd.kernel) o.require(contract(c.form, k).is_zero(), tag + "kernel vector does not kill F");
  }
  o.require(run_cli("recover 'x0^2*x1' 'x0^3+x1^3'") == 4, "recover on distinct J did not exit 4");
  o.require(run_cli("recover 'x0^3+x1^3+x2^3' 'x0^3+x1^3+x0*x1*x2+x2^3'") == 4,
            "recover on distinct J (n=3) did not exit 4");
  o.require(run_cli("recover 'x0^2*x1' 'x0^2*x1 + x0^3'") == 0, "recover on a shared fiber failed");
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"1 worked example x0^2*x1", worked_binary},
      {"2 worked example x0^2*x2 + x0*x1^2", worked_ternary},
      {"3 Fermat forms split into n certified blocks", fermat},
      {"4 direct sums have the block-sum algebra", direct_sums},
      {"5 fiber round trip on the golden corpus", fiber_round_trip},
      {"6 genericity of random ternary cubics", genericity},
      {"7 oracle equivalence on the golden corpus", oracle_equivalence},
      {"8 negative controls", negative_controls},
  };
  int failed = 0;
  for (const auto& [name, fn] : criteria) {
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o.why.push_back(std::string("exception: ") + e.what());
    }
    if (o.why.empty()) {
      std::cout << "PASS " << name << '\n';
    } else {
      ++failed;
      std::cout << "FAIL " << name << ":";
      for (const auto& w : o.why) std::cout << " [" << w << "]";
      std::cout << '\n';
    }
  }
  return failed ? 1 : 0;
}
