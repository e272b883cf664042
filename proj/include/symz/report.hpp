#pragma once

// JSON rendering of analysis results. Every rational is a string "p" or
// "p/q"; no floating-point token is ever produced.

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "symz/corpus.hpp"
#include "symz/poly_text.hpp"
#include "symz/verify.hpp"

namespace symz {

using Json = nlohmann::ordered_json;

inline constexpr int kReportSchema = 1;

struct AnalysisReport {
  SymForm form;
  bool nondegenerate = false;
  std::vector<Vector> kernel;
  std::size_t dim_g = 0;
  std::optional<std::size_t> dim_torus;  // unset for degenerate forms
  std::optional<std::size_t> dim_unipotent;
  std::vector<Matrix> basis;
  std::vector<Matrix> unipotent_basis;
  std::optional<STDecomposition> st_blocks;
  std::optional<NilpotentReport> nilpotent;
  LocusFiniteness locus = LocusFiniteness::unknown;
  std::vector<CheckResult> checks;
};

inline AnalysisReport analyze(const SymForm& f, const VerifyOptions& opts = {}) {
  AnalysisReport rep;
  rep.form = f;
  const auto alg = symmetrizer_algebra(f);
  rep.nondegenerate = alg.nondegenerate;
  rep.kernel = alg.kernel;
  rep.dim_g = alg.dim_total;
  rep.basis = alg.basis;
  if (alg.nondegenerate) {
    rep.dim_torus = alg.dim_torus;
    rep.dim_unipotent = alg.dim_unipotent;
    rep.unipotent_basis = alg.unipotent_basis;
    rep.st_blocks = st_decompose(alg);
    rep.nilpotent = nilpotent_report(alg);
  }
  auto v = run_checks(f, opts);
  rep.locus = v.locus;
  rep.checks = std::move(v.checks);
  return rep;
}

// ---- primitives ----

inline Json rational_json(const Rational& r) { return to_string(r); }

inline Rational rational_from_json(const Json& j) {
  if (!j.is_string()) throw InputError("rational must be a JSON string");
  return parse_rational(j.get<std::string>());
}

inline Json vector_json(const Vector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(rational_json(x));
  return out;
}

inline Vector vector_from_json(const Json& j) {
  Vector v;
  for (const auto& x : j) v.push_back(rational_from_json(x));
  return v;
}

inline Json matrix_json(const Matrix& m) {
  Json out = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(vector_json(m.row_vector(i)));
  return out;
}

inline Matrix matrix_from_json(const Json& j) {
  std::vector<Vector> rows;
  for (const auto& r : j) rows.push_back(vector_from_json(r));
  const std::size_t cols = rows.empty() ? 0 : rows[0].size();
  return Matrix::from_rows(rows, cols);
}

template <class T, class F>
Json list_json(const std::vector<T>& xs, F f) {
  Json out = Json::array();
  for (const auto& x : xs) out.push_back(f(x));
  return out;
}

template <class T, class F>
std::vector<T> list_from_json(const Json& j, F f) {
  std::vector<T> out;
  for (const auto& x : j) out.push_back(f(x));
  return out;
}

inline Json form_json(const SymForm& f) {
  return Json{{"nvars", f.nvars()}, {"degree", f.degree()}, {"coeffs", vector_json(f.coeffs())}};
}

inline SymForm form_from_json(const Json& j) {
  return SymForm(j.at("nvars").get<std::size_t>(), j.at("degree").get<unsigned>(), vector_from_json(j.at("coeffs")));
}

// ---- composite pieces ----

inline Json st_json(const STDecomposition& st) {
  Json blocks = Json::array();
  for (const auto& b : st.blocks)
    blocks.push_back({{"basis", list_json(b.basis, vector_json)},
                      {"form", form_json(b.form)},
                      {"eigen_factor", vector_json(b.eigen_factor.coeffs())},
                      {"eigen_factor_text", to_string(b.eigen_factor)}});
  return Json{{"k", st.k()},
              {"split_over_rationals", st.split_over_rationals},
              {"complex_block_count", st.complex_block_count()},
              {"splitting_element", matrix_json(st.splitting_element)},
              {"blocks", blocks}};
}

inline STDecomposition st_from_json(const Json& j) {
  STDecomposition st;
  st.splitting_element = matrix_from_json(j.at("splitting_element"));
  st.split_over_rationals = j.at("split_over_rationals").get<bool>();
  for (const auto& b : j.at("blocks"))
    st.blocks.push_back({list_from_json<Vector>(b.at("basis"), vector_from_json), form_from_json(b.at("form")),
                         RationalPoly(vector_from_json(b.at("eigen_factor")))});
  return st;
}

inline Json nilpotent_json(const NilpotentReport& r) {
  Json classes = Json::array();
  for (const auto& sz : r.square_zero) {
    Json images = Json::array();
    for (const auto& img : sz.images)
      images.push_back({{"point", vector_json(img.point.coords())},
                        {"text", to_string(img.point)},
                        {"vanishing_order", img.vanishing_order}});
    classes.push_back({{"coords", vector_json(sz.coords)},
                       {"element", matrix_json(sz.element)},
                       {"image_dim", sz.image_dim},
                       {"images", images}});
  }
  return Json{{"square_zero", classes},
              {"classes_complete", r.classes_complete},
              {"infinitely_many_classes", r.infinitely_many_classes},
              {"irrational_classes", r.irrational_classes},
              {"max_nilpotency_index", r.max_nilpotency_index},
              {"cube_zero_all", r.cube_zero_all},
              {"cube_zero_span", r.cube_zero_span}};
}

inline NilpotentReport nilpotent_from_json(const Json& j) {
  NilpotentReport r;
  for (const auto& c : j.at("square_zero")) {
    SquareZeroClass sz;
    sz.coords = vector_from_json(c.at("coords"));
    sz.element = matrix_from_json(c.at("element"));
    sz.image_dim = c.at("image_dim").get<std::size_t>();
    for (const auto& img : c.at("images"))
      sz.images.push_back({ProjectivePoint(vector_from_json(img.at("point"))), img.at("vanishing_order").get<unsigned>()});
    r.square_zero.push_back(std::move(sz));
  }
  r.classes_complete = j.at("classes_complete").get<bool>();
  r.infinitely_many_classes = j.at("infinitely_many_classes").get<bool>();
  r.irrational_classes = j.at("irrational_classes").get<std::size_t>();
  r.max_nilpotency_index = j.at("max_nilpotency_index").get<unsigned>();
  r.cube_zero_all = j.at("cube_zero_all").get<bool>();
  r.cube_zero_span = j.at("cube_zero_span").get<bool>();
  return r;
}

inline CheckStatus parse_check_status(const std::string& s) {
  for (auto c : {CheckStatus::pass, CheckStatus::fail, CheckStatus::skipped})
    if (s == to_string(c)) return c;
  throw InputError("unknown check status '" + s + "'");
}

inline Json checks_json(const std::vector<CheckResult>& checks) {
  Json out = Json::object();
  for (const auto& c : checks) {
    Json entry{{"status", to_string(c.status)}};
    if (c.status == CheckStatus::fail) entry["detail"] = c.detail;
    if (c.status == CheckStatus::skipped) entry["reason"] = c.detail;
    out[c.id] = entry;
  }
  return out;
}

inline std::vector<CheckResult> checks_from_json(const Json& j) {
  std::vector<CheckResult> out;
  for (auto it = j.begin(); it != j.end(); ++it) {
    CheckResult c{it.key(), parse_check_status(it.value().at("status").get<std::string>()), {}};
    if (it.value().contains("detail")) c.detail = it.value()["detail"].get<std::string>();
    if (it.value().contains("reason")) c.detail = it.value()["reason"].get<std::string>();
    out.push_back(std::move(c));
  }
  return out;
}

inline LocusFiniteness parse_locus_finiteness(const std::string& s) {
  for (auto l : {LocusFiniteness::finite, LocusFiniteness::infinite, LocusFiniteness::unknown})
    if (s == to_string(l)) return l;
  throw InputError("unknown finiteness value '" + s + "'");
}

// ---- report ----

inline Json to_json(const AnalysisReport& r) {
  Json j;
  j["schema"] = kReportSchema;
  j["polynomial"] = print_poly(r.form);
  j["nvars"] = r.form.nvars();
  j["degree"] = r.form.degree();
  j["nondegenerate"] = r.nondegenerate;
  j["kernel"] = list_json(r.kernel, vector_json);
  j["dim_g"] = r.dim_g;
  j["dim_torus"] = r.dim_torus ? Json(*r.dim_torus) : Json();
  j["dim_unipotent"] = r.dim_unipotent ? Json(*r.dim_unipotent) : Json();
  j["basis"] = list_json(r.basis, matrix_json);
  j["unipotent_basis"] = list_json(r.unipotent_basis, matrix_json);
  j["st_blocks"] = r.st_blocks ? st_json(*r.st_blocks) : Json();
  j["nilpotent"] = r.nilpotent ? nilpotent_json(*r.nilpotent) : Json();
  j["order_locus"] = to_string(r.locus);
  j["checks"] = checks_json(r.checks);
  return j;
}

inline AnalysisReport report_from_json(const Json& j) {
  if (j.at("schema").get<int>() != kReportSchema) throw InputError("unsupported report schema");
  AnalysisReport r;
  r.form = parse_poly(j.at("polynomial").get<std::string>(), j.at("nvars").get<std::size_t>());
  if (r.form.degree() != j.at("degree").get<unsigned>()) throw InputError("degree does not match the polynomial");
  r.nondegenerate = j.at("nondegenerate").get<bool>();
  r.kernel = list_from_json<Vector>(j.at("kernel"), vector_from_json);
  r.dim_g = j.at("dim_g").get<std::size_t>();
  if (!j.at("dim_torus").is_null()) r.dim_torus = j["dim_torus"].get<std::size_t>();
  if (!j.at("dim_unipotent").is_null()) r.dim_unipotent = j["dim_unipotent"].get<std::size_t>();
  r.basis = list_from_json<Matrix>(j.at("basis"), matrix_from_json);
  r.unipotent_basis = list_from_json<Matrix>(j.at("unipotent_basis"), matrix_from_json);
  if (!j.at("st_blocks").is_null()) r.st_blocks = st_from_json(j["st_blocks"]);
  if (!j.at("nilpotent").is_null()) r.nilpotent = nilpotent_from_json(j["nilpotent"]);
  r.locus = parse_locus_finiteness(j.at("order_locus").get<std::string>());
  r.checks = checks_from_json(j.at("checks"));
  return r;
}

// ---- corpus specs and census rows ----

inline Json spec_json(const GeneratorSpec& s) {
  Json j{{"kind", to_string(s.kind)},
         {"nvars", s.nvars},
         {"degree", s.degree},
         {"seed", s.seed},
         {"bound", s.coefficient_bound}};
  if (!s.block_sizes.empty()) j["blocks"] = s.block_sizes;
  if (s.nilpotent) j["nilpotent"] = matrix_json(*s.nilpotent);
  return j;
}

/// One spec object, or several when it carries "count": seeds seed,
/// seed + 1, ..., seed + count - 1.
inline std::vector<GeneratorSpec> specs_from_json(const Json& j) {
  if (j.is_array()) {
    std::vector<GeneratorSpec> out;
    for (const auto& e : j) {
      auto part = specs_from_json(e);
      out.insert(out.end(), part.begin(), part.end());
    }
    return out;
  }
  if (!j.is_object()) throw InvalidSpecError("spec must be a JSON object or array");
  static const std::vector<std::string> known{"kind", "nvars", "degree", "seed", "bound", "blocks", "nilpotent", "count"};
  for (auto it = j.begin(); it != j.end(); ++it)
    if (std::find(known.begin(), known.end(), it.key()) == known.end())
      throw InvalidSpecError("unknown spec field '" + it.key() + "'");
  GeneratorSpec s;
  try {
    s.kind = parse_generator_kind(j.at("kind").get<std::string>());
    s.nvars = j.at("nvars").get<std::size_t>();
    s.degree = j.at("degree").get<unsigned>();
    s.seed = j.value("seed", std::uint64_t{1});
    s.coefficient_bound = j.value("bound", 10L);
    if (j.contains("blocks")) s.block_sizes = j["blocks"].get<std::vector<std::size_t>>();
    if (j.contains("nilpotent")) s.nilpotent = matrix_from_json(j["nilpotent"]);
  } catch (const nlohmann::json::exception& e) {
    throw InvalidSpecError(std::string("malformed spec: ") + e.what());
  } catch (const InputError& e) {
    throw InvalidSpecError(std::string("malformed spec: ") + e.what());
  }
  const std::uint64_t count = j.value("count", std::uint64_t{1});
  if (count == 0) throw InvalidSpecError("count must be positive");
  std::vector<GeneratorSpec> out;
  for (std::uint64_t i = 0; i < count; ++i) {
    out.push_back(s);
    out.back().seed = s.seed + i;
  }
  return out;
}

inline Json census_row_json(const CensusRow& r) {
  const bool ok = r.status == "ok";
  Json j{{"kind", to_string(r.spec.kind)},
         {"nvars", r.spec.nvars},
         {"degree", r.spec.degree},
         {"seed", r.spec.seed},
         {"status", r.status},
         {"dim_total", r.status == "failed" ? Json() : Json(r.dim_total)},
         {"dim_torus", ok ? Json(r.dim_torus) : Json()},
         {"dim_unipotent", ok ? Json(r.dim_unipotent) : Json()},
         {"square_zero_count", ok ? Json(r.square_zero_count) : Json()}};
  if (!r.detail.empty()) j["detail"] = r.detail;
  return j;
}

}  // namespace symz
