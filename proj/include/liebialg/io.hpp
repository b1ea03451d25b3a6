#pragma once

// JSON encodings of algebras, bivectors, subspaces and reports.
//
//   algebra:   {"field":"Q"|"Qi","dim":n,"basis":[names],
//               "brackets":[[i,j,[k,"c"],...],...],
//               "realization":[[row-major entries],...]}      (optional)
//   bivector:  {"degree":2,"terms":[[i,j,"c"],...]}  with i < j
//   subspace:  {"ambient":"g"|"g*","basis":[[coeffs],...]}
//
// Scalars are strings ("p/q", "p/q+r/s*i") or JSON integers. Indices are
// 0-based.

#include <cstddef>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "liebialg/classical.hpp"

namespace liebialg::io {

using Json = nlohmann::json;

inline InputError field_error(const std::string& field, const std::string& what) {
  return InputError("field '" + field + "': " + what);
}

template <Field F>
F scalar_from_json(const Json& j, const std::string& field) {
  try {
    if (j.is_string()) return F::parse(j.get<std::string>());
    if (j.is_number_integer()) return F(Rational(j.get<long long>()));
  } catch (const InputError& e) {
    throw field_error(field, e.what());
  }
  throw field_error(field, "expected a scalar string or integer");
}

template <Field F>
Json scalar_to_json(const F& x) {
  return x.to_string();
}

template <Field F>
Json vector_to_json(const Vector<F>& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(scalar_to_json(x));
  return out;
}

template <Field F>
Vector<F> vector_from_json(const Json& j, const std::string& field) {
  if (!j.is_array()) throw field_error(field, "expected an array of scalars");
  Vector<F> v;
  for (std::size_t i = 0; i < j.size(); ++i) v.push_back(scalar_from_json<F>(j[i], field + "[" + std::to_string(i) + "]"));
  return v;
}

/// Comma-separated scalars, as given on the command line.
template <Field F>
Vector<F> parse_scalar_list(std::string_view text, const std::string& field) {
  Vector<F> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto comma = text.find(',', start);
    auto piece = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    try {
      out.push_back(F::parse(piece));
    } catch (const InputError& e) {
      throw field_error(field, "entry " + std::to_string(out.size()) + ": " + e.what());
    }
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

inline std::string read_field(const Json& j) {
  if (!j.is_object() || !j.contains("field")) return "Q";
  if (!j["field"].is_string()) throw field_error("field", "expected \"Q\" or \"Qi\"");
  auto f = j["field"].get<std::string>();
  if (f != "Q" && f != "Qi") throw field_error("field", "expected \"Q\" or \"Qi\", got \"" + f + "\"");
  return f;
}

inline std::size_t index_from_json(const Json& j, const std::string& field, std::size_t bound) {
  if (!j.is_number_integer() || j.get<long long>() < 0) throw field_error(field, "expected a non-negative index");
  auto v = j.get<std::size_t>();
  if (v >= bound) throw field_error(field, "index " + std::to_string(v) + " out of range");
  return v;
}

template <Field F>
LieAlgebra<F> algebra_from_json(const Json& j) {
  if (!j.is_object()) throw field_error("algebra", "expected a JSON object");
  if (!j.contains("dim") || !j["dim"].is_number_integer() || j["dim"].get<long long>() < 0)
    throw field_error("dim", "expected a non-negative integer");
  const auto n = j["dim"].get<std::size_t>();
  std::vector<std::string> names;
  if (j.contains("basis")) {
    if (!j["basis"].is_array() || j["basis"].size() != n)
      throw field_error("basis", "expected " + std::to_string(n) + " names");
    for (const auto& nm : j["basis"]) {
      if (!nm.is_string()) throw field_error("basis", "names must be strings");
      names.push_back(nm.get<std::string>());
    }
  } else {
    for (std::size_t i = 0; i < n; ++i) names.push_back("e" + std::to_string(i + 1));
  }
  std::vector<BracketEntry<F>> entries;
  if (j.contains("brackets")) {
    const auto& br = j["brackets"];
    if (!br.is_array()) throw field_error("brackets", "expected an array");
    for (std::size_t e = 0; e < br.size(); ++e) {
      const std::string where = "brackets[" + std::to_string(e) + "]";
      const auto& item = br[e];
      if (!item.is_array() || item.size() < 2) throw field_error(where, "expected [i, j, [k, c], ...]");
      BracketEntry<F> entry{index_from_json(item[0], where + "[0]", n), index_from_json(item[1], where + "[1]", n), {}};
      if (entry.i >= entry.j) throw field_error(where, "requires i < j");
      for (std::size_t t = 2; t < item.size(); ++t) {
        const std::string tw = where + "[" + std::to_string(t) + "]";
        if (!item[t].is_array() || item[t].size() != 2) throw field_error(tw, "expected [k, c]");
        entry.terms.push_back({index_from_json(item[t][0], tw + "[0]", n), scalar_from_json<F>(item[t][1], tw + "[1]")});
      }
      entries.push_back(std::move(entry));
    }
  }
  std::vector<Matrix<F>> real;
  if (j.contains("realization") && !j["realization"].is_null()) {
    const auto& r = j["realization"];
    if (!r.is_array() || r.size() != n)
      throw field_error("realization", "expected " + std::to_string(n) + " matrices");
    for (std::size_t m = 0; m < r.size(); ++m) {
      const std::string where = "realization[" + std::to_string(m) + "]";
      try {
        real.push_back(Matrix<F>::from_row_major(vector_from_json<F>(r[m], where)));
      } catch (const InputError& e) {
        const std::string msg = e.what();
        if (msg.rfind("field '", 0) == 0) throw;
        throw field_error(where, msg);
      }
    }
  }
  try {
    return LieAlgebra<F>(names, entries, real);
  } catch (const InputError& e) {
    throw field_error(real.empty() ? "brackets" : "realization", e.what());
  }
}

template <Field F>
Json algebra_to_json(const LieAlgebra<F>& a) {
  Json j;
  j["field"] = std::string(field_name<F>());
  j["dim"] = a.dim();
  j["basis"] = a.basis_names();
  Json br = Json::array();
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t k = i + 1; k < a.dim(); ++k) {
      const auto& terms = a.basis_bracket(i, k);
      if (terms.empty()) continue;
      Json entry = Json::array({i, k});
      for (const auto& t : terms) entry.push_back(Json::array({t.index, scalar_to_json(t.coeff)}));
      br.push_back(entry);
    }
  j["brackets"] = br;
  if (a.has_realization()) {
    Json r = Json::array();
    for (const auto& m : a.realization()) r.push_back(vector_to_json<F>(m.entries()));
    j["realization"] = r;
  }
  return j;
}

template <Field F>
Multivector<F> bivector_from_json(const Json& j, std::size_t n) {
  if (!j.is_object()) throw field_error("pi", "expected a JSON object");
  if (j.contains("degree") && (!j["degree"].is_number_integer() || j["degree"].get<long long>() != 2))
    throw field_error("degree", "only degree 2 is supported");
  if (!j.contains("terms") || !j["terms"].is_array()) throw field_error("terms", "expected an array");
  Multivector<F> b(n, 2);
  for (std::size_t t = 0; t < j["terms"].size(); ++t) {
    const auto& item = j["terms"][t];
    const std::string where = "terms[" + std::to_string(t) + "]";
    if (!item.is_array() || item.size() != 3) throw field_error(where, "expected [i, j, c]");
    auto i = index_from_json(item[0], where + "[0]", n);
    auto k = index_from_json(item[1], where + "[1]", n);
    if (i >= k) throw field_error(where, "requires i < j");
    b.add_term({i, k}, scalar_from_json<F>(item[2], where + "[2]"));
  }
  return b;
}

template <Field F>
Json bivector_to_json(const Multivector<F>& b) {
  Json terms = Json::array();
  for (const auto& [k, c] : b.terms()) terms.push_back(Json::array({k[0], k[1], scalar_to_json(c)}));
  return Json{{"degree", 2}, {"terms", terms}};
}

template <Field F>
Json basis_to_json(const Subspace<F>& s) {
  Json rows = Json::array();
  for (const auto& v : s.basis()) rows.push_back(vector_to_json(v));
  return rows;
}

template <Field F>
Json subspace_to_json(const Subspace<F>& s) {
  return Json{{"ambient", to_string(s.ambient())}, {"basis", basis_to_json(s)}};
}

template <Field F>
Subspace<F> subspace_from_json(const Json& j, std::size_t n) {
  if (!j.is_object()) throw field_error("subspace", "expected a JSON object");
  Ambient amb = Ambient::Algebra;
  if (j.contains("ambient")) {
    if (!j["ambient"].is_string()) throw field_error("ambient", "expected \"g\" or \"g*\"");
    auto a = j["ambient"].get<std::string>();
    if (a == "g*")
      amb = Ambient::Dual;
    else if (a != "g")
      throw field_error("ambient", "expected \"g\" or \"g*\", got \"" + a + "\"");
  }
  if (!j.contains("basis") || !j["basis"].is_array()) throw field_error("basis", "expected an array of vectors");
  std::vector<Vector<F>> rows;
  for (std::size_t r = 0; r < j["basis"].size(); ++r) {
    auto v = vector_from_json<F>(j["basis"][r], "basis[" + std::to_string(r) + "]");
    if (v.size() != n)
      throw field_error("basis[" + std::to_string(r) + "]",
                        "expected " + std::to_string(n) + " coefficients, got " + std::to_string(v.size()));
    rows.push_back(std::move(v));
  }
  return Subspace<F>(n, rows, amb);
}

template <Field F>
Json lambda_to_json(const std::optional<Proportion<F>>& lambda) {
  if (!lambda) return nullptr;
  if (std::holds_alternative<ZeroPair>(*lambda)) return "any";
  return scalar_to_json(std::get<F>(*lambda));
}

template <Field F>
Json report_to_json(const ConstructionReport<F>& r) {
  return Json{{"x", vector_to_json(r.condi.x)},
              {"lambda", lambda_to_json(r.condi.lambda)},
              {"condi_holds", r.condi.holds},
              {"h_basis", basis_to_json(r.h)},
              {"dim", r.dim_h},
              {"is_subalgebra", r.is_subalgebra},
              {"is_coisotropic", r.is_coisotropic}};
}

template <Field F>
Json report_to_json(const GroupReport<F>& r, const Matrix<F>& g) {
  return Json{{"g", vector_to_json(g.entries())},
              {"eta", bivector_to_json(r.eta)},
              {"h_basis", basis_to_json(r.h)},
              {"dim", r.h.dim()},
              {"flat", r.flat},
              {"is_subalgebra", r.is_subalgebra},
              {"is_coisotropic", r.is_coisotropic}};
}

template <Field F>
Json reproduction_to_json(const std::vector<ReproductionRow<F>>& rows) {
  Json out = Json::array();
  for (const auto& row : rows)
    out.push_back(Json{{"root", format_root(row.root)},
                       {"constructed", basis_to_json(row.constructed)},
                       {"boxed", basis_to_json(row.boxed)},
                       {"condi_holds", row.condi_holds},
                       {"match", row.match},
                       {"is_coisotropic", row.is_coisotropic}});
  return out;
}

inline Json read_json_file(const std::string& path, const std::string& what) {
  std::ifstream in(path);
  if (!in) throw InputError(what + " file '" + path + "' cannot be opened");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw InputError(what + " file '" + path + "' is not valid JSON: " + e.what());
  }
}

}  // namespace liebialg::io
