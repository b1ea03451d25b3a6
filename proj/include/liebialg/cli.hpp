#pragma once

// Command-line front end. run() is the whole program minus process setup,
// so tests can drive it with argument vectors and string streams.
//
// Exit codes: 0 success, 1 a check failed, 2 invalid input.

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "liebialg/io.hpp"

namespace liebialg::cli {

using io::Json;

inline constexpr int kOk = 0;
inline constexpr int kCheckFailed = 1;
inline constexpr int kInputError = 2;

inline std::size_t max_rank() {
  const char* env = std::getenv("LIEBIALG_MAX_RANK");
  if (env == nullptr || *env == '\0') return 6;
  try {
    return static_cast<std::size_t>(std::stoul(env));
  } catch (const std::exception&) {
    throw InputError("LIEBIALG_MAX_RANK must be a non-negative integer, got '" + std::string(env) + "'");
  }
}

namespace detail {

inline std::string scalar_text(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_null()) return "none";
  return j.dump();
}

inline std::string inline_text(const Json& j) {
  if (!j.is_array()) return scalar_text(j);
  std::string out = "[";
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (i) out += ", ";
    out += inline_text(j[i]);
  }
  return out + "]";
}

inline void render_text(const Json& j, std::ostream& out, const std::string& indent = "") {
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) {
      if (value.is_object() || (value.is_array() && !value.empty() && (value[0].is_object() || value[0].is_array()))) {
        out << indent << key << ":\n";
        render_text(value, out, indent + "  ");
      } else {
        out << indent << key << ": " << inline_text(value) << "\n";
      }
    }
  } else if (j.is_array()) {
    for (const auto& item : j) {
      if (item.is_object()) {
        out << indent << "-\n";
        render_text(item, out, indent + "  ");
      } else {
        out << indent << inline_text(item) << "\n";
      }
    }
  } else {
    out << indent << scalar_text(j) << "\n";
  }
}

struct Outcome {
  Json report;
  bool failed = false;
};

template <Field F>
Outcome validate(const Json& alg_json) {
  auto a = io::algebra_from_json<F>(alg_json);
  auto jac = jacobi_check(a);
  Json r{{"dim", a.dim()}, {"jacobi", jac.ok}, {"witness", nullptr}};
  if (jac.witness) r["witness"] = Json::array({(*jac.witness)[0], (*jac.witness)[1], (*jac.witness)[2]});
  bool real_ok = true;
  if (a.has_realization()) {
    real_ok = realization_matches(a);
    r["realization_consistent"] = real_ok;
  }
  return {r, !jac.ok || !real_ok};
}

template <Field F>
Outcome rmatrix_check(const Json& alg_json, const Json& pi_json) {
  auto a = io::algebra_from_json<F>(alg_json);
  auto pi = io::bivector_from_json<F>(pi_json, a.dim());
  auto res = is_r_matrix(a, pi);
  Json r{{"is_r_matrix", res.ok}, {"witness", nullptr}};
  if (res.witness) r["witness"] = *res.witness;
  return {r, !res.ok};
}

template <Field F>
Outcome construct_verb(const Json& alg_json, const Json& pi_json, const std::string& x_text) {
  auto a = io::algebra_from_json<F>(alg_json);
  auto pi = io::bivector_from_json<F>(pi_json, a.dim());
  auto x = io::parse_scalar_list<F>(x_text, "x");
  if (x.size() != a.dim())
    throw io::field_error("x", "expected " + std::to_string(a.dim()) + " coefficients, got " + std::to_string(x.size()));
  auto rep = construct(a, pi, x);
  // When condi holds the oracles must confirm a coisotropic subalgebra.
  bool failed = rep.condi.holds && !(rep.is_subalgebra && rep.is_coisotropic);
  return {io::report_to_json(rep), failed};
}

template <Field F>
Outcome group_verb(const Json& alg_json, const Json& pi_json, const std::string& g_text) {
  auto a = io::algebra_from_json<F>(alg_json);
  auto pi = io::bivector_from_json<F>(pi_json, a.dim());
  Matrix<F> g;
  try {
    g = Matrix<F>::from_row_major(io::parse_scalar_list<F>(g_text, "g"));
  } catch (const InputError& e) {
    const std::string msg = e.what();
    if (msg.rfind("field '", 0) == 0) throw;
    throw io::field_error("g", msg);
  }
  auto rep = h_from_group(a, pi, g);
  // A flat element must produce a coisotropic subalgebra.
  bool failed = rep.flat && !(rep.is_subalgebra && rep.is_coisotropic);
  return {io::report_to_json(rep, g), failed};
}

template <Field F>
Outcome double_verb(const Json& alg_json, const Json& pi_json, const std::optional<Json>& sub_json) {
  auto a = io::algebra_from_json<F>(alg_json);
  auto pi = io::bivector_from_json<F>(pi_json, a.dim());
  auto d = drinfeld_double(a, pi);
  bool inv = pairing_invariant(d.algebra, d.pairing);
  Json r{{"dim", d.algebra.dim()}, {"jacobi", true}, {"pairing_invariant", inv}};
  bool failed = !inv;
  if (sub_json) {
    auto s = io::subspace_from_json<F>(*sub_json, a.dim());
    // k in g is tested as k + k°; l in g* as l° + l.
    Subspace<F> embedded;
    if (s.ambient() == Ambient::Algebra) {
      embedded = d.sum_with_annihilator(s);
    } else {
      std::vector<Vector<F>> span;
      const auto ann = annihilator(s);
      for (const auto& v : ann.basis()) span.push_back(d.embed_algebra(v));
      for (const auto& v : s.basis()) span.push_back(d.embed_dual(v));
      embedded = Subspace<F>(2 * a.dim(), span);
    }
    bool lag = is_lagrangian(d, embedded);
    r["lagrangian"] = lag;
    r["subspace"] = io::basis_to_json(embedded);
    failed = failed || !lag;
  }
  return {r, failed};
}

template <class Fn>
Outcome dispatch_field(const Json& alg_json, Fn&& fn) {
  if (io::read_field(alg_json) == "Qi") return fn(GaussianRational{});
  return fn(Rational{});
}

inline void check_rank(Series s, std::size_t n) {
  if (n < min_rank(s))
    throw io::field_error("rank", std::to_string(n) + " is below the minimum " + std::to_string(min_rank(s)) +
                                      " for series " + to_string(s));
  if (n > max_rank())
    throw io::field_error("rank", std::to_string(n) + " exceeds LIEBIALG_MAX_RANK=" + std::to_string(max_rank()));
}

inline Outcome classical_verb(const std::string& series, std::size_t n, bool list, const std::string& root_text) {
  Series s = parse_series(series);
  check_rank(s, n);
  auto [a, rd] = build_series<Rational>(s, n);
  if (list || root_text.empty()) {
    Json roots = Json::array();
    for (const auto& r : line_condition_roots(rd)) roots.push_back(format_root(r));
    return {roots, false};
  }
  Root root;
  try {
    root = parse_root(root_text, rd.coords());
  } catch (const InputError& e) {
    throw io::field_error("root", e.what());
  }
  if (!rd.is_root(root)) throw io::field_error("root", "'" + root_text + "' is not a root of " + rd.name());
  auto pi = standard_r_matrix(a, rd);
  auto rep = construct(a, pi, root_vector(a, rd, root));
  Json r = io::report_to_json(rep);
  r["root"] = format_root(root);
  r["line_condition"] = line_condition(rd, root);
  return {r, rep.condi.holds && !(rep.is_subalgebra && rep.is_coisotropic)};
}

inline Outcome reproduce_verb(const std::string& series, std::size_t n) {
  Series s = parse_series(series);
  check_rank(s, n);
  auto rows = reproduce_families<Rational>(s, n);
  bool all = std::ranges::all_of(rows, [](const auto& row) { return row.match && row.is_coisotropic; });
  return {Json{{"series", to_string(s)}, {"rank", n}, {"all_match", all}, {"rows", io::reproduction_to_json(rows)}},
          !all};
}

}  // namespace detail

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Coisotropic subalgebras of Lie bialgebras from r-matrices", "liebialg"};
  app.require_subcommand(1);

  std::string format = "json";
  std::string algebra_path, pi_path, subspace_path, x_text, g_text, series, root_text;
  std::size_t rank = 0;
  bool list_roots = false;

  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}));
  };
  auto* validate = app.add_subcommand("validate", "Check the Jacobi identity of an algebra");
  validate->add_option("--algebra", algebra_path, "Algebra JSON file")->required();
  add_format(validate);

  auto* rcheck = app.add_subcommand("rmatrix-check", "Check that [pi,pi] is ad-invariant");
  rcheck->add_option("--algebra", algebra_path, "Algebra JSON file")->required();
  rcheck->add_option("--pi", pi_path, "Bivector JSON file")->required();
  add_format(rcheck);

  auto* cons = app.add_subcommand("construct", "Build the subalgebra attached to X");
  cons->add_option("--algebra", algebra_path, "Algebra JSON file")->required();
  cons->add_option("--pi", pi_path, "Bivector JSON file")->required();
  cons->add_option("--x", x_text, "Coefficients of X, comma separated")->required();
  add_format(cons);

  auto* group = app.add_subcommand("group", "Build the subspace attached to a group element");
  group->add_option("--algebra", algebra_path, "Algebra JSON file")->required();
  group->add_option("--pi", pi_path, "Bivector JSON file")->required();
  group->add_option("--g", g_text, "Row-major entries of g, comma separated")->required();
  add_format(group);

  auto* classical = app.add_subcommand("classical", "Work with a classical series and its standard r-matrix");
  classical->add_option("--series", series, "A, B, C or D")->required();
  classical->add_option("--rank", rank, "Rank n")->required();
  auto* list_flag = classical->add_flag("--list-roots", list_roots, "List roots satisfying the line condition");
  classical->add_option("--root", root_text, "Root such as L1-L3 or 2L1")->excludes(list_flag);
  add_format(classical);

  auto* dbl = app.add_subcommand("double", "Build the Drinfeld double and test a lagrangian subspace");
  dbl->add_option("--algebra", algebra_path, "Algebra JSON file")->required();
  dbl->add_option("--pi", pi_path, "Bivector JSON file")->required();
  dbl->add_option("--subspace", subspace_path, "Subspace JSON file");
  add_format(dbl);

  auto* repro = app.add_subcommand("reproduce", "Compare constructed subalgebras with the listed families");
  repro->add_option("--series", series, "A, B, C or D")->required();
  repro->add_option("--rank", rank, "Rank n")->required();
  add_format(repro);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }

  try {
    detail::Outcome outcome;
    if (*validate) {
      auto j = io::read_json_file(algebra_path, "algebra");
      outcome = detail::dispatch_field(j, [&]<class F>(F) { return detail::validate<F>(j); });
    } else if (*rcheck) {
      auto j = io::read_json_file(algebra_path, "algebra");
      auto p = io::read_json_file(pi_path, "pi");
      outcome = detail::dispatch_field(j, [&]<class F>(F) { return detail::rmatrix_check<F>(j, p); });
    } else if (*cons) {
      auto j = io::read_json_file(algebra_path, "algebra");
      auto p = io::read_json_file(pi_path, "pi");
      outcome = detail::dispatch_field(j, [&]<class F>(F) { return detail::construct_verb<F>(j, p, x_text); });
    } else if (*group) {
      auto j = io::read_json_file(algebra_path, "algebra");
      auto p = io::read_json_file(pi_path, "pi");
      outcome = detail::dispatch_field(j, [&]<class F>(F) { return detail::group_verb<F>(j, p, g_text); });
    } else if (*classical) {
      outcome = detail::classical_verb(series, rank, list_roots, root_text);
    } else if (*dbl) {
      auto j = io::read_json_file(algebra_path, "algebra");
      auto p = io::read_json_file(pi_path, "pi");
      std::optional<Json> s;
      if (!subspace_path.empty()) s = io::read_json_file(subspace_path, "subspace");
      outcome = detail::dispatch_field(j, [&]<class F>(F) { return detail::double_verb<F>(j, p, s); });
    } else if (*repro) {
      outcome = detail::reproduce_verb(series, rank);
    }
    if (format == "text")
      detail::render_text(outcome.report, out);
    else
      out << outcome.report.dump(2) << "\n";
    return outcome.failed ? kCheckFailed : kOk;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const CheckFailure& e) {
    err << "check failed: " << e.what() << "\n";
    return kCheckFailed;
  } catch (const Json::exception& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
}

}  // namespace liebialg::cli
