#pragma once

// Coisotropic subalgebras from an r-matrix pi:
//
//   * X-route: if [X,[X,pi]] = lambda [X,pi] then the image of the sharp map
//     of [X,pi] is a coisotropic subalgebra.
//   * group route: for a group element g, eta = pi - Ad_g pi; when
//     [eta, eta] = 0 the sharp image of eta is a subalgebra, and every
//     subalgebra arising this way is coisotropic.
//
// The coisotropy verdicts come from is_coisotropic, which recomputes the
// dual bracket from scratch.

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "liebialg/bialgebra.hpp"

namespace liebialg {

template <Field F>
struct CondiSolution {
  Vector<F> x;
  Multivector<F> bracket_x_pi;
  std::optional<Proportion<F>> lambda;  // nullopt: no factor exists
  bool holds = false;

  [[nodiscard]] bool vacuous() const { return lambda && std::holds_alternative<ZeroPair>(*lambda); }
};

template <Field F>
struct ConstructionReport {
  CondiSolution<F> condi;
  Subspace<F> h;
  bool is_subalgebra = false;
  bool is_coisotropic = false;
  std::size_t dim_h = 0;
};

/// Tests [X,[X,pi]] = lambda [X,pi].
template <Field F>
CondiSolution<F> check_condi(const LieAlgebra<F>& a, const Multivector<F>& pi, const Vector<F>& x) {
  a.check_dim(x, "x");
  auto xm = Multivector<F>::from_vector(x);
  CondiSolution<F> sol;
  sol.x = x;
  sol.bracket_x_pi = schouten(a, xm, pi);
  auto twice = schouten(a, xm, sol.bracket_x_pi);
  auto [lhs, rhs] = aligned_coefficients(twice, sol.bracket_x_pi);
  sol.lambda = solve_proportionality(lhs, rhs);
  sol.holds = sol.lambda.has_value();
  return sol;
}

/// Sharp image of a bivector as a subspace of g.
template <Field F>
Subspace<F> sharp_image(const Multivector<F>& b) {
  return Subspace<F>(b.ambient_dim(), sharp_image_spanning(b));
}

template <Field F>
Subspace<F> build_h(const LieAlgebra<F>& a, const Multivector<F>& pi, const Vector<F>& x) {
  a.check_dim(x, "x");
  return sharp_image(schouten(a, Multivector<F>::from_vector(x), pi));
}

template <Field F>
ConstructionReport<F> construct(const LieAlgebra<F>& a, const Multivector<F>& pi, const Vector<F>& x) {
  ConstructionReport<F> rep;
  rep.condi = check_condi(a, pi, x);
  rep.h = sharp_image(rep.condi.bracket_x_pi);
  rep.dim_h = rep.h.dim();
  auto co = is_coisotropic(a, pi, rep.h);
  rep.is_subalgebra = co.subalgebra.ok;
  rep.is_coisotropic = co.coisotropic;
  if (rep.dim_h % 2 != 0) throw CheckFailure("sharp image has odd dimension " + std::to_string(rep.dim_h));
  if (rep.condi.holds && !rep.is_coisotropic)
    throw CheckFailure("condition on X holds but the constructed subspace is not coisotropic");
  return rep;
}

/// eta = pi - Ad_g pi.
template <Field F>
Multivector<F> eta_from_group(const LieAlgebra<F>& a, const Multivector<F>& pi, const Matrix<F>& g) {
  return pi - push_forward(a.adjoint_group_matrix(g), pi);
}

template <Field F>
struct GroupReport {
  Multivector<F> eta;
  Subspace<F> h;
  bool flat = false;
  bool is_subalgebra = false;
  bool is_coisotropic = false;
};

template <Field F>
GroupReport<F> h_from_group(const LieAlgebra<F>& a, const Multivector<F>& pi, const Matrix<F>& g) {
  GroupReport<F> rep;
  rep.eta = eta_from_group(a, pi, g);
  rep.h = sharp_image(rep.eta);
  rep.flat = schouten(a, rep.eta, rep.eta).is_zero();
  auto co = is_coisotropic(a, pi, rep.h);
  rep.is_subalgebra = co.subalgebra.ok;
  rep.is_coisotropic = co.coisotropic;
  if (rep.flat && !rep.is_subalgebra) throw CheckFailure("[eta,eta] = 0 but the sharp image is not a subalgebra");
  if (rep.is_subalgebra && !rep.is_coisotropic)
    throw CheckFailure("sharp image of eta is a subalgebra but not coisotropic");
  return rep;
}

/// Image of a subspace under a linear map given by its matrix.
template <Field F>
Subspace<F> map_subspace(const Matrix<F>& m, const Subspace<F>& s) {
  std::vector<Vector<F>> span;
  for (const auto& v : s.basis()) span.push_back(m * v);
  return Subspace<F>(s.ambient_dim(), span, s.ambient());
}

/// h^{g^{-1}} = Ad_{g^{-1}} h^g, and h^{g^{-1}} is again a subalgebra.
template <Field F>
bool inversion_property_check(const LieAlgebra<F>& a, const Multivector<F>& pi, const Matrix<F>& g) {
  auto forward = h_from_group(a, pi, g);
  if (!forward.is_subalgebra) throw InputError("inversion check needs h^g to be a subalgebra");
  Matrix<F> g_inv = inverse(g);
  auto backward = h_from_group(a, pi, g_inv);
  return backward.h == map_subspace(a.adjoint_group_matrix(g_inv), forward.h) && backward.is_subalgebra;
}

}  // namespace liebialg
