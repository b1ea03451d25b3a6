#pragma once

// Lie bialgebra structure coming from an r-matrix: the cobracket, the dual
// bracket on g*, subalgebra and coisotropy predicates, and the Drinfeld
// double with its lagrangian subalgebras.

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "liebialg/multivector.hpp"
#include "liebialg/subspace.hpp"

namespace liebialg {

template <Field F>
using DualVector = Vector<F>;

/// pi is an r-matrix iff [pi, pi] is ad-invariant.
template <Field F>
InvarianceResult is_r_matrix(const LieAlgebra<F>& a, const Multivector<F>& pi) {
  if (pi.degree() != 2) throw InputError("r-matrix must be a bivector");
  return ad_invariant(a, schouten(a, pi, pi));
}

/// delta(x) = [pi, x].
template <Field F>
Multivector<F> cobracket(const LieAlgebra<F>& a, const Multivector<F>& pi, const Vector<F>& x) {
  a.check_dim(x, "x");
  return schouten(a, pi, Multivector<F>::from_vector(x));
}

/// Structure constants of the bracket on g* induced by pi:
/// <[xi, zeta], e_k> = <xi ^ zeta, delta(e_k)>.
template <Field F>
class DualBracket {
 public:
  DualBracket(const LieAlgebra<F>& a, const Multivector<F>& pi) {
    if (pi.degree() != 2 || pi.ambient_dim() != a.dim())
      throw InputError("pi must be a bivector over the algebra");
    deltas_.reserve(a.dim());
    for (std::size_t k = 0; k < a.dim(); ++k) deltas_.push_back(cobracket(a, pi, unit_vector<F>(a.dim(), k)));
  }

  [[nodiscard]] std::size_t dim() const { return deltas_.size(); }
  [[nodiscard]] const Multivector<F>& delta(std::size_t k) const { return deltas_[k]; }

  [[nodiscard]] DualVector<F> operator()(const DualVector<F>& xi, const DualVector<F>& zeta) const {
    if (xi.size() != dim() || zeta.size() != dim()) throw InputError("dual vector has the wrong dimension");
    DualVector<F> out(dim(), F::zero());
    for (std::size_t k = 0; k < dim(); ++k) out[k] = evaluate(deltas_[k], xi, zeta);
    return out;
  }

 private:
  std::vector<Multivector<F>> deltas_;
};

template <Field F>
DualVector<F> dual_bracket(const LieAlgebra<F>& a, const Multivector<F>& pi, const DualVector<F>& xi,
                           const DualVector<F>& zeta) {
  return DualBracket<F>(a, pi)(xi, zeta);
}

template <Field F>
Subspace<F> annihilator(const LieAlgebra<F>& a, const Subspace<F>& s) {
  if (s.ambient_dim() != a.dim()) throw InputError("subspace does not live in the algebra");
  return annihilator(s);
}

struct ClosureResult {
  bool ok = true;
  std::optional<std::pair<std::size_t, std::size_t>> witness;  // basis indices of a failing pair
};

template <Field F>
ClosureResult is_subalgebra(const LieAlgebra<F>& a, const Subspace<F>& s) {
  if (s.ambient_dim() != a.dim()) throw InputError("subspace does not live in the algebra");
  const auto& b = s.basis();
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = i + 1; j < b.size(); ++j)
      if (!s.contains(a.bracket(b[i], b[j]))) return {false, std::pair{i, j}};
  return {};
}

template <Field F>
struct CoisotropyReport {
  bool coisotropic = false;
  ClosureResult subalgebra;
  ClosureResult annihilator_closed;
  Subspace<F> annihilator;
};

/// A subalgebra is coisotropic iff its annihilator is closed under the dual
/// bracket. Evaluated directly from pi and the structure constants.
template <Field F>
CoisotropyReport<F> is_coisotropic(const LieAlgebra<F>& a, const Multivector<F>& pi, const Subspace<F>& s) {
  CoisotropyReport<F> rep;
  rep.subalgebra = is_subalgebra(a, s);
  rep.annihilator = annihilator(a, s);
  DualBracket<F> dual(a, pi);
  const auto& ann = rep.annihilator.basis();
  for (std::size_t i = 0; i < ann.size() && rep.annihilator_closed.ok; ++i)
    for (std::size_t j = i + 1; j < ann.size(); ++j) {
      DualVector<F> br = dual(ann[i], ann[j]);
      bool vanishes = true;
      for (const auto& v : s.basis())
        if (!dot(br, v).is_zero()) {
          vanishes = false;
          break;
        }
      if (!vanishes) {
        rep.annihilator_closed = {false, std::pair{i, j}};
        break;
      }
    }
  rep.coisotropic = rep.subalgebra.ok && rep.annihilator_closed.ok;
  return rep;
}

/// The Lie algebra g + g* on the basis (e_1..e_n, e^1..e^n) together with
/// the natural pairing <x + xi, y + zeta> = xi(y) + zeta(x).
template <Field F>
struct DoubleAlgebra {
  LieAlgebra<F> algebra;
  Matrix<F> pairing;
  std::size_t base_dim = 0;

  [[nodiscard]] F pair(const Vector<F>& u, const Vector<F>& v) const { return dot(u, pairing * v); }

  /// (x, 0) for x in g.
  [[nodiscard]] Vector<F> embed_algebra(const Vector<F>& x) const {
    Vector<F> v(2 * base_dim, F::zero());
    for (std::size_t i = 0; i < base_dim; ++i) v[i] = x[i];
    return v;
  }
  /// (0, xi) for xi in g*.
  [[nodiscard]] Vector<F> embed_dual(const DualVector<F>& xi) const {
    Vector<F> v(2 * base_dim, F::zero());
    for (std::size_t i = 0; i < base_dim; ++i) v[base_dim + i] = xi[i];
    return v;
  }
  /// k + k° for a subspace k of g.
  [[nodiscard]] Subspace<F> sum_with_annihilator(const Subspace<F>& k) const {
    std::vector<Vector<F>> span;
    for (const auto& v : k.basis()) span.push_back(embed_algebra(v));
    const auto ann = annihilator(k);
    for (const auto& v : ann.basis()) span.push_back(embed_dual(v));
    return Subspace<F>(2 * base_dim, span);
  }
};

/// Bracket on g + g*:
///   [e_i, e_j]  = [e_i, e_j]_g
///   [e^j, e^k]  = [e^j, e^k]_{g*}
///   [e_i, e^j]  = ad*_{e_i} e^j - ad*_{e^j} e_i
///               = -sum_k c_{ik}^j e^k + sum_k d^{jk}_i e_k
/// with c the structure constants of g and d those of g*.
template <Field F>
DoubleAlgebra<F> drinfeld_double(const LieAlgebra<F>& a, const Multivector<F>& pi) {
  const std::size_t n = a.dim();
  DualBracket<F> dual(a, pi);
  // d[j][k] = [e^j, e^k] as a vector over e^i
  std::vector<std::vector<Vector<F>>> d(n, std::vector<Vector<F>>(n));
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k) d[j][k] = dual(unit_vector<F>(n, j), unit_vector<F>(n, k));

  std::vector<std::string> names = a.basis_names();
  for (const auto& nm : a.basis_names()) names.push_back(nm + "*");

  std::vector<BracketEntry<F>> entries;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) entries.push_back({i, j, a.basis_bracket(i, j)});
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = j + 1; k < n; ++k) {
      BracketEntry<F> e{n + j, n + k, {}};
      for (std::size_t i = 0; i < n; ++i)
        if (!d[j][k][i].is_zero()) e.terms.push_back({n + i, d[j][k][i]});
      entries.push_back(std::move(e));
    }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      BracketEntry<F> e{i, n + j, {}};
      for (std::size_t k = 0; k < n; ++k) {
        F c = a.structure_constant(i, k, j);
        if (!c.is_zero()) e.terms.push_back({n + k, -c});
        if (!d[j][k][i].is_zero()) e.terms.push_back({k, d[j][k][i]});
      }
      entries.push_back(std::move(e));
    }

  DoubleAlgebra<F> out;
  out.algebra = LieAlgebra<F>(std::move(names), entries);
  out.base_dim = n;
  out.pairing = Matrix<F>(2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    out.pairing(i, n + i) = F::one();
    out.pairing(n + i, i) = F::one();
  }
  auto jac = jacobi_check(out.algebra);
  if (!jac.ok) throw CheckFailure("Drinfeld double fails the Jacobi identity; pi is not an r-matrix");
  return out;
}

/// <[u,v],w> + <v,[u,w]> = 0 on all basis triples.
template <Field F>
bool pairing_invariant(const LieAlgebra<F>& a, const Matrix<F>& pairing) {
  const std::size_t n = a.dim();
  std::vector<Vector<F>> basis;
  for (std::size_t i = 0; i < n; ++i) basis.push_back(unit_vector<F>(n, i));
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v) {
      Vector<F> uv = a.bracket(basis[u], basis[v]);
      for (std::size_t w = 0; w < n; ++w) {
        Vector<F> uw = a.bracket(basis[u], basis[w]);
        if (!(dot(uv, pairing * basis[w]) + dot(basis[v], pairing * uw)).is_zero()) return false;
      }
    }
  return true;
}

/// Isotropic subspace of a bilinear form: the form vanishes on s x s.
template <Field F>
bool is_isotropic(const Matrix<F>& pairing, const Subspace<F>& s) {
  const auto& b = s.basis();
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = i; j < b.size(); ++j)
      if (!dot(b[i], pairing * b[j]).is_zero()) return false;
  return true;
}

template <Field F>
bool is_lagrangian(const DoubleAlgebra<F>& d, const Subspace<F>& s) {
  if (s.ambient_dim() != d.algebra.dim()) throw InputError("subspace does not live in the double");
  return s.dim() == d.base_dim && is_isotropic(d.pairing, s) && is_subalgebra(d.algebra, s).ok;
}

struct ManinTripleReport {
  bool pairing_invariant = false;
  bool diagonal_lagrangian = false;
  bool complement_lagrangian = false;
  bool transversal = false;
  bool recovers_cobracket = false;
  std::optional<std::size_t> witness;  // basis element where the cobracket differs
  [[nodiscard]] bool ok() const {
    return pairing_invariant && diagonal_lagrangian && complement_lagrangian && transversal && recovers_cobracket;
  }
};

/// Self-test of the Manin triple (g + g, g_diag, s) where g + g carries the
/// pairing (1/2)B(x1,x2) - (1/2)B(y1,y2) and
///   s = {(h + v, -h + w) : h in the Cartan subalgebra, v in the positive
///        root spaces, w in the negative root spaces}.
/// Identifying g with the diagonal and g* with s through the pairing, the
/// dual of the bracket on s must be the cobracket [pi, .].
template <Field F>
ManinTripleReport manin_triple_self_test(const LieAlgebra<F>& a, const Multivector<F>& pi,
                                         const std::vector<Vector<F>>& cartan,
                                         const std::vector<Vector<F>>& positive,
                                         const std::vector<Vector<F>>& negative) {
  const std::size_t n = a.dim();
  ManinTripleReport rep;

  // g + g as a direct sum.
  std::vector<std::string> names;
  for (const auto& nm : a.basis_names()) names.push_back(nm + "_1");
  for (const auto& nm : a.basis_names()) names.push_back(nm + "_2");
  std::vector<BracketEntry<F>> entries;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      entries.push_back({i, j, a.basis_bracket(i, j)});
      std::vector<Term<F>> shifted;
      for (const auto& t : a.basis_bracket(i, j)) shifted.push_back({t.index + n, t.coeff});
      entries.push_back({n + i, n + j, shifted});
    }
  LieAlgebra<F> sum(names, entries);

  const F half = F::one() / F(Rational(2));
  Matrix<F> killing(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      killing(i, j) = a.killing_form(unit_vector<F>(n, i), unit_vector<F>(n, j));
  Matrix<F> pairing(2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      pairing(i, j) = half * killing(i, j);
      pairing(n + i, n + j) = -(half * killing(i, j));
    }
  rep.pairing_invariant = pairing_invariant(sum, pairing);

  auto concat = [&](const Vector<F>& x, const Vector<F>& y) {
    Vector<F> v = x;
    v.insert(v.end(), y.begin(), y.end());
    return v;
  };
  std::vector<Vector<F>> diag_span;
  for (std::size_t i = 0; i < n; ++i) diag_span.push_back(concat(unit_vector<F>(n, i), unit_vector<F>(n, i)));
  Subspace<F> diag(2 * n, diag_span);

  std::vector<Vector<F>> comp_span;
  const Vector<F> zero = zero_vector<F>(n);
  for (const auto& h : cartan) comp_span.push_back(concat(h, F(Rational(-1)) * h));
  for (const auto& v : positive) comp_span.push_back(concat(v, zero));
  for (const auto& w : negative) comp_span.push_back(concat(zero, w));
  Subspace<F> comp(2 * n, comp_span);

  auto lagrangian = [&](const Subspace<F>& s) {
    return s.dim() == n && is_isotropic(pairing, s) && is_subalgebra(sum, s).ok;
  };
  rep.diagonal_lagrangian = lagrangian(diag);
  rep.complement_lagrangian = lagrangian(comp);
  std::vector<Vector<F>> both = diag.basis();
  both.insert(both.end(), comp.basis().begin(), comp.basis().end());
  rep.transversal = rank(Matrix<F>::from_rows(both, 2 * n)) == 2 * n;
  if (!rep.transversal) return rep;

  // Bracket on the complement in its own basis: [b_a, b_b] = sum_c s_ab^c b_c.
  const auto& cb = comp.basis();
  Matrix<F> cb_cols = Matrix<F>::from_rows(cb, 2 * n).transpose();
  // P(i, a) = <(e_i, e_i), b_a>
  Matrix<F> pair_ia(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t c = 0; c < n; ++c) pair_ia(i, c) = dot(diag_span[i], pairing * cb[c]);

  auto coords_in_comp = [&](const Vector<F>& v) {
    // Solve cb_cols * x = v.
    Matrix<F> aug(2 * n, n + 1);
    for (std::size_t r = 0; r < 2 * n; ++r) {
      for (std::size_t c = 0; c < n; ++c) aug(r, c) = cb_cols(r, c);
      aug(r, n) = v[r];
    }
    auto res = rref_with_pivots(aug);
    Vector<F> x(n, F::zero());
    for (std::size_t r = 0; r < res.rank; ++r)
      if (res.pivots[r] < n) x[res.pivots[r]] = res.matrix(r, n);
    return x;
  };

  DualBracket<F> dual(a, pi);
  rep.recovers_cobracket = true;
  for (std::size_t i = 0; i < n && rep.recovers_cobracket; ++i) {
    // functional xi_a on g: xi_a(e_j) = P(j, a)
    for (std::size_t x = 0; x < n && rep.recovers_cobracket; ++x)
      for (std::size_t y = x + 1; y < n; ++y) {
        Vector<F> coords = coords_in_comp(sum.bracket(cb[x], cb[y]));
        F induced = F::zero();
        for (std::size_t c = 0; c < n; ++c) induced += coords[c] * pair_ia(i, c);
        F expected = evaluate(dual.delta(i), pair_ia.column(x), pair_ia.column(y));
        if (induced != expected) {
          rep.recovers_cobracket = false;
          rep.witness = i;
          break;
        }
      }
  }
  return rep;
}

}  // namespace liebialg
