#pragma once

// Finite-dimensional Lie algebras given by structure constants, with an
// optional matrix realization used for the adjoint action of group elements.

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "liebialg/linalg.hpp"

namespace liebialg {

template <Field F>
struct Term {
  std::size_t index;
  F coeff;
  friend bool operator==(const Term&, const Term&) = default;
};

/// [e_i, e_j] = sum of the listed terms. Only i < j is given; the rest
/// follows from antisymmetry.
template <Field F>
struct BracketEntry {
  std::size_t i;
  std::size_t j;
  std::vector<Term<F>> terms;
};

namespace detail {

/// Coordinates of matrices in the span of a fixed list of matrices. The
/// list is flattened into the columns of a tall matrix; a set of
/// independent rows is inverted once.
template <Field F>
class SpanCoordinates {
 public:
  SpanCoordinates() = default;

  explicit SpanCoordinates(const std::vector<Matrix<F>>& mats) {
    if (mats.empty()) return;
    side_ = mats.front().rows();
    const std::size_t entries = side_ * side_;
    columns_.resize(mats.size());
    Matrix<F> transposed(mats.size(), entries);
    for (std::size_t b = 0; b < mats.size(); ++b) {
      if (mats[b].rows() != side_ || mats[b].cols() != side_)
        throw InputError("realization matrices must be square of a common size");
      for (std::size_t e = 0; e < entries; ++e) {
        const F& v = mats[b].entries()[e];
        transposed(b, e) = v;
        if (!v.is_zero()) columns_[b].push_back({e, v});
      }
    }
    auto res = rref_with_pivots(transposed);
    if (res.rank < mats.size()) throw InputError("realization matrices are linearly dependent");
    rows_ = res.pivots;
    Matrix<F> square(mats.size(), mats.size());
    for (std::size_t r = 0; r < rows_.size(); ++r)
      for (std::size_t b = 0; b < mats.size(); ++b) square(r, b) = transposed(b, rows_[r]);
    inverse_ = inverse(square);
  }

  [[nodiscard]] std::size_t side() const { return side_; }

  /// Coordinates of m, or nothing if m leaves the span.
  [[nodiscard]] std::optional<Vector<F>> coordinates(const Matrix<F>& m) const {
    if (m.rows() != side_ || m.cols() != side_) return std::nullopt;
    Vector<F> picked;
    picked.reserve(rows_.size());
    for (auto r : rows_) picked.push_back(m.entries()[r]);
    Vector<F> coords = inverse_ * picked;
    std::vector<F> rebuilt(side_ * side_, F::zero());
    for (std::size_t b = 0; b < coords.size(); ++b) {
      if (coords[b].is_zero()) continue;
      for (const auto& t : columns_[b]) rebuilt[t.index] += coords[b] * t.coeff;
    }
    if (rebuilt != m.entries()) return std::nullopt;
    return coords;
  }

 private:
  std::size_t side_ = 0;
  std::vector<std::size_t> rows_;
  Matrix<F> inverse_;
  std::vector<std::vector<Term<F>>> columns_;
};

template <Field F>
Matrix<F> commutator(const Matrix<F>& a, const Matrix<F>& b) {
  return a * b - b * a;
}

}  // namespace detail

template <Field F>
class LieAlgebra {
 public:
  LieAlgebra() = default;

  LieAlgebra(std::vector<std::string> names, const std::vector<BracketEntry<F>>& brackets,
             std::vector<Matrix<F>> realization = {})
      : names_(std::move(names)), table_(names_.size() * names_.size()) {
    const std::size_t n = names_.size();
    std::vector<bool> seen(n * n, false);
    for (const auto& entry : brackets) {
      if (entry.i >= n || entry.j >= n)
        throw InputError("bracket index out of range: (" + std::to_string(entry.i) + "," +
                         std::to_string(entry.j) + ")");
      if (entry.i >= entry.j)
        throw InputError("bracket entries must have i < j, got (" + std::to_string(entry.i) + "," +
                         std::to_string(entry.j) + ")");
      if (seen[entry.i * n + entry.j])
        throw InputError("duplicate bracket entry (" + std::to_string(entry.i) + "," +
                         std::to_string(entry.j) + ")");
      seen[entry.i * n + entry.j] = true;
      Vector<F> v(n, F::zero());
      for (const auto& t : entry.terms) {
        if (t.index >= n) throw InputError("bracket result index out of range: " + std::to_string(t.index));
        v[t.index] += t.coeff;
      }
      set_bracket(entry.i, entry.j, v);
    }
    if (!realization.empty()) attach_realization(std::move(realization));
  }

  /// Structure constants computed from commutators of the given matrices,
  /// which become the realization.
  static LieAlgebra from_matrices(std::vector<std::string> names, std::vector<Matrix<F>> mats) {
    if (names.size() != mats.size()) throw InputError("one name per realization matrix is required");
    LieAlgebra a;
    a.names_ = std::move(names);
    const std::size_t n = a.names_.size();
    a.table_.assign(n * n, {});
    a.realization_ = std::move(mats);
    a.coords_ = detail::SpanCoordinates<F>(a.realization_);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        auto c = a.coords_.coordinates(detail::commutator(a.realization_[i], a.realization_[j]));
        if (!c)
          throw InputError("commutator of " + a.names_[i] + " and " + a.names_[j] +
                           " leaves the span of the realization");
        a.set_bracket(i, j, *c);
      }
    return a;
  }

  [[nodiscard]] std::size_t dim() const { return names_.size(); }
  [[nodiscard]] const std::vector<std::string>& basis_names() const { return names_; }
  [[nodiscard]] bool has_realization() const { return !realization_.empty(); }
  [[nodiscard]] const std::vector<Matrix<F>>& realization() const { return realization_; }

  /// Nonzero terms of [e_i, e_j].
  [[nodiscard]] const std::vector<Term<F>>& basis_bracket(std::size_t i, std::size_t j) const {
    return table_[i * dim() + j];
  }

  [[nodiscard]] F structure_constant(std::size_t i, std::size_t j, std::size_t k) const {
    for (const auto& t : basis_bracket(i, j))
      if (t.index == k) return t.coeff;
    return F::zero();
  }

  [[nodiscard]] Vector<F> bracket(const Vector<F>& x, const Vector<F>& y) const {
    check_dim(x, "x");
    check_dim(y, "y");
    Vector<F> out(dim(), F::zero());
    for (std::size_t i = 0; i < dim(); ++i) {
      if (x[i].is_zero()) continue;
      for (std::size_t j = 0; j < dim(); ++j) {
        if (y[j].is_zero()) continue;
        F c = x[i] * y[j];
        for (const auto& t : basis_bracket(i, j)) out[t.index] += c * t.coeff;
      }
    }
    return out;
  }

  /// Matrix of ad_x in the basis: column j holds [x, e_j].
  [[nodiscard]] Matrix<F> ad_matrix(const Vector<F>& x) const {
    check_dim(x, "x");
    Matrix<F> m(dim(), dim());
    for (std::size_t i = 0; i < dim(); ++i) {
      if (x[i].is_zero()) continue;
      for (std::size_t j = 0; j < dim(); ++j)
        for (const auto& t : basis_bracket(i, j)) m(t.index, j) += x[i] * t.coeff;
    }
    return m;
  }

  /// B(x, y) = Tr(ad_x ad_y).
  [[nodiscard]] F killing_form(const Vector<F>& x, const Vector<F>& y) const {
    Matrix<F> ax = ad_matrix(x);
    Matrix<F> ay = ad_matrix(y);
    F s = F::zero();
    for (std::size_t i = 0; i < dim(); ++i)
      for (std::size_t j = 0; j < dim(); ++j)
        if (!ax(i, j).is_zero() && !ay(j, i).is_zero()) s += ax(i, j) * ay(j, i);
    return s;
  }

  /// Image of a vector in the realization.
  [[nodiscard]] Matrix<F> to_matrix(const Vector<F>& x) const {
    require_realization();
    check_dim(x, "x");
    const std::size_t side = realization_.front().rows();
    Matrix<F> m(side, side);
    for (std::size_t i = 0; i < dim(); ++i)
      if (!x[i].is_zero()) m = m + x[i] * realization_[i];
    return m;
  }

  /// Coordinates of a matrix in the realization basis; throws if the matrix
  /// is outside the span.
  [[nodiscard]] Vector<F> coordinates(const Matrix<F>& m) const {
    require_realization();
    auto c = coords_.coordinates(m);
    if (!c) throw InputError("matrix lies outside the span of the realization");
    return *c;
  }

  /// Matrix of Ad_g: column i holds the coordinates of g e_i g^{-1}.
  [[nodiscard]] Matrix<F> adjoint_group_matrix(const Matrix<F>& g) const {
    require_realization();
    const std::size_t side = realization_.front().rows();
    if (g.rows() != side || g.cols() != side)
      throw InputError("group element must be " + std::to_string(side) + "x" + std::to_string(side));
    if (determinant(g).is_zero()) throw InputError("group element is singular");
    Matrix<F> g_inv = inverse(g);
    Matrix<F> out(dim(), dim());
    for (std::size_t i = 0; i < dim(); ++i) {
      auto c = coords_.coordinates(g * realization_[i] * g_inv);
      if (!c)
        throw InputError("conjugate of " + names_[i] + " leaves the span of the realization");
      for (std::size_t k = 0; k < dim(); ++k) out(k, i) = (*c)[k];
    }
    return out;
  }

  [[nodiscard]] Vector<F> adjoint_group_action(const Matrix<F>& g, const Vector<F>& x) const {
    check_dim(x, "x");
    return adjoint_group_matrix(g) * x;
  }

  void check_dim(const Vector<F>& v, const std::string& what) const {
    if (v.size() != dim())
      throw InputError("dimension mismatch for " + what + ": expected " + std::to_string(dim()) + ", got " +
                       std::to_string(v.size()));
  }

 private:
  void set_bracket(std::size_t i, std::size_t j, const Vector<F>& v) {
    auto& fwd = table_[i * dim() + j];
    auto& bwd = table_[j * dim() + i];
    fwd.clear();
    bwd.clear();
    for (std::size_t k = 0; k < v.size(); ++k) {
      if (v[k].is_zero()) continue;
      fwd.push_back({k, v[k]});
      bwd.push_back({k, -v[k]});
    }
  }

  void attach_realization(std::vector<Matrix<F>> mats) {
    if (mats.size() != dim())
      throw InputError("realization has " + std::to_string(mats.size()) + " matrices for dimension " +
                       std::to_string(dim()));
    realization_ = std::move(mats);
    coords_ = detail::SpanCoordinates<F>(realization_);
  }

  void require_realization() const {
    if (realization_.empty()) throw InputError("algebra has no matrix realization");
  }

  std::vector<std::string> names_;
  std::vector<std::vector<Term<F>>> table_;
  std::vector<Matrix<F>> realization_;
  detail::SpanCoordinates<F> coords_;
};

template <Field F>
Vector<F> bracket(const LieAlgebra<F>& a, const Vector<F>& x, const Vector<F>& y) {
  return a.bracket(x, y);
}

template <Field F>
Matrix<F> ad_matrix(const LieAlgebra<F>& a, const Vector<F>& x) {
  return a.ad_matrix(x);
}

template <Field F>
F killing_form(const LieAlgebra<F>& a, const Vector<F>& x, const Vector<F>& y) {
  return a.killing_form(x, y);
}

template <Field F>
Vector<F> adjoint_group_action(const LieAlgebra<F>& a, const Matrix<F>& g, const Vector<F>& x) {
  return a.adjoint_group_action(g, x);
}

struct JacobiResult {
  bool ok = true;
  std::optional<std::array<std::size_t, 3>> witness;
};

/// Checks [[e_i,e_j],e_k] + [[e_j,e_k],e_i] + [[e_k,e_i],e_j] = 0 for all
/// i < j < k and reports the first failing triple.
template <Field F>
JacobiResult jacobi_check(const LieAlgebra<F>& a) {
  const std::size_t n = a.dim();
  auto add_nested = [&](Vector<F>& acc, std::size_t i, std::size_t j, std::size_t k) {
    for (const auto& t : a.basis_bracket(i, j))
      for (const auto& u : a.basis_bracket(t.index, k)) acc[u.index] += t.coeff * u.coeff;
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        Vector<F> acc(n, F::zero());
        add_nested(acc, i, j, k);
        add_nested(acc, j, k, i);
        add_nested(acc, k, i, j);
        if (!is_zero(acc)) return {false, std::array<std::size_t, 3>{i, j, k}};
      }
  return {};
}

/// True iff the realization's commutators reproduce the structure constants.
template <Field F>
bool realization_matches(const LieAlgebra<F>& a) {
  if (!a.has_realization()) return true;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = i + 1; j < a.dim(); ++j) {
      Matrix<F> c = detail::commutator(a.realization()[i], a.realization()[j]);
      if (c != a.to_matrix(a.bracket(unit_vector<F>(a.dim(), i), unit_vector<F>(a.dim(), j)))) return false;
    }
  return true;
}

}  // namespace liebialg
