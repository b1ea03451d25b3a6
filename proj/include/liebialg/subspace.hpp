#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "liebialg/linalg.hpp"

namespace liebialg {

enum class Ambient { Algebra, Dual };

inline std::string to_string(Ambient a) { return a == Ambient::Algebra ? "g" : "g*"; }

/// A linear subspace of k^n stored as the nonzero rows of its reduced row
/// echelon basis. Two subspaces are equal iff these rows coincide.
template <Field F>
class Subspace {
 public:
  Subspace() = default;

  Subspace(std::size_t ambient_dim, const std::vector<Vector<F>>& spanning, Ambient ambient = Ambient::Algebra)
      : ambient_(ambient), n_(ambient_dim) {
    if (spanning.empty()) return;
    auto res = rref_with_pivots(Matrix<F>::from_rows(spanning, n_));
    for (std::size_t r = 0; r < res.rank; ++r) basis_.push_back(res.matrix.row(r));
    pivots_ = std::move(res.pivots);
  }

  static Subspace zero(std::size_t n, Ambient ambient = Ambient::Algebra) { return Subspace(n, {}, ambient); }

  static Subspace full(std::size_t n, Ambient ambient = Ambient::Algebra) {
    std::vector<Vector<F>> rows;
    for (std::size_t i = 0; i < n; ++i) rows.push_back(unit_vector<F>(n, i));
    return Subspace(n, rows, ambient);
  }

  [[nodiscard]] Ambient ambient() const { return ambient_; }
  [[nodiscard]] std::size_t ambient_dim() const { return n_; }
  [[nodiscard]] std::size_t dim() const { return basis_.size(); }
  [[nodiscard]] const std::vector<Vector<F>>& basis() const& { return basis_; }
  [[nodiscard]] std::vector<Vector<F>> basis() && { return std::move(basis_); }

  /// Membership by reduction against the echelon basis.
  [[nodiscard]] bool contains(const Vector<F>& v) const {
    if (v.size() != n_) throw InputError("membership test with vector of wrong length");
    Vector<F> w = v;
    for (std::size_t r = 0; r < basis_.size(); ++r) {
      F c = w[pivots_[r]];
      if (c.is_zero()) continue;
      for (std::size_t k = pivots_[r]; k < n_; ++k)
        if (!basis_[r][k].is_zero()) w[k] -= c * basis_[r][k];
    }
    return is_zero(w);
  }

  [[nodiscard]] bool contains(const Subspace& other) const {
    for (const auto& v : other.basis_)
      if (!contains(v)) return false;
    return true;
  }

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.n_ == b.n_ && a.basis_ == b.basis_;
  }

 private:
  Ambient ambient_ = Ambient::Algebra;
  std::size_t n_ = 0;
  std::vector<Vector<F>> basis_;
  std::vector<std::size_t> pivots_;
};

/// The functionals vanishing on s, as a subspace of the dual space.
template <Field F>
Subspace<F> annihilator(const Subspace<F>& s) {
  const Ambient dual = s.ambient() == Ambient::Algebra ? Ambient::Dual : Ambient::Algebra;
  if (s.dim() == 0) return Subspace<F>::full(s.ambient_dim(), dual);
  return Subspace<F>(s.ambient_dim(), kernel_basis(Matrix<F>::from_rows(s.basis(), s.ambient_dim())), dual);
}

}  // namespace liebialg
