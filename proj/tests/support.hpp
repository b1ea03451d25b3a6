#pragma once

// Shared helpers and hand-rolled random generators for the test suites.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "liebialg/algebras.hpp"
#include "liebialg/classical.hpp"

namespace testing_support {

using namespace liebialg;
using Q = Rational;
using Qi = GaussianRational;

inline Q q(long long n, long long d = 1) { return Q(mpz_class(std::to_string(n)), mpz_class(std::to_string(d))); }

template <Field F>
Vector<F> vec(std::initializer_list<long long> xs) {
  Vector<F> v;
  for (auto x : xs) v.push_back(F(Q(x)));
  return v;
}

template <Field F>
Subspace<F> span(std::size_t n, std::initializer_list<std::initializer_list<long long>> rows) {
  std::vector<Vector<F>> s;
  for (auto r : rows) s.push_back(vec<F>(r));
  return Subspace<F>(n, s);
}

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  bool coin(int percent = 50) { return integer(1, 100) <= percent; }

  Q rational(int range = 5, int den = 4) { return q(integer(-range, range), integer(1, den)); }
  Q small_int(int range = 3) { return Q(integer(-range, range)); }

  template <Field F>
  F scalar(int range = 5, int den = 4) {
    if constexpr (std::is_same_v<F, Q>)
      return rational(range, den);
    else
      return F(rational(range, den), rational(range, den));
  }

  template <Field F>
  Vector<F> vector(std::size_t n, int range = 3, int den = 2) {
    Vector<F> v;
    for (std::size_t i = 0; i < n; ++i) v.push_back(coin(70) ? scalar<F>(range, den) : F::zero());
    return v;
  }

  template <Field F>
  Multivector<F> multivector(std::size_t n, std::size_t degree, int range = 3) {
    if (degree == 0) return Multivector<F>::scalar(n, scalar<F>(range, 2));
    Multivector<F> m(n, degree);
    std::vector<std::size_t> idx(degree);
    int terms = integer(1, 4);
    for (int t = 0; t < terms; ++t) {
      for (auto& i : idx) i = static_cast<std::size_t>(integer(0, static_cast<int>(n) - 1));
      auto key = WedgeKey::sorted(idx);
      if (!key) continue;
      m.add_term(key->first.indices(), F(Q(key->second)) * scalar<F>(range, 2));
    }
    return m;
  }

  template <Field F>
  Matrix<F> matrix(std::size_t r, std::size_t c, int range = 3) {
    Matrix<F> m(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j)
        if (coin(60)) m(i, j) = scalar<F>(range, 2);
    return m;
  }

  /// Random invertible matrix with small entries.
  template <Field F>
  Matrix<F> invertible(std::size_t n) {
    for (;;) {
      auto m = matrix<F>(n, n, 2);
      for (std::size_t i = 0; i < n; ++i) m(i, i) = m(i, i) + F::one();
      if (!determinant(m).is_zero()) return m;
    }
  }

  /// Random element of SL(2, Q).
  Matrix<Q> sl2_element() {
    for (;;) {
      Q a = rational(3, 3), b = rational(3, 3), c = rational(3, 3);
      if (a.is_zero()) continue;
      // d chosen so that ad - bc = 1.
      Q d = (Q(1) + b * c) / a;
      int shape = integer(0, 3);
      if (shape == 1) c = Q(0), d = Q(1) / a;
      if (shape == 2) b = Q(0), d = Q(1) / a;
      if (shape == 3) b = Q(0), c = Q(0), d = Q(1) / a;
      return Matrix<Q>::from_row_major({a, b, c, d});
    }
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

/// Re-expresses an algebra in the basis given by the columns of p.
template <Field F>
LieAlgebra<F> change_basis(const LieAlgebra<F>& a, const Matrix<F>& p) {
  const std::size_t n = a.dim();
  Matrix<F> pinv = inverse(p);
  std::vector<BracketEntry<F>> entries;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      auto br = pinv * a.bracket(p.column(i), p.column(j));
      BracketEntry<F> e{i, j, {}};
      for (std::size_t k = 0; k < n; ++k)
        if (!br[k].is_zero()) e.terms.push_back({k, br[k]});
      entries.push_back(e);
    }
  return LieAlgebra<F>(a.basis_names(), entries);
}

/// Direct sum of two algebras.
template <Field F>
LieAlgebra<F> direct_sum(const LieAlgebra<F>& a, const LieAlgebra<F>& b) {
  std::vector<std::string> names = a.basis_names();
  for (const auto& nm : b.basis_names()) names.push_back(nm + "'");
  std::vector<BracketEntry<F>> entries;
  const std::size_t n = a.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) entries.push_back({i, j, a.basis_bracket(i, j)});
  for (std::size_t i = 0; i < b.dim(); ++i)
    for (std::size_t j = i + 1; j < b.dim(); ++j) {
      std::vector<Term<F>> t;
      for (const auto& term : b.basis_bracket(i, j)) t.push_back({term.index + n, term.coeff});
      entries.push_back({n + i, n + j, t});
    }
  return LieAlgebra<F>(names, entries);
}

/// Upper-triangular 3x3 matrices (solvable, dim 6).
template <Field F>
LieAlgebra<F> borel3() {
  std::vector<Matrix<F>> mats;
  std::vector<std::string> names;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = i; j < 3; ++j) {
      Matrix<F> m(3, 3);
      m(i, j) = F::one();
      mats.push_back(m);
      names.push_back("E" + std::to_string(i + 1) + std::to_string(j + 1));
    }
  return LieAlgebra<F>::from_matrices(names, mats);
}

/// A pool of Lie algebras of dimension at most 6.
template <Field F>
std::vector<LieAlgebra<F>> algebra_pool() {
  return {algebras::sl2<F>(),
          algebras::su2<F>(),
          algebras::heisenberg<F>(),
          algebras::abelian<F>(2),
          direct_sum(algebras::sl2<F>(), algebras::abelian<F>(1)),
          direct_sum(algebras::sl2<F>(), algebras::su2<F>()),
          direct_sum(algebras::sl2<F>(), algebras::sl2<F>()),
          direct_sum(algebras::heisenberg<F>(), algebras::abelian<F>(2)),
          borel3<F>()};
}

/// Random algebra from the pool in a random basis.
template <Field F>
LieAlgebra<F> random_algebra(Gen& gen, std::size_t max_dim = 6) {
  static const auto pool = algebra_pool<F>();
  for (;;) {
    const auto& a = pool[static_cast<std::size_t>(gen.integer(0, static_cast<int>(pool.size()) - 1))];
    if (a.dim() > max_dim) continue;
    if (gen.coin(30)) return a;
    return change_basis(a, gen.invertible<F>(a.dim()));
  }
}

}  // namespace testing_support
