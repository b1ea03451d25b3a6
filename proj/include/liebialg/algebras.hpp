#pragma once

// Small named Lie algebras and r-matrices used in examples and tests.

#include <string>
#include <vector>

#include "liebialg/multivector.hpp"

namespace liebialg::algebras {

/// sl(2,R) on e1 = diag(1,-1)/2, e2 = [[0,1],[-1,0]]/2, e3 = [[0,1],[1,0]]/2:
/// [e1,e2] = e3, [e2,e3] = e1, [e3,e1] = -e2.
template <Field F>
LieAlgebra<F> sl2() {
  const F h = F::one() / F(Rational(2));
  auto mat = [&](int a, int b, int c, int d) {
    return Matrix<F>::from_row_major({h * F(Rational(a)), h * F(Rational(b)), h * F(Rational(c)), h * F(Rational(d))});
  };
  return LieAlgebra<F>::from_matrices({"e1", "e2", "e3"}, {mat(1, 0, 0, -1), mat(0, 1, -1, 0), mat(0, 1, 1, 0)});
}

/// su(2): [e1,e2] = e3, [e2,e3] = e1, [e3,e1] = e2.
template <Field F>
LieAlgebra<F> su2() {
  return LieAlgebra<F>({"e1", "e2", "e3"}, {{0, 1, {{2, F::one()}}}, {1, 2, {{0, F::one()}}}, {0, 2, {{1, -F::one()}}}});
}

/// Heisenberg algebra: [e1,e2] = e3.
template <Field F>
LieAlgebra<F> heisenberg() {
  return LieAlgebra<F>({"e1", "e2", "e3"}, {{0, 1, {{2, F::one()}}}});
}

/// Abelian algebra of dimension n.
template <Field F>
LieAlgebra<F> abelian(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("e" + std::to_string(i + 1));
  return LieAlgebra<F>(names, {});
}

/// pi = 2 e2 ^ e3, an r-matrix for both sl(2) and su(2).
template <Field F>
Multivector<F> two_e2_e3() {
  return Multivector<F>::monomial(3, {1, 2}, F(Rational(2)));
}

}  // namespace liebialg::algebras
